#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "wt/linalg.hpp"
#include "wt/weyl.hpp"

namespace wt {

inline constexpr int kSchemaVersion = 1;

struct CheckResult {
  std::string id;
  std::string anchor;  // short topic tag of the identity being checked
  bool pass = false;
  std::string witness;  // empty on pass
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;

  [[nodiscard]] bool all_pass() const;
  [[nodiscard]] int exit_code() const { return all_pass() ? 0 : 1; }
};

nlohmann::json to_json(const VerificationReport& r);
std::string to_text(const VerificationReport& r);
std::string to_latex(const VerificationReport& r);

/// The operators the suites check, by registry name, in XY (ds2 in ZZBAR).
class OperatorTable {
 public:
  static OperatorTable standard();

  [[nodiscard]] const WeylOperator& at(const std::string& name) const;
  /// Adds the identity to the named entry; used to exercise failure paths.
  void perturb(const std::string& name);

 private:
  std::map<std::string, WeylOperator> ops_;
};

const std::vector<std::string>& suite_names();

/// Runs "algebra", "kernels", "combinatorics" or "all". Checks are independent
/// and may run concurrently under Exec::Parallel; the report order is fixed.
VerificationReport run_suite(const std::string& suite, const OperatorTable& table,
                             Exec exec = Exec::Serial);

}  // namespace wt
