#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "wt/spinor.hpp"
#include "wt/weyl.hpp"

namespace wt {

/// Malformed JSON input; `path` names the offending field, e.g. "terms[2].q[0]".
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& path, const std::string& message)
      : std::runtime_error("schema error at " + path + ": " + message), path_(path) {}
  [[nodiscard]] const std::string& path() const { return path_; }

 private:
  std::string path_;
};

std::string to_text(const QPoly& p);
std::string to_text(const Spinor& s);
std::string to_text(const WeylOperator& op);

std::string to_latex(const Scalar& c);
std::string to_latex(const QPoly& p);
std::string to_latex(const Spinor& s);
std::string to_latex(const WeylOperator& op);

/// [re_num, re_den, im_num, im_den]. Integers outside int64 are written as
/// decimal strings; the reader accepts both forms.
nlohmann::json to_json(const Scalar& c);
Scalar scalar_from_json(const nlohmann::json& j, const std::string& path = "$");

/// {"basis": "xy"|"zzbar", "weight": "exp(-q^2/2)", "terms": [{"e1","e2","q"}]}
nlohmann::json to_json(const Spinor& s);
Spinor spinor_from_json(const nlohmann::json& j);

nlohmann::json to_json(const WeylOperator& op);

}  // namespace wt
