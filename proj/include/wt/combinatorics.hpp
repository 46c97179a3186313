#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "wt/weyl.hpp"

namespace wt {

/// A^n_{jk}: coefficients of (X_s)^n = sum A^n_{jk} y^{n-j-k} (ix)^{j+k} q^k dq^{n-2j-k}.
struct CoeffTableA {
  unsigned n = 0;
  std::map<std::pair<unsigned, unsigned>, Scalar> entries;  // (j, k)

  [[nodiscard]] Scalar at(unsigned j, unsigned k) const;
};

/// s~(n,i,r): coefficient of q^{i-r} d^{n-i-r} q~^r in (q + d)^n with q~ = [d, q] central.
struct StirlingTildeTable {
  unsigned n = 0;
  std::map<std::pair<unsigned, unsigned>, mpz_class> entries;  // (i, r)

  [[nodiscard]] mpz_class at(unsigned i, unsigned r) const;
};

/// Table from the four-term recurrence, starting at A^0_{00} = 1.
CoeffTableA a_table(unsigned n);
/// X_s composed with itself n times (identity for n = 0), in XY.
WeylOperator xs_power_expand(unsigned n);
/// Reads A^n_{jk} off an expansion of (X_s)^n.
CoeffTableA a_table_from_expansion(const WeylOperator& expansion, unsigned n);

/// s(n,m) = m s(n-1,m) + s(n-1,m-1); zero outside 1 <= m <= n (s(0,0) = 1).
mpz_class stirling(unsigned n, unsigned m);
/// Coefficient of q^m dq^m in the normal-ordered (q dq)^n.
mpz_class stirling_from_expansion(unsigned n, unsigned m);

/// Expansion of (q + d)^n in the algebra generated by q, d and central q~.
StirlingTildeTable stirling_tilde(unsigned n);
/// s~(n,i,r) = s~(n-1,i-1,r) + s~(n-1,i,r) + (i-r+1) s~(n-1,i,r-1).
StirlingTildeTable stirling_tilde_recursive(unsigned n);

/// Row-major flat dump over the triangular support.
std::vector<std::string> flat_sequence(const CoeffTableA& t);
std::vector<std::string> flat_sequence(const StirlingTildeTable& t);

nlohmann::json to_json(const CoeffTableA& t);
nlohmann::json to_json(const StirlingTildeTable& t);
nlohmann::json stirling_json(unsigned n);
std::string to_text(const CoeffTableA& t);
std::string to_text(const StirlingTildeTable& t);
std::string stirling_text(unsigned n);

}  // namespace wt
