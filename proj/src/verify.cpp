#include "wt/verify.hpp"

#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "wt/combinatorics.hpp"
#include "wt/kernels.hpp"
#include "wt/operators.hpp"
#include "wt/parser.hpp"
#include "wt/render.hpp"

namespace wt {

namespace {

struct Outcome {
  bool pass = true;
  std::string witness;

  void fail(const std::string& w) {
    if (pass) witness = w;
    pass = false;
  }
};

struct CheckSpec {
  std::string id;
  std::string anchor;
  std::function<Outcome()> run;
};

Outcome expect_op(const WeylOperator& got, const WeylOperator& want) {
  Outcome o;
  if (got != want) o.fail("got " + to_text(got) + "; expected " + to_text(want));
  return o;
}

Outcome expect_spinor(const Spinor& got, const Spinor& want, const std::string& label = "") {
  Outcome o;
  if (got != want) {
    o.fail((label.empty() ? "" : label + ": ") + "got " + to_text(got) + "; expected " + to_text(want));
  }
  return o;
}

WeylOperator plus_one(const WeylOperator& op) { return op + WeylOperator::identity(op.basis()); }

Spinor one(Basis b) { return Spinor::term(b, 0, 0, QPoly(Scalar(1))); }
Spinor q_one(Basis b) { return Spinor::term(b, 0, 0, QPoly::monomial(Scalar(1), 1)); }

Spinor apply_power(const WeylOperator& op, unsigned n, Spinor s) {
  for (unsigned t = 0; t < n; ++t) s = apply(op, s);
  return s;
}

// Coordinate vectors of a family of homogeneous spinors over their joint support.
std::pair<std::vector<std::vector<Scalar>>, std::vector<std::vector<Scalar>>> coordinates(
    const std::vector<Spinor>& a, const std::vector<Spinor>& b, std::size_t& dim) {
  std::map<std::tuple<unsigned, unsigned, unsigned>, std::size_t> index;
  for (const auto* fam : {&a, &b}) {
    for (const auto& s : *fam) {
      for (const auto& [e, p] : s.terms()) {
        for (int k = 0; k <= p.degree(); ++k) index.try_emplace({e.first, e.second, k}, 0);
      }
    }
  }
  std::size_t n = 0;
  for (auto& [key, v] : index) v = n++;
  dim = n;
  auto convert = [&](const std::vector<Spinor>& fam) {
    std::vector<std::vector<Scalar>> out;
    for (const auto& s : fam) {
      std::vector<Scalar> v(n);
      for (const auto& [e, p] : s.terms()) {
        for (int k = 0; k <= p.degree(); ++k) v[index.at({e.first, e.second, k})] = p.coeff(k);
      }
      out.push_back(std::move(v));
    }
    return out;
  };
  return {convert(a), convert(b)};
}

Spinor random_spinor(std::mt19937& rng, unsigned l, unsigned qdeg, std::optional<Parity> parity) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  Spinor s(Basis::XY);
  for (unsigned a = 0; a <= l; ++a) {
    for (unsigned k = 0; k <= qdeg; ++k) {
      if (parity == Parity::Even && k % 2) continue;
      if (parity == Parity::Odd && k % 2 == 0) continue;
      s.add(a, l - a, k, Scalar(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))));
    }
  }
  return s;
}

std::vector<CheckSpec> algebra_checks(const OperatorTable& t) {
  std::vector<CheckSpec> c;
  c.push_back({"sl2.euler-ds", "sl2 triple", [&t] {
                 return expect_op(commutator(plus_one(t.at("euler")), t.at("ds")), -t.at("ds"));
               }});
  c.push_back({"sl2.euler-xs", "sl2 triple", [&t] {
                 return expect_op(commutator(plus_one(t.at("euler")), t.at("xs")), t.at("xs"));
               }});
  // With the operators normalized as displayed, [D_s, X_s] carries a factor -i.
  c.push_back({"sl2.ds-xs", "sl2 triple", [&t] {
                 return expect_op(commutator(t.at("ds"), t.at("xs")), plus_one(t.at("euler")) * -Scalar::i());
               }});
  c.push_back({"sl2.ids-xs", "sl2 triple", [&t] {
                 return expect_op(commutator(t.at("ds") * Scalar::i(), t.at("xs")), plus_one(t.at("euler")));
               }});
  c.push_back({"mp2.x-y", "mp2 relations", [&t] {
                 return expect_op(commutator(t.at("rhoX"), t.at("rhoY")), t.at("rhoH"));
               }});
  c.push_back({"mp2.h-x", "mp2 relations", [&t] {
                 return expect_op(commutator(t.at("rhoH"), t.at("rhoX")), t.at("rhoX") * Scalar(2));
               }});
  c.push_back({"mp2.h-y", "mp2 relations", [&t] {
                 return expect_op(commutator(t.at("rhoH"), t.at("rhoY")), t.at("rhoY") * Scalar(-2));
               }});
  for (const char* a : {"xs", "ds"}) {
    for (const char* b : {"rhoX", "rhoY", "rhoH"}) {
      c.push_back({std::string("cross.") + a + "-" + b, "Howe dual pair", [&t, a, b] {
                     return expect_op(commutator(t.at(a), t.at(b)), WeylOperator(Basis::XY));
                   }});
    }
  }
  c.push_back({"casimir.generators", "Casimir", [&t] {
                 const auto& x = t.at("rhoX");
                 const auto& y = t.at("rhoY");
                 const auto& h = t.at("rhoH");
                 const WeylOperator cas = plus_one(compose(h, h)) + compose(x, y) * Scalar(2) +
                                          compose(y, x) * Scalar(2);
                 return expect_op(cas, t.at("casimir"));
               }});
  c.push_back({"casimir.expanded", "Casimir", [&t] { return expect_op(t.at("casimir"), casimir_expanded()); }});
  for (const char* g : {"rhoX", "rhoY", "rhoH"}) {
    c.push_back({std::string("casimir.central-") + g, "Casimir", [&t, g] {
                   return expect_op(commutator(t.at("casimir"), t.at(g)), WeylOperator(Basis::XY));
                 }});
  }
  c.push_back({"zbasis.xs", "complex coordinates", [&t] {
                 return expect_op(change_basis(t.at("xs"), Basis::ZZBAR),
                                  parse_operator("1/2*i*(q - dq)*z + 1/2*i*(q + dq)*zbar"));
               }});
  c.push_back({"zbasis.ds", "complex coordinates", [&t] {
                 return expect_op(change_basis(t.at("ds"), Basis::ZZBAR),
                                  parse_operator("-((q + dq)*dz + (-q + dq)*dzbar)"));
               }});
  c.push_back({"zbasis.ts", "complex coordinates", [&t] {
                 return expect_op(change_basis(t.at("ts"), Basis::ZZBAR),
                                  parse_operator("(1 - q*dq - q^2)*dz + (1 - q*dq + q^2)*dzbar"));
               }});
  c.push_back({"zbasis.ds2", "square of D_s", [&t] {
                 const WeylOperator dz = change_basis(t.at("ds"), Basis::ZZBAR);
                 return expect_op(compose(dz, dz), t.at("ds2"));
               }});
  c.push_back({"zbasis.roundtrip", "complex coordinates", [&t] {
                 Outcome o;
                 for (const char* n : {"xs", "ds", "ts", "ts2", "casimir"}) {
                   if (change_basis(change_basis(t.at(n), Basis::ZZBAR), Basis::XY) != t.at(n)) {
                     o.fail(std::string("round trip changes ") + n);
                   }
                 }
                 return o;
               }});
  c.push_back({"weyl.stirling-square", "normal ordering", [] {
                 return expect_op(power(parse_operator("q*dq"), 2), parse_operator("q^2*dq^2 + q*dq"));
               }});
  return c;
}

std::vector<CheckSpec> kernel_checks(const OperatorTable& t) {
  std::vector<CheckSpec> c;
  c.push_back({"display.ts-xs-gauss", "T_s on X_s powers", [&t] {
                 const char* want[] = {"0", "0", "q^2*x + i*y + i*q^2*y", "3*i*q^3*x^2 - 6*q^3*x*y - 3*i*q^3*y^2"};
                 Outcome o;
                 for (unsigned n = 0; n < 4; ++n) {
                   const Spinor got = apply(t.at("ts"), apply_power(t.at("xs"), n, one(Basis::XY)));
                   auto r = expect_spinor(got, parse_spinor(want[n]), "n=" + std::to_string(n));
                   if (!r.pass) o.fail(r.witness);
                 }
                 return o;
               }});
  c.push_back({"display.ts-xs-q-gauss", "T_s on X_s powers", [&t] {
                 const char* want[] = {"0", "0", "q^3*x + i*q^3*y",
                                       "3*i*q^4*x^2 + 6*q^2*x*y - 6*q^4*x*y + 3*i*y^2 + 6*i*q^2*y^2 - 3*i*q^4*y^2"};
                 Outcome o;
                 for (unsigned n = 0; n < 4; ++n) {
                   const Spinor got = apply(t.at("ts"), apply_power(t.at("xs"), n, q_one(Basis::XY)));
                   auto r = expect_spinor(got, parse_spinor(want[n]), "n=" + std::to_string(n));
                   if (!r.pass) o.fail(r.witness);
                 }
                 return o;
               }});
  c.push_back({"exclusion.plus", "T_s on X_s powers", [&t] {
                 Outcome o;
                 for (unsigned n = 2; n <= 8; ++n) {
                   for (unsigned m = 0; m <= 4; ++m) {
                     const Spinor s = apply_power(t.at("xs"), n, monogenic_plus(m));
                     const Scalar got = coefficient_of(apply(t.at("ts"), s), n + m - 1, 0, n);
                     const Scalar want = -Scalar::i().pow(n) * Scalar(Rational((n + 2 * m) * (n - 1), 2));
                     if (got != want) {
                       o.fail("n=" + std::to_string(n) + " m=" + std::to_string(m) + ": " + got.str() + " vs " + want.str());
                     }
                   }
                 }
                 return o;
               }});
  c.push_back({"exclusion.minus", "odd monogenics not twistor", [&t] {
                 Outcome o;
                 const WeylOperator tz = change_basis(t.at("ts"), Basis::ZZBAR);
                 if (!apply(tz, monogenic_minus(0)).is_zero()) o.fail("m=0 not annihilated");
                 for (unsigned m = 1; m <= 8; ++m) {
                   if (apply(tz, monogenic_minus(m)).coeff(0, m - 1, 3).is_zero()) {
                     o.fail("q^3 zbar^(m-1) coefficient vanishes at m=" + std::to_string(m));
                   }
                 }
                 return o;
               }});
  c.push_back({"monogenic.plus", "even monogenics", [&t] {
                 Outcome o;
                 for (unsigned m = 0; m <= 8; ++m) {
                   const Spinor s = monogenic_plus(m);
                   if (!apply(t.at("ds"), s).is_zero()) o.fail("D_s fails at m=" + std::to_string(m));
                   if (apply(t.at("ts"), s).is_zero() != (m == 0)) o.fail("T_s kernel membership wrong at m=" + std::to_string(m));
                 }
                 return o;
               }});
  c.push_back({"monogenic.minus", "odd monogenics", [&t] {
                 Outcome o;
                 for (unsigned m = 0; m <= 8; ++m) {
                   const Spinor s = change_basis(monogenic_minus(m), Basis::XY);
                   if (!apply(t.at("ds"), s).is_zero()) o.fail("D_s fails at m=" + std::to_string(m));
                   const Spinor z = monogenic_minus(m);
                   const Scalar top = z.coeff(m, 0, 2 * m + 1);
                   const Scalar want(Rational(mpz_class(1) << m, double_factorial_odd(m)));
                   if (z.q_degree() != static_cast<int>(2 * m + 1) || top != want) {
                     o.fail("top q coefficient at m=" + std::to_string(m) + ": " + top.str());
                   }
                 }
                 return o;
               }});
  c.push_back({"monogenic.minus-displays", "odd monogenics", [] {
                 const char* z[] = {"q*((-1 + 2/3*q^2)*z + zbar)",
                                    "q*((1 - 4/3*q^2 + 4/15*q^4)*z^2 + (-2 + 4/3*q^2)*z*zbar + zbar^2)",
                                    "q*((-1 + 2*q^2 - 12/15*q^4 + 8/105*q^6)*z^3 + (3 - 4*q^2 + 4/5*q^4)*z^2*zbar + "
                                    "(-3 + 2*q^2)*z*zbar^2 + zbar^3)"};
                 const char* xy[] = {"2/3*(q^3*(x + i*y) - 3*i*q*y)",
                                     "4/15*(q^5*(x + i*y)^2 + 10*q^3*y*(-i*x + y) - 15*q*y^2)",
                                     "8/105*(q^7*(x + i*y)^3 - 21*i*q^5*(x + i*y)^2*y - 105*q^3*(x + i*y)*y^2 + 105*i*q*y^3)"};
                 Outcome o;
                 for (unsigned m = 1; m <= 3; ++m) {
                   const Spinor s = monogenic_minus(m);
                   for (auto r : {expect_spinor(s, parse_spinor(z[m - 1]), "zzbar m=" + std::to_string(m)),
                                  expect_spinor(change_basis(s, Basis::XY), parse_spinor(xy[m - 1]),
                                                "xy m=" + std::to_string(m))}) {
                     if (!r.pass) o.fail(r.witness);
                   }
                 }
                 return o;
               }});
  c.push_back({"twistor.displays", "twistor solutions", [] {
                 const char* z[] = {"(-1 + 2*q^2)*z + zbar", "(1 - 4*q^2 + 4/3*q^4)*z^2 + (-2 + 4*q^2)*z*zbar + zbar^2",
                                    "(-1 + 6*q^2 - 4*q^4 + 8/15*q^6)*z^3 + (3 - 12*q^2 + 4*q^4)*z^2*zbar + "
                                    "(-3 + 6*q^2)*z*zbar^2 + zbar^3"};
                 const char* xy[] = {"2*(q^2*(x + i*y) - i*y)", "4/3*(q^4*(x + i*y)^2 + 6*q^2*y*(-i*x + y) - 3*y^2)",
                                     "8/15*(q^6*(x + i*y)^3 - 15*i*q^4*(x + i*y)^2*y - 45*q^2*(x + i*y)*y^2 + 15*i*y^3)"};
                 Outcome o;
                 for (unsigned m = 1; m <= 3; ++m) {
                   const Spinor s =
                       solve_recursion({KernelOp::Ts, Parity::Even}, m, QPoly(Scalar(1)), 2 * m + 2).basis.front();
                   for (auto r : {expect_spinor(s, parse_spinor(z[m - 1]), "zzbar m=" + std::to_string(m)),
                                  expect_spinor(change_basis(s, Basis::XY), parse_spinor(xy[m - 1]),
                                                "xy m=" + std::to_string(m))}) {
                     if (!r.pass) o.fail(r.witness);
                   }
                 }
                 return o;
               }});
  c.push_back({"twistor.basis", "twistor kernel", [&t] {
                 Outcome o;
                 const WeylOperator ds2 = change_basis(t.at("ds2"), Basis::XY);
                 for (unsigned m = 0; m <= 8; ++m) {
                   for (const auto& s : twistor_kernel_basis(m)) {
                     const std::string at = " at m=" + std::to_string(m);
                     if (!apply(t.at("ts"), s).is_zero()) o.fail("T_s" + at);
                     if (!apply(t.at("ts2"), s).is_zero()) o.fail("second component" + at);
                     if (!apply(ds2, s).is_zero()) o.fail("D_s^2" + at);
                   }
                 }
                 return o;
               }});
  c.push_back({"twistor.peeling", "twistor kernel", [&t] {
                 Outcome o;
                 for (unsigned m = 1; m <= 3; ++m) {
                   const Spinor s =
                       solve_recursion({KernelOp::Ts, Parity::Even}, m, QPoly(Scalar(1)), 2 * m + 2).basis.front();
                   const auto parts = howe_decompose(s);
                   if (parts.size() != 1 || parts[0].j != 1 ||
                       !proportionality(monogenic_minus(m - 1), parts[0].monogenic)) {
                     o.fail("m=" + std::to_string(m) + " does not peel to X_s of the odd monogenic");
                   }
                   if (!apply(change_basis(t.at("ts"), Basis::ZZBAR), s).is_zero()) o.fail("T_s at m=" + std::to_string(m));
                 }
                 return o;
               }});
  c.push_back({"image.xs-of-ds-kernel", "X_s maps ker D_s into ker T_s", [&t] {
                 Outcome o;
                 const WeylOperator xz = change_basis(t.at("xs"), Basis::ZZBAR);
                 const WeylOperator tz = change_basis(t.at("ts"), Basis::ZZBAR);
                 for (unsigned m = 0; m <= 6; ++m) {
                   for (const auto& s : recursion_exact_span({KernelOp::Ds, Parity::Odd}, m, 2 * m + 4)) {
                     if (!apply(tz, apply(xz, s)).is_zero()) o.fail("m=" + std::to_string(m) + ": " + to_text(s));
                   }
                 }
                 return o;
               }});
  c.push_back({"inclusion.ts-in-ds2", "ker T_s inside ker D_s^2", [&t] {
                 Outcome o;
                 const WeylOperator ds2 = change_basis(t.at("ds2"), Basis::XY);
                 for (unsigned m = 0; m <= 4; ++m) {
                   for (const auto& s : kernel_linear_solve(t.at("ts"), m, 2 * m + 4).basis) {
                     if (!apply(ds2, s).is_zero()) o.fail("m=" + std::to_string(m) + ": " + to_text(s));
                   }
                 }
                 return o;
               }});
  c.push_back({"recursion.agreement", "recursion relations", [] {
                 Outcome o;
                 for (const auto& kind : all_recursion_kinds()) {
                   for (unsigned m = 0; m <= 4; ++m) {
                     const unsigned qmax = 2 * m + 4;
                     const unsigned total = qmax + (kind.parity == Parity::Odd ? 1 : 0);
                     const auto rec = recursion_exact_span(kind, m, qmax);
                     const auto lin = kernel_linear_solve(kernel_operator(kind.op), m, total, kind.parity).basis;
                     std::size_t dim = 0;
                     const auto [a, b] = coordinates(rec, lin, dim);
                     if (!same_span(a, b, dim)) {
                       o.fail(to_string(kind) + " m=" + std::to_string(m) + ": recursion span " +
                              std::to_string(rec.size()) + " vs linear solve " + std::to_string(lin.size()));
                     }
                   }
                 }
                 return o;
               }});
  c.push_back({"holomorphic", "holomorphic solutions", [] {
                 Outcome o;
                 for (unsigned n = 0; n <= 10; ++n) {
                   if (!holomorphic_check(n)) o.fail("n=" + std::to_string(n));
                 }
                 return o;
               }});
  c.push_back({"howe.roundtrip", "Howe decomposition", [&t] {
                 Outcome o;
                 std::mt19937 rng(20240601);
                 for (unsigned trial = 0; trial < 24; ++trial) {
                   const unsigned l = trial % 5;
                   const Spinor s = random_spinor(rng, l, 5, trial % 2 ? Parity::Odd : Parity::Even);
                   const auto parts = howe_decompose(s);
                   for (const auto& p : parts) {
                     if (!apply(t.at("ds"), p.monogenic).is_zero()) o.fail("component not monogenic: " + to_text(p.monogenic));
                   }
                   if (howe_reconstruct(parts, Basis::XY) != s) o.fail("reconstruction of " + to_text(s));
                 }
                 return o;
               }});
  c.push_back({"casimir.scalar", "Casimir", [&t] {
                 Outcome o;
                 for (unsigned l = 0; l <= 4; ++l) {
                   for (unsigned j = 0; l + j <= 4; ++j) {
                     for (const Spinor& mono : {monogenic_plus(l), change_basis(monogenic_minus(l), Basis::XY)}) {
                       const Spinor v = apply_power(t.at("xs"), j, mono);
                       if (!proportionality(v, apply(t.at("casimir"), v))) {
                         o.fail("not an eigenvector at l=" + std::to_string(l) + " j=" + std::to_string(j));
                       }
                     }
                   }
                 }
                 return o;
               }});
  return c;
}

std::vector<CheckSpec> combinatorics_checks(const OperatorTable& t) {
  std::vector<CheckSpec> c;
  c.push_back({"A.expansion", "powers of X_s", [&t] {
                 Outcome o;
                 WeylOperator acc = WeylOperator::identity(Basis::XY);
                 for (unsigned n = 0; n <= 12; ++n) {
                   if (a_table(n).entries != a_table_from_expansion(acc, n).entries) o.fail("n=" + std::to_string(n));
                   acc = compose(acc, t.at("xs"));
                 }
                 return o;
               }});
  c.push_back({"A.diagonals", "powers of X_s", [] {
                 Outcome o;
                 for (unsigned n = 0; n <= 12; ++n) {
                   const auto a = a_table(n);
                   Scalar sum;
                   for (unsigned k = 0; k <= n; ++k) {
                     if (a.at(0, k) != Scalar(Rational(binomial(n, k), 1))) o.fail("binomial row n=" + std::to_string(n));
                     sum += a.at(0, k);
                   }
                   if (sum != Scalar(Rational(mpz_class(1) << n, 1))) o.fail("row sum n=" + std::to_string(n));
                   if (n >= 2 && a.at(1, n - 2) != Scalar(Rational(n * (n - 1), 2))) {
                     o.fail("second diagonal n=" + std::to_string(n));
                   }
                 }
                 return o;
               }});
  c.push_back({"stirling.expansion", "Stirling numbers", [] {
                 Outcome o;
                 for (unsigned n = 0; n <= 12; ++n) {
                   for (unsigned m = 0; m <= n; ++m) {
                     if (stirling(n, m) != stirling_from_expansion(n, m)) {
                       o.fail("s(" + std::to_string(n) + "," + std::to_string(m) + ")");
                     }
                   }
                 }
                 return o;
               }});
  c.push_back({"stilde.weyl", "generalized Stirling numbers", [] {
                 Outcome o;
                 const WeylOperator base = parse_operator("q + dq");
                 WeylOperator acc = WeylOperator::identity(Basis::XY);
                 for (unsigned n = 0; n <= 12; ++n) {
                   const auto st = stirling_tilde(n);
                   WeylOperator folded(Basis::XY);
                   for (const auto& [ir, v] : st.entries) {
                     WeylMonomial mono;
                     mono[Gen::Q] = ir.first - ir.second;
                     mono[Gen::DQ] = n - ir.first - ir.second;
                     folded += WeylOperator::monomial(Basis::XY, mono, Scalar(Rational(v, 1)));
                   }
                   if (folded != acc) o.fail("n=" + std::to_string(n));
                   acc = compose(acc, base);
                 }
                 return o;
               }});
  c.push_back({"stilde.recursion", "generalized Stirling numbers", [] {
                 Outcome o;
                 for (unsigned n = 0; n <= 12; ++n) {
                   const auto st = stirling_tilde(n);
                   if (st.entries != stirling_tilde_recursive(n).entries) o.fail("n=" + std::to_string(n));
                   for (unsigned i = 0; i <= n; ++i) {
                     if (st.at(i, 0) != binomial(n, i)) o.fail("q~-free layer n=" + std::to_string(n));
                   }
                   for (const auto& [ir, v] : st.entries) {
                     if (ir.second > std::min(ir.first, n - ir.first)) o.fail("support n=" + std::to_string(n));
                   }
                 }
                 return o;
               }});
  c.push_back({"stilde.displays", "generalized Stirling numbers", [] {
                 Outcome o;
                 using E = std::map<std::pair<unsigned, unsigned>, mpz_class>;
                 const E two{{{0, 0}, 1}, {{1, 0}, 2}, {{1, 1}, 1}, {{2, 0}, 1}};
                 const E three{{{0, 0}, 1}, {{1, 0}, 3}, {{1, 1}, 3}, {{2, 0}, 3}, {{2, 1}, 3}, {{3, 0}, 1}};
                 if (stirling_tilde(2).entries != two) o.fail("n=2: " + to_text(stirling_tilde(2)));
                 if (stirling_tilde(3).entries != three) o.fail("n=3: " + to_text(stirling_tilde(3)));
                 return o;
               }});
  return c;
}

std::vector<CheckSpec> checks_for(const std::string& suite, const OperatorTable& t) {
  if (suite == "algebra") return algebra_checks(t);
  if (suite == "kernels") return kernel_checks(t);
  if (suite == "combinatorics") return combinatorics_checks(t);
  if (suite == "all") {
    std::vector<CheckSpec> out;
    for (const char* s : {"algebra", "kernels", "combinatorics"}) {
      auto part = checks_for(s, t);
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace

bool VerificationReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json entry{{"id", c.id}, {"anchor", c.anchor}, {"status", c.pass ? "pass" : "fail"}};
    if (!c.pass) entry["witness"] = c.witness;
    checks.push_back(std::move(entry));
  }
  return {{"schema_version", kSchemaVersion},
          {"suite", r.suite},
          {"checks", std::move(checks)},
          {"exit_code", r.exit_code()}};
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& c : r.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.id << "  [" << c.anchor << "]\n";
    if (!c.pass) out << "     witness: " << c.witness << "\n";
    passed += c.pass ? 1 : 0;
  }
  out << r.suite << ": " << passed << "/" << r.checks.size() << " passed\n";
  return out.str();
}

std::string to_latex(const VerificationReport& r) {
  std::ostringstream out;
  out << "\\begin{tabular}{lll}\n";
  for (const auto& c : r.checks) {
    std::string id = c.id;
    std::string escaped;
    for (char ch : id) {
      if (ch == '_' || ch == '&' || ch == '%' || ch == '#') escaped += '\\';
      escaped += ch;
    }
    out << "\\texttt{" << escaped << "} & " << c.anchor << " & " << (c.pass ? "pass" : "fail") << " \\\\\n";
  }
  out << "\\end{tabular}\n";
  return out.str();
}

OperatorTable OperatorTable::standard() {
  OperatorTable t;
  for (const auto& name : operator_names()) {
    t.ops_.emplace(name, *named_operator(name, name == "ds2" ? Basis::ZZBAR : Basis::XY));
  }
  return t;
}

const WeylOperator& OperatorTable::at(const std::string& name) const {
  auto it = ops_.find(name);
  if (it == ops_.end()) throw std::invalid_argument("unknown operator '" + name + "'");
  return it->second;
}

void OperatorTable::perturb(const std::string& name) {
  auto it = ops_.find(name);
  if (it == ops_.end()) throw std::invalid_argument("unknown operator '" + name + "'");
  it->second = plus_one(it->second);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"algebra", "kernels", "combinatorics", "all"};
  return names;
}

VerificationReport run_suite(const std::string& suite, const OperatorTable& table, Exec exec) {
  const std::vector<CheckSpec> specs = checks_for(suite, table);
  std::vector<CheckResult> results(specs.size());
  auto run_one = [&](std::size_t i) {
    Outcome o;
    try {
      o = specs[i].run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    results[i] = {specs[i].id, specs[i].anchor, o.pass, o.witness};
  };
  const auto n = static_cast<std::ptrdiff_t>(specs.size());
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) run_one(static_cast<std::size_t>(i));
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) run_one(static_cast<std::size_t>(i));
  }
  return {suite, std::move(results)};
}

}  // namespace wt
