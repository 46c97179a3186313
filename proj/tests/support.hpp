#pragma once

#include <map>
#include <random>
#include <tuple>

#include "wt/exactnum.hpp"
#include "wt/spinor.hpp"
#include "wt/weyl.hpp"

namespace wt::testing {

inline Scalar rat(long p, long q = 1) { return Scalar(Rational(p, q)); }
inline Scalar cplx(long re, long im) { return Scalar(Rational(re), Rational(im)); }
inline const Scalar I = Scalar::i();

inline Scalar random_scalar(std::mt19937& rng, bool allow_zero = true) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  for (;;) {
    Scalar s(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    if (allow_zero || !s.is_zero()) return s;
  }
}

inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  return Rational(num(rng), den(rng));
}

/// Random operator with a handful of monomials, total degree <= max_degree.
inline WeylOperator random_operator(std::mt19937& rng, Basis basis, unsigned max_degree, unsigned terms = 4) {
  std::uniform_int_distribution<unsigned> pick(0, 5);
  std::uniform_int_distribution<unsigned> len(0, max_degree);
  WeylOperator op(basis);
  for (unsigned t = 0; t < terms; ++t) {
    WeylMonomial m;
    const unsigned d = len(rng);
    for (unsigned s = 0; s < d; ++s) ++m.exp[pick(rng)];
    op += WeylOperator::monomial(basis, m, random_scalar(rng));
  }
  return op;
}

inline Spinor random_spinor(std::mt19937& rng, Basis basis, unsigned max_plane, unsigned max_q, unsigned terms = 5) {
  std::uniform_int_distribution<unsigned> plane(0, max_plane);
  std::uniform_int_distribution<unsigned> qd(0, max_q);
  Spinor s(basis);
  for (unsigned t = 0; t < terms; ++t) {
    const unsigned a = plane(rng);
    std::uniform_int_distribution<unsigned> rest(0, max_plane - a);
    s.add(a, rest(rng), qd(rng), random_scalar(rng));
  }
  return s;
}

inline Spinor random_homogeneous(std::mt19937& rng, Basis basis, unsigned l, unsigned max_q,
                                 std::optional<Parity> parity = std::nullopt) {
  Spinor s(basis);
  for (unsigned a = 0; a <= l; ++a) {
    for (unsigned k = 0; k <= max_q; ++k) {
      if (parity == Parity::Even && k % 2 == 1) continue;
      if (parity == Parity::Odd && k % 2 == 0) continue;
      s.add(a, l - a, k, random_scalar(rng));
    }
  }
  return s;
}

/// Direct evaluation of a normal-ordered operator on a Gaussian-weighted
/// polynomial, written independently of the library's apply: derivatives act
/// first by the product rule on p(x,y,q) e^{-q^2/2}, then multiplications.
class NaiveApply {
 public:
  using Poly = std::map<std::tuple<unsigned, unsigned, unsigned>, Scalar>;

  static Poly from(const Spinor& s) {
    Poly p;
    for (const auto& [e, qp] : s.terms()) {
      for (int k = 0; k <= qp.degree(); ++k) {
        if (!qp.coeff(k).is_zero()) p[{e.first, e.second, static_cast<unsigned>(k)}] = qp.coeff(k);
      }
    }
    return p;
  }

  static Spinor to(const Poly& p, Basis basis) {
    Spinor s(basis);
    for (const auto& [key, c] : p) s.add(std::get<0>(key), std::get<1>(key), std::get<2>(key), c);
    return s;
  }

  // d/dv on the plane variable (0 or 1) or, for v = 2, on q including the weight.
  static Poly diff(const Poly& p, int v) {
    Poly out;
    for (const auto& [key, c] : p) {
      auto [a, b, k] = key;
      if (v == 0 && a > 0) out[{a - 1, b, k}] += c * Scalar(static_cast<long>(a));
      if (v == 1 && b > 0) out[{a, b - 1, k}] += c * Scalar(static_cast<long>(b));
      if (v == 2) {
        if (k > 0) out[{a, b, k - 1}] += c * Scalar(static_cast<long>(k));
        out[{a, b, k + 1}] -= c;
      }
    }
    return prune(out);
  }

  static Poly prune(Poly p) {
    for (auto it = p.begin(); it != p.end();) it = it->second.is_zero() ? p.erase(it) : std::next(it);
    return p;
  }

  static Spinor apply(const WeylOperator& op, const Spinor& s) {
    const Poly in = from(s);
    Poly total;
    for (const auto& [m, c] : op.terms()) {
      Poly p = in;
      for (unsigned t = 0; t < m[Gen::DQ]; ++t) p = diff(p, 2);
      for (unsigned t = 0; t < m[Gen::D2]; ++t) p = diff(p, 1);
      for (unsigned t = 0; t < m[Gen::D1]; ++t) p = diff(p, 0);
      for (const auto& [key, v] : p) {
        auto [a, b, k] = key;
        total[{a + m[Gen::P1], b + m[Gen::P2], k + m[Gen::Q]}] += v * c;
      }
    }
    return to(prune(total), s.basis());
  }
};

}  // namespace wt::testing
