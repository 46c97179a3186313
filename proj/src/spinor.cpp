#include "wt/spinor.hpp"

#include <algorithm>

namespace wt {

std::string to_string(Basis b) { return b == Basis::XY ? "xy" : "zzbar"; }

std::string to_string(Parity p) {
  switch (p) {
    case Parity::Even:
      return "even";
    case Parity::Odd:
      return "odd";
    case Parity::Mixed:
      break;
  }
  return "mixed";
}

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(const Scalar& c, unsigned k) {
  std::vector<Scalar> v(k + 1);
  v[k] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar QPoly::coeff(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(); }

std::optional<Parity> QPoly::parity() const {
  bool even = false;
  bool odd = false;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    (k % 2 == 0 ? even : odd) = true;
  }
  if (!even && !odd) return std::nullopt;
  if (even && odd) return Parity::Mixed;
  return even ? Parity::Even : Parity::Odd;
}

QPoly QPoly::derivative(unsigned order) const {
  if (order >= coeffs_.size()) return {};
  std::vector<Scalar> v(coeffs_.size() - order);
  for (std::size_t k = order; k < coeffs_.size(); ++k) {
    v[k - order] = coeffs_[k] * Scalar(Rational(mpz_class(falling(k, order)), 1));
  }
  return QPoly(std::move(v));
}

QPoly QPoly::shift(unsigned k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Scalar> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return QPoly(std::move(v));
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const Scalar& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& a : r.coeffs_) a = -a;
  return r;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(v));
}

// --------------------------------------------------------------- Spinor

Spinor::Spinor(Basis basis, Terms terms) : basis_(basis) {
  for (auto& [e, p] : terms) {
    if (!p.is_zero()) terms_.emplace(e, std::move(p));
  }
}

Spinor Spinor::term(Basis basis, unsigned a, unsigned b, QPoly p) {
  Spinor s(basis);
  if (!p.is_zero()) s.terms_.emplace(PlaneExp{a, b}, std::move(p));
  return s;
}

QPoly Spinor::component(unsigned a, unsigned b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? QPoly() : it->second;
}

Scalar Spinor::coeff(unsigned a, unsigned b, unsigned k) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Scalar() : it->second.coeff(k);
}

int Spinor::q_degree() const {
  int d = -1;
  for (const auto& [e, p] : terms_) d = std::max(d, p.degree());
  return d;
}

void Spinor::require_same_basis(const Spinor& o) const {
  if (basis_ != o.basis_) throw BasisMismatch(to_string(basis_) + " vs " + to_string(o.basis_));
}

Spinor& Spinor::operator+=(const Spinor& o) {
  require_same_basis(o);
  for (const auto& [e, p] : o.terms_) {
    auto& slot = terms_[e];
    slot += p;
    if (slot.is_zero()) terms_.erase(e);
  }
  return *this;
}

Spinor& Spinor::operator-=(const Spinor& o) {
  require_same_basis(o);
  for (const auto& [e, p] : o.terms_) {
    auto& slot = terms_[e];
    slot -= p;
    if (slot.is_zero()) terms_.erase(e);
  }
  return *this;
}

Spinor& Spinor::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, p] : terms_) p *= c;
  return *this;
}

Spinor Spinor::operator-() const {
  Spinor r = *this;
  for (auto& [e, p] : r.terms_) p = -p;
  return r;
}

void Spinor::add(unsigned a, unsigned b, unsigned k, const Scalar& c) {
  if (c.is_zero()) return;
  auto& slot = terms_[{a, b}];
  slot += QPoly::monomial(c, k);
  if (slot.is_zero()) terms_.erase({a, b});
}

std::optional<Parity> parity(const Spinor& s) {
  std::optional<Parity> result;
  for (const auto& [e, p] : s.terms()) {
    auto pp = p.parity();
    if (!result) {
      result = pp;
    } else if (*result != *pp) {
      return Parity::Mixed;
    }
  }
  return result;
}

std::optional<unsigned> homogeneity(const Spinor& s) {
  std::optional<unsigned> m;
  for (const auto& [e, p] : s.terms()) {
    unsigned d = e.first + e.second;
    if (m && *m != d) return std::nullopt;
    m = d;
  }
  return m;
}

Scalar coefficient_of(const Spinor& s, unsigned xexp, unsigned yexp, unsigned qexp) {
  if (s.basis() != Basis::XY) throw BasisMismatch("coefficient_of needs the xy basis");
  return s.coeff(xexp, yexp, qexp);
}

namespace {

using Bivariate = std::map<PlaneExp, Scalar>;

// (alpha*P1 + beta*P2)^n
Bivariate linear_power(const Scalar& alpha, const Scalar& beta, unsigned n) {
  Bivariate r;
  for (unsigned t = 0; t <= n; ++t) {
    Scalar c = Scalar(Rational(binomial(n, t), 1)) * alpha.pow(t) * beta.pow(n - t);
    if (!c.is_zero()) r[{t, n - t}] = c;
  }
  return r;
}

Bivariate multiply(const Bivariate& a, const Bivariate& b) {
  Bivariate r;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      r[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
    }
  }
  std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

}  // namespace

Spinor change_basis(const Spinor& s, Basis target) {
  if (s.basis() == target) return s;
  const Scalar half(Rational(1, 2));
  const Scalar i = Scalar::i();
  // Images of the first and second source coordinate as (coeff of P1, coeff of P2)
  // in the target coordinates.
  std::pair<Scalar, Scalar> first;
  std::pair<Scalar, Scalar> second;
  if (target == Basis::ZZBAR) {
    first = {half, half};                  // x = (z + zbar)/2
    second = {-half * i, half * i};        // y = -(i/2)(z - zbar)
  } else {
    first = {Scalar(1), i};                // z = x + iy
    second = {Scalar(1), -i};              // zbar = x - iy
  }
  Spinor out(target);
  for (const auto& [e, p] : s.terms()) {
    Bivariate poly = multiply(linear_power(first.first, first.second, e.first),
                              linear_power(second.first, second.second, e.second));
    for (const auto& [te, c] : poly) out += Spinor::term(target, te.first, te.second, p * c);
  }
  return out;
}

Spinor homogeneous_part(const Spinor& s, unsigned m) {
  Spinor::Terms t;
  for (const auto& [e, p] : s.terms()) {
    if (e.first + e.second == m) t.emplace(e, p);
  }
  return {s.basis(), std::move(t)};
}

std::optional<Scalar> proportionality(const Spinor& a, const Spinor& b) {
  if (a.is_zero() || a.basis() != b.basis()) return std::nullopt;
  const auto& [e, p] = *a.terms().begin();
  int k = 0;
  while (p.coeff(k).is_zero()) ++k;
  Scalar c = b.coeff(e.first, e.second, k) / p.coeff(k);
  if (a * c == b) return c;
  return std::nullopt;
}

}  // namespace wt
