#pragma once

#include <array>
#include <map>
#include <string>

#include "wt/exactnum.hpp"
#include "wt/spinor.hpp"

namespace wt {

/// Generators of the Weyl algebra on the plane coordinates and q. P1, P2
/// are (x, y) or (z, zbar) depending on the operator's basis; D1, D2 the
/// matching partial derivatives.
enum class Gen { P1 = 0, P2 = 1, Q = 2, D1 = 3, D2 = 4, DQ = 5 };

/// Normal-ordered word P1^a P2^b q^c D1^d D2^e DQ^f.
struct WeylMonomial {
  std::array<unsigned, 6> exp{};

  unsigned operator[](Gen g) const { return exp[static_cast<int>(g)]; }
  unsigned& operator[](Gen g) { return exp[static_cast<int>(g)]; }
  [[nodiscard]] unsigned degree() const;
  /// Change in plane degree when applied to a homogeneous polynomial.
  [[nodiscard]] int plane_shift() const;

  friend auto operator<=>(const WeylMonomial&, const WeylMonomial&) = default;
};

/// Polynomial differential operator in normal order with Gaussian-rational
/// coefficients. Zero coefficients are never stored, so structural equality
/// is operator equality.
class WeylOperator {
 public:
  using Terms = std::map<WeylMonomial, Scalar>;

  explicit WeylOperator(Basis basis = Basis::XY) : basis_(basis) {}
  WeylOperator(Basis basis, Terms terms);

  static WeylOperator constant(Basis basis, const Scalar& c);
  static WeylOperator identity(Basis basis) { return constant(basis, Scalar(1)); }
  static WeylOperator generator(Basis basis, Gen g);
  static WeylOperator monomial(Basis basis, const WeylMonomial& m, const Scalar& c = Scalar(1));

  [[nodiscard]] Basis basis() const { return basis_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Scalar coeff(const WeylMonomial& m) const;
  [[nodiscard]] unsigned degree() const;

  WeylOperator& operator+=(const WeylOperator& o);
  WeylOperator& operator-=(const WeylOperator& o);
  WeylOperator& operator*=(const Scalar& c);
  WeylOperator operator-() const;

  friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
  friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
  friend WeylOperator operator*(WeylOperator a, const Scalar& c) { return a *= c; }
  friend WeylOperator operator*(const Scalar& c, WeylOperator a) { return a *= c; }
  friend bool operator==(const WeylOperator&, const WeylOperator&) = default;

 private:
  void add_term(const WeylMonomial& m, const Scalar& c);
  Basis basis_;
  Terms terms_;
};

/// Normal-ordered product A∘B (B acts first). Throws BasisMismatch.
WeylOperator compose(const WeylOperator& a, const WeylOperator& b);
WeylOperator power(const WeylOperator& a, unsigned n);
WeylOperator commutator(const WeylOperator& a, const WeylOperator& b);
WeylOperator change_basis(const WeylOperator& a, Basis target);

/// Conjugation by the Gaussian weight: DQ -> DQ - q. The result acts on
/// weight-stripped polynomials exactly as the input acts on weighted ones.
WeylOperator weight_conjugate(const WeylOperator& a);

/// Action on the weighted spinor e^{-q^2/2} s, returned weight-stripped.
Spinor apply(const WeylOperator& a, const Spinor& s);
/// Action on plain polynomials without the Gaussian weight.
Spinor apply_unweighted(const WeylOperator& a, const Spinor& s);

}  // namespace wt
