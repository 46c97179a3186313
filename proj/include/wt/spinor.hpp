#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wt/exactnum.hpp"

namespace wt {

/// Coordinate system of the plane: real (x, y) or complex (z, zbar) with
/// z = x + iy, zbar = x - iy.
enum class Basis { XY, ZZBAR };

std::string to_string(Basis b);

class BasisMismatch : public std::invalid_argument {
 public:
  BasisMismatch() : std::invalid_argument("basis mismatch") {}
  explicit BasisMismatch(const std::string& what)
      : std::invalid_argument("basis mismatch: " + what) {}
};

enum class Parity { Even, Odd, Mixed };

std::string to_string(Parity p);

/// Polynomial in q with Gaussian-rational coefficients. Within a spinor the
/// weight e^{-q^2/2} is implicit and never stored.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Scalar> coeffs);
  QPoly(Scalar c) : QPoly(std::vector<Scalar>{std::move(c)}) {}  // NOLINT(google-explicit-constructor)

  /// c * q^k
  static QPoly monomial(const Scalar& c, unsigned k);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the top nonzero coefficient; -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] Scalar coeff(unsigned k) const;
  [[nodiscard]] const std::vector<Scalar>& coeffs() const { return coeffs_; }
  /// nullopt for the zero polynomial.
  [[nodiscard]] std::optional<Parity> parity() const;

  [[nodiscard]] QPoly derivative(unsigned order = 1) const;
  [[nodiscard]] QPoly shift(unsigned k) const;  // multiply by q^k

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const Scalar& c);
  QPoly operator-() const;

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const Scalar& c) { return a *= c; }
  friend QPoly operator*(const Scalar& c, QPoly a) { return a *= c; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) = default;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

/// Exponent pair (x^a y^b in XY, z^a zbar^b in ZZBAR).
using PlaneExp = std::pair<unsigned, unsigned>;

/// Polynomial symplectic spinor: sum of plane monomials with QPoly
/// coefficients, all multiplied by the implicit weight e^{-q^2/2}.
class Spinor {
 public:
  using Terms = std::map<PlaneExp, QPoly>;

  explicit Spinor(Basis basis = Basis::XY) : basis_(basis) {}
  Spinor(Basis basis, Terms terms);

  /// p(q) * P1^a * P2^b
  static Spinor term(Basis basis, unsigned a, unsigned b, QPoly p);

  [[nodiscard]] Basis basis() const { return basis_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] QPoly component(unsigned a, unsigned b) const;
  /// Coefficient of P1^a P2^b q^k in the weight-stripped polynomial, any basis.
  [[nodiscard]] Scalar coeff(unsigned a, unsigned b, unsigned k) const;
  [[nodiscard]] int q_degree() const;

  Spinor& operator+=(const Spinor& o);
  Spinor& operator-=(const Spinor& o);
  Spinor& operator*=(const Scalar& c);
  Spinor operator-() const;

  friend Spinor operator+(Spinor a, const Spinor& b) { return a += b; }
  friend Spinor operator-(Spinor a, const Spinor& b) { return a -= b; }
  friend Spinor operator*(Spinor a, const Scalar& c) { return a *= c; }
  friend Spinor operator*(const Scalar& c, Spinor a) { return a *= c; }
  friend bool operator==(const Spinor& a, const Spinor& b) = default;

  /// Adds c * P1^a P2^b q^k.
  void add(unsigned a, unsigned b, unsigned k, const Scalar& c);

 private:
  void require_same_basis(const Spinor& o) const;
  Basis basis_;
  Terms terms_;
};

/// nullopt for the zero spinor.
std::optional<Parity> parity(const Spinor& s);
/// Common plane degree of all terms; nullopt if mixed or zero.
std::optional<unsigned> homogeneity(const Spinor& s);
/// Coefficient of x^a y^b q^c. Throws BasisMismatch unless s is in XY.
Scalar coefficient_of(const Spinor& s, unsigned xexp, unsigned yexp, unsigned qexp);
Spinor change_basis(const Spinor& s, Basis target);
/// Restriction to the plane-degree-m part.
Spinor homogeneous_part(const Spinor& s, unsigned m);

/// If b = c * a for some scalar c, returns c. nullopt otherwise or if a is zero.
std::optional<Scalar> proportionality(const Spinor& a, const Spinor& b);

}  // namespace wt
