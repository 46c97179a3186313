#include "wt/exactnum.hpp"

#include <utility>

namespace wt {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) {
  if (value_.get_den() == 0) throw DivisionByZero();
  value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(text), mpz_class(1));
    return Rational(mpz_class(text.substr(0, slash)), mpz_class(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal '" + text + "'");
  }
}

Rational Rational::inv() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1) / value_);
}

std::string Rational::str() const { return value_.get_str(); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  value_ /= o.value_;
  return *this;
}

GaussianRational GaussianRational::inv() const {
  if (is_zero()) throw DivisionByZero();
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::pow(unsigned n) const {
  GaussianRational result(1);
  GaussianRational base = *this;
  while (n) {
    if (n & 1U) result *= base;
    base *= base;
    n >>= 1U;
  }
  return result;
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string imag;
  if (im_ == Rational(1)) {
    imag = "i";
  } else if (im_ == Rational(-1)) {
    imag = "-i";
  } else {
    imag = im_.str() + "*i";
  }
  if (re_.is_zero()) return imag;
  if (im_.sign() > 0) return re_.str() + "+" + imag;
  return re_.str() + imag;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}
GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}
GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}
GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.inv();
}

mpz_class falling(unsigned n, unsigned k) {
  if (k > n) return 0;
  mpz_class r = 1;
  for (unsigned t = 0; t < k; ++t) r *= n - t;
  return r;
}

mpz_class binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class double_factorial_odd(unsigned n) {
  mpz_class r = 1;
  for (unsigned t = 1; t <= 2 * n + 1; t += 2) r *= t;
  return r;
}

}  // namespace wt
