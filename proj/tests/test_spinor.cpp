#include <doctest.h>

#include <random>

#include "support.hpp"
#include "wt/kernels.hpp"
#include "wt/operators.hpp"
#include "wt/parser.hpp"

using namespace wt;
using namespace wt::testing;

TEST_CASE("qpoly basics") {
  const QPoly p({rat(1), Scalar(), rat(3), Scalar()});
  CHECK(p.degree() == 2);
  CHECK(p.coeff(7).is_zero());
  CHECK(p.parity() == Parity::Even);
  CHECK(QPoly::monomial(rat(2), 3).parity() == Parity::Odd);
  CHECK((QPoly(rat(1)) + QPoly::monomial(rat(1), 1)).parity() == Parity::Mixed);
  CHECK_FALSE(QPoly().parity().has_value());
  CHECK(QPoly().degree() == -1);
  CHECK(p.derivative() == QPoly::monomial(rat(6), 1));
  CHECK(p.derivative(3).is_zero());
  CHECK(p.shift(1) == QPoly({Scalar(), rat(1), Scalar(), rat(3)}));
  CHECK(QPoly::monomial(rat(1), 1) * QPoly::monomial(rat(2), 2) == QPoly::monomial(rat(2), 3));
  CHECK((p - p).is_zero());
}

TEST_CASE("spinor coordinates") {
  CHECK(change_basis(parse_spinor("x + i*y"), Basis::ZZBAR) == parse_spinor("z"));
  const Spinor m1 = parse_spinor("q*((-1 + 2/3*q^2)*z + zbar)");
  CHECK(change_basis(m1, Basis::XY) == parse_spinor("2/3*(q^3*(x + i*y) - 3*i*q*y)"));
  CHECK(change_basis(m1, Basis::ZZBAR) == m1);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Spinor s = random_spinor(rng, Basis::XY, 5, 6);
    CHECK(change_basis(change_basis(s, Basis::ZZBAR), Basis::XY) == s);
  }
}

TEST_CASE("parity") {
  CHECK(parity(parse_spinor("1")) == Parity::Even);
  CHECK(parity(parse_spinor("q")) == Parity::Odd);
  CHECK(parity(parse_spinor("1 + q")) == Parity::Mixed);
  CHECK(parity(parse_spinor("x + q*y")) == Parity::Mixed);
  CHECK_FALSE(parity(Spinor()).has_value());
}

TEST_CASE("homogeneity") {
  CHECK(homogeneity(parse_spinor("x^2*y")) == 3u);
  CHECK_FALSE(homogeneity(parse_spinor("x + 1")).has_value());
  CHECK_FALSE(homogeneity(Spinor()).has_value());
  CHECK(homogeneity(parse_spinor("q^5")) == 0u);
  CHECK(homogeneous_part(parse_spinor("x + 1 + q*y"), 1) == parse_spinor("x + q*y"));
}

TEST_CASE("coefficient extraction") {
  const Spinor gauss = parse_spinor("1");
  const Spinor x2 = apply(power(build_xs(), 2), gauss);
  CHECK(coefficient_of(apply(build_ts_reduced(), x2), 1, 0, 2) == rat(1));
  CHECK(coefficient_of(Spinor(), 2, 1, 3).is_zero());
  for (unsigned n = 2; n <= 6; ++n) {
    const Spinor t = apply(build_ts_reduced(), apply(power(build_xs(), n), gauss));
    CHECK(coefficient_of(t, n - 1, 0, n) == -I.pow(n) * rat(n * (n - 1), 2));
  }
  CHECK_THROWS_AS(coefficient_of(parse_spinor("z"), 1, 0, 0), BasisMismatch);
}

TEST_CASE("proportionality") {
  const Spinor a = parse_spinor("x + q*y");
  CHECK(proportionality(a, a * cplx(2, -1)) == cplx(2, -1));
  CHECK(proportionality(a, Spinor()) == Scalar());
  CHECK_FALSE(proportionality(a, parse_spinor("x")).has_value());
  CHECK_FALSE(proportionality(Spinor(), a).has_value());
}

TEST_CASE("spinor arithmetic keeps bases apart") {
  CHECK_THROWS_AS(parse_spinor("x") + parse_spinor("z"), BasisMismatch);
  Spinor s(Basis::XY);
  s.add(1, 0, 0, rat(1));
  s.add(1, 0, 0, rat(-1));
  CHECK(s.is_zero());
  CHECK(s.terms().empty());
}

TEST_CASE("parity and homogeneity under the Howe operators") {
  std::mt19937 rng(77);
  const WeylOperator xs = build_xs(), ds = build_ds(), ts = build_ts_reduced(), euler = build_euler();
  const WeylOperator rho[] = {build_rho_x(), build_rho_y(), build_rho_h()};
  const auto flip = [](Parity p) { return p == Parity::Even ? Parity::Odd : Parity::Even; };
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned l = 1 + trial % 4;
    const Parity p = trial % 2 ? Parity::Odd : Parity::Even;
    const Spinor s = random_homogeneous(rng, Basis::XY, l, 5, p);
    const Spinor up = apply(xs, s);
    CHECK(parity(up) == flip(p));
    CHECK(homogeneity(up) == l + 1);
    const Spinor down = apply(ds, s);
    if (!down.is_zero()) {
      CHECK(parity(down) == flip(p));
      CHECK(homogeneity(down) == l - 1);
    }
    const Spinor tw = apply(ts, s);
    if (!tw.is_zero()) {
      CHECK(parity(tw) == p);
      CHECK(homogeneity(tw) == l - 1);
    }
    CHECK(parity(apply(euler, s)) == p);
    for (const auto& r : rho) {
      const Spinor v = apply(r, s);
      if (!v.is_zero()) CHECK(homogeneity(v) == l);
    }
  }
}
