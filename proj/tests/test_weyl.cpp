#include <doctest.h>

#include <random>

#include "support.hpp"
#include "wt/operators.hpp"
#include "wt/parser.hpp"
#include "wt/render.hpp"
#include "wt/weyl.hpp"

using namespace wt;
using namespace wt::testing;

namespace {
WeylOperator op(const char* text) { return parse_operator(text); }
}  // namespace

TEST_CASE("compose normal orders") {
  CHECK(compose(op("dq"), op("q")) == op("q*dq + 1"));
  CHECK(compose(op("q*dq"), op("q*dq")) == op("q^2*dq^2 + q*dq"));
  CHECK(compose(op("q + dq"), op("q + dq")) == op("q^2 + 2*q*dq + dq^2 + 1"));
  CHECK(compose(op("dx^2"), op("x^2")) == op("x^2*dx^2 + 4*x*dx + 2"));
  CHECK(compose(op("dx"), op("y")) == op("y*dx"));
  CHECK(power(op("dq"), 0) == WeylOperator::identity(Basis::XY));
}

TEST_CASE("normal form stores no zero coefficients") {
  const WeylOperator z = op("q*dq - q*dq");
  CHECK(z.is_zero());
  CHECK(z == WeylOperator(Basis::XY));
  CHECK(op("dq*q - q*dq") == WeylOperator::identity(Basis::XY));
}

TEST_CASE("commutator") {
  const WeylOperator a = op("x*dy + q^2");
  CHECK(commutator(a, a).is_zero());
  CHECK(commutator(op("dx"), op("x")) == WeylOperator::identity(Basis::XY));
  CHECK(commutator(op("dz"), op("zbar")).is_zero());
}

TEST_CASE("basis mismatch is an error") {
  const WeylOperator xy = op("x");
  const WeylOperator zz = op("z");
  CHECK_THROWS_AS(compose(xy, zz), BasisMismatch);
  CHECK_THROWS_AS(commutator(xy, zz), BasisMismatch);
  CHECK_THROWS_AS(apply(xy, Spinor::term(Basis::ZZBAR, 0, 0, QPoly(Scalar(1)))), BasisMismatch);
  CHECK_THROWS_AS(xy + zz, BasisMismatch);
}

TEST_CASE("change of coordinates for generators") {
  CHECK(change_basis(op("x"), Basis::ZZBAR) == op("1/2*z + 1/2*zbar"));
  CHECK(change_basis(op("y"), Basis::ZZBAR) == op("-1/2*i*z + 1/2*i*zbar"));
  CHECK(change_basis(op("dx"), Basis::ZZBAR) == op("dz + dzbar"));
  CHECK(change_basis(op("dy"), Basis::ZZBAR) == op("i*dz - i*dzbar"));
  CHECK(change_basis(op("z"), Basis::XY) == op("x + i*y"));
  CHECK(change_basis(op("dzbar"), Basis::XY) == op("1/2*dx + 1/2*i*dy"));
  CHECK(change_basis(op("q*dq"), Basis::ZZBAR).basis() == Basis::ZZBAR);
}

TEST_CASE("change of coordinates for the twistor and raising operators") {
  CHECK(change_basis(build_xs(), Basis::ZZBAR) == op("1/2*i*((q - dq)*z + (q + dq)*zbar)"));
  CHECK(change_basis(build_ts_reduced(), Basis::ZZBAR) == op("(1 - q*dq - q^2)*dz + (1 - q*dq + q^2)*dzbar"));
  CHECK(change_basis(change_basis(build_casimir(), Basis::ZZBAR), Basis::XY) == build_casimir());
}

TEST_CASE("weighted application") {
  const Spinor gauss = Spinor::term(Basis::XY, 0, 0, QPoly(Scalar(1)));
  // X_s e^{-q^2/2} = i q (x + i y) e^{-q^2/2}
  CHECK(apply(build_xs(), gauss) == parse_spinor("i*q*(x + i*y)"));
  const Spinor x2 = apply(build_xs(), apply(build_xs(), gauss));
  CHECK(apply(build_ts_reduced(), x2) == parse_spinor("q^2*x + i*y + i*q^2*y"));
  CHECK(apply(WeylOperator::identity(Basis::XY), x2) == x2);
  // d/dq e^{-q^2/2} = -q e^{-q^2/2}
  CHECK(apply(op("dq"), gauss) == parse_spinor("-q"));
  CHECK(apply_unweighted(op("dq"), gauss).is_zero());
  CHECK(weight_conjugate(op("dq")) == op("dq - q"));
}

TEST_CASE("parser reproduces displayed operators") {
  CHECK(parse_operator("y*dq + i*x*q") == build_xs());
  CHECK(parse_operator("dx - q*dq*dx + i*q^2*dy") == build_ts_reduced());
  CHECK(parse_operator("q*dq - dq*q") == WeylOperator::constant(Basis::XY, rat(-1)));
  CHECK(parse_operator("-(x)") == op("-1*x"));
  CHECK(parse_operator("2/4*x") == op("1/2*x"));
  CHECK(parse_operator("(x + y)^2") == op("x^2 + 2*x*y + y^2"));
  CHECK(parse_operator("  dq ^ 2 ") == op("dq*dq"));
  CHECK(parse_operator("q", Basis::ZZBAR).basis() == Basis::ZZBAR);
  CHECK(parse_operator("0").is_zero());
}

TEST_CASE("parser errors carry positions") {
  try {
    parse_operator("x y");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
  try {
    parse_operator("dx + foo");
    FAIL("expected an unknown symbol");
  } catch (const UnknownSymbol& e) {
    CHECK(e.position() == 5);
    CHECK(e.name() == "foo");
  }
  CHECK_THROWS_AS(parse_operator("x +"), ParseError);
  CHECK_THROWS_AS(parse_operator("(x"), ParseError);
  CHECK_THROWS_AS(parse_operator("x^y"), ParseError);
  CHECK_THROWS_AS(parse_operator("x + z"), ParseError);
  CHECK_THROWS_AS(parse_operator("1/0"), ParseError);
  CHECK_THROWS_AS(parse_operator(""), ParseError);
  CHECK_THROWS_AS(parse_operator("x $ y"), ParseError);
  CHECK_THROWS_AS(parse_spinor("dx*x"), ParseError);
}

TEST_CASE("composition is associative on random operators") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    const Basis b = trial % 2 ? Basis::ZZBAR : Basis::XY;
    const auto a = random_operator(rng, b, 4, 3);
    const auto c = random_operator(rng, b, 4, 3);
    const auto d = random_operator(rng, b, 4, 3);
    CHECK(compose(a, compose(c, d)) == compose(compose(a, c), d));
  }
}

TEST_CASE("apply agrees with a direct product-rule evaluation") {
  std::mt19937 rng(202);
  for (int trial = 0; trial < 60; ++trial) {
    const Basis b = trial % 2 ? Basis::ZZBAR : Basis::XY;
    const auto a = random_operator(rng, b, 4);
    const auto s = random_spinor(rng, b, 4, 6);
    CHECK(apply(a, s) == NaiveApply::apply(a, s));
  }
}

TEST_CASE("apply of a composition is the composition of applications") {
  std::mt19937 rng(303);
  for (int trial = 0; trial < 60; ++trial) {
    const Basis b = trial % 2 ? Basis::ZZBAR : Basis::XY;
    const auto a = random_operator(rng, b, 4);
    const auto c = random_operator(rng, b, 4);
    const auto s = random_spinor(rng, b, 4, 6);
    CHECK(apply(compose(a, c), s) == apply(a, apply(c, s)));
  }
}

TEST_CASE("change of coordinates is an algebra homomorphism") {
  std::mt19937 rng(404);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_operator(rng, Basis::XY, 4);
    const auto c = random_operator(rng, Basis::XY, 4);
    CHECK(change_basis(compose(a, c), Basis::ZZBAR) ==
          compose(change_basis(a, Basis::ZZBAR), change_basis(c, Basis::ZZBAR)));
    CHECK(change_basis(change_basis(a, Basis::ZZBAR), Basis::XY) == a);
  }
}

TEST_CASE("apply is bilinear") {
  std::mt19937 rng(505);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_operator(rng, Basis::XY, 3);
    const auto c = random_operator(rng, Basis::XY, 3);
    const auto s = random_spinor(rng, Basis::XY, 3, 5);
    const auto t = random_spinor(rng, Basis::XY, 3, 5);
    const Scalar k = random_scalar(rng);
    CHECK(apply(a + c * k, s) == apply(a, s) + apply(c, s) * k);
    CHECK(apply(a, s + t * k) == apply(a, s) + apply(a, t) * k);
  }
}

TEST_CASE("application commutes with change of coordinates") {
  std::mt19937 rng(606);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_operator(rng, Basis::XY, 3);
    const auto s = random_spinor(rng, Basis::XY, 3, 5);
    CHECK(change_basis(apply(a, s), Basis::ZZBAR) == apply(change_basis(a, Basis::ZZBAR), change_basis(s, Basis::ZZBAR)));
  }
}
