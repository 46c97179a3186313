#include <doctest.h>

#include "support.hpp"
#include "wt/kernels.hpp"
#include "wt/operators.hpp"
#include "wt/parser.hpp"

using namespace wt;
using namespace wt::testing;

namespace {
WeylOperator op(const char* text) { return parse_operator(text); }
WeylOperator e_plus_one() { return build_euler() + WeylOperator::identity(Basis::XY); }
const WeylOperator kZero(Basis::XY);
}  // namespace

TEST_CASE("displayed builders") {
  CHECK(build_xs() == op("y*dq + i*x*q"));
  CHECK(build_ds() == op("i*q*dy - dx*dq"));
  CHECK(build_euler() == op("x*dx + y*dy"));
  CHECK(build_rho_x() == op("-y*dx - 1/2*i*q^2"));
  CHECK(build_rho_y() == op("-x*dy - 1/2*i*dq^2"));
  CHECK(build_rho_h() == op("-x*dx + y*dy + q*dq + 1/2"));
  CHECK(build_ts_full().comp1 == build_ts_reduced());
}

TEST_CASE("sl2 relations of the Howe dual") {
  CHECK(commutator(e_plus_one(), build_ds()) == -build_ds());
  CHECK(commutator(e_plus_one(), build_xs()) == build_xs());
  // As displayed, the lowering operator pairs with the raising one up to -i.
  CHECK(commutator(build_ds(), build_xs()) == e_plus_one() * -I);
  CHECK(commutator(build_ds() * I, build_xs()) == e_plus_one());
}

TEST_CASE("mp2 relations") {
  CHECK(commutator(build_rho_x(), build_rho_y()) == build_rho_h());
  CHECK(commutator(build_rho_h(), build_rho_x()) == build_rho_x() * rat(2));
  CHECK(commutator(build_rho_h(), build_rho_y()) == build_rho_y() * rat(-2));
}

TEST_CASE("raising and lowering commute with mp2") {
  for (const auto& a : {build_xs(), build_ds()}) {
    for (const auto& b : {build_rho_x(), build_rho_y(), build_rho_h()}) CHECK(commutator(a, b) == kZero);
  }
}

TEST_CASE("casimir") {
  CHECK(build_casimir() == casimir_expanded());
  CHECK(casimir_expanded() ==
        op("x^2*dx^2 + y^2*dy^2 + 2*x*dx + 4*y*dy + 2*x*y*dx*dy + 1/4 - 2*x*q*dx*dq + 2*y*q*dy*dq + "
           "2*i*y*dx*dq^2 + 2*i*x*q^2*dy"));
  for (const auto& g : {build_rho_x(), build_rho_y(), build_rho_h()}) CHECK(commutator(build_casimir(), g) == kZero);
}

TEST_CASE("casimir acts by one scalar on each component") {
  for (unsigned l = 0; l <= 3; ++l) {
    for (unsigned j = 0; l + j <= 4; ++j) {
      for (const Spinor& mono : {monogenic_plus(l), change_basis(monogenic_minus(l), Basis::XY)}) {
        const Spinor v = apply(power(build_xs(), j), mono);
        const auto c = proportionality(v, apply(build_casimir(), v));
        REQUIRE(c.has_value());
        // The same scalar on a second vector of the block.
        const Spinor w = apply(build_rho_x(), v);
        if (!w.is_zero()) CHECK(apply(build_casimir(), w) == w * *c);
      }
    }
  }
}

TEST_CASE("complex-coordinate builders agree with conversion") {
  CHECK(change_basis(build_xs(), Basis::ZZBAR) == build_xs_z());
  CHECK(change_basis(build_ds(), Basis::ZZBAR) == build_ds_z());
  CHECK(change_basis(build_ts_reduced(), Basis::ZZBAR) == build_ts_z());
  CHECK(build_ds_z() == parse_operator("-((q + dq)*dz + (-q + dq)*dzbar)"));
  CHECK(compose(build_ds_z(), build_ds_z()) == build_ds_squared());
  CHECK(build_ds_squared() ==
        parse_operator("(q^2 + 2*q*dq + 1 + dq^2)*dz^2 + 2*(-q^2 + dq^2)*dz*dzbar + (q^2 - 2*q*dq - 1 + dq^2)*dzbar^2"));
}

TEST_CASE("twistor operator examples") {
  CHECK(apply(build_ts_z(), parse_spinor("(-1 + 2*q^2)*z + zbar")).is_zero());
  const WeylOperator comp2 = build_ts_full().comp2;
  for (unsigned k = 0; k <= 2; ++k) {
    CHECK(apply(comp2, apply(op("q"), apply(power(op("x + i*y"), k), parse_spinor("1")))).is_zero());
  }
  CHECK_FALSE(apply(comp2, apply(power(build_xs(), 2), parse_spinor("1"))).is_zero());
  CHECK(apply(build_ds_squared(), change_basis(monogenic_plus(3), Basis::ZZBAR)).is_zero());
  CHECK(apply(build_ds_squared(), apply(build_xs_z(), monogenic_minus(1))).is_zero());
}

TEST_CASE("lemma-level commutators") {
  CHECK(commutator(build_ds(), build_rho_h()) == kZero);
  CHECK(commutator(build_xs(), build_rho_y()) == kZero);
}

TEST_CASE("twistor kernel is preserved by mp2") {
  for (unsigned m = 0; m <= 4; ++m) {
    for (const auto& s : twistor_kernel_basis(m)) {
      for (const auto& g : {build_rho_x(), build_rho_y(), build_rho_h()}) {
        CHECK(apply(build_ts_reduced(), apply(g, s)).is_zero());
      }
    }
  }
}

TEST_CASE("operator registry") {
  for (const auto& name : operator_names()) {
    for (Basis b : {Basis::XY, Basis::ZZBAR}) {
      const auto o = named_operator(name, b);
      REQUIRE(o.has_value());
      CHECK(o->basis() == b);
    }
  }
  CHECK(named_operator("ds2", Basis::ZZBAR) == build_ds_squared());
  CHECK(named_operator("ts2", Basis::XY) == build_ts_full().comp2);
  CHECK_FALSE(named_operator("nope", Basis::XY).has_value());
  CHECK(operator_names().size() == 10);
}
