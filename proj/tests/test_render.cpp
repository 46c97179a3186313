#include <doctest.h>

#include <random>

#include "support.hpp"
#include "wt/kernels.hpp"
#include "wt/operators.hpp"
#include "wt/parser.hpp"
#include "wt/render.hpp"

using namespace wt;
using namespace wt::testing;
using nlohmann::json;

TEST_CASE("scalar json") {
  CHECK(to_json(cplx(1, -2)) == json({1, 1, -2, 1}));
  CHECK(to_json(rat(-3, 4)) == json({-3, 4, 0, 1}));
  CHECK(scalar_from_json(json({2, 4, 0, 1})) == rat(1, 2));
  CHECK(scalar_from_json(json({"6", "3", 0, 1})) == rat(2));
  Rational big(1);
  for (int k = 0; k < 30; ++k) big *= Rational(1000003);
  const json j = to_json(Scalar(big));
  CHECK(j[0].is_string());
  CHECK(scalar_from_json(j) == Scalar(big));
  CHECK_THROWS_AS(scalar_from_json(json({1, 0, 0, 1})), SchemaError);
  CHECK_THROWS_AS(scalar_from_json(json({1, 2, 3})), SchemaError);
  CHECK_THROWS_AS(scalar_from_json(json({1.5, 2, 0, 1})), SchemaError);
}

TEST_CASE("spinor json round trip") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Spinor s = random_spinor(rng, trial % 2 ? Basis::ZZBAR : Basis::XY, 4, 5);
    const json j = to_json(s);
    CHECK(j["weight"] == "exp(-q^2/2)");
    CHECK(spinor_from_json(j) == s);
    CHECK(spinor_from_json(json::parse(j.dump())) == s);
  }
}

TEST_CASE("spinor json schema errors name the field") {
  const auto path_of = [](const json& j) {
    try {
      spinor_from_json(j);
    } catch (const SchemaError& e) {
      return e.path();
    }
    return std::string("none");
  };
  CHECK(path_of(json::array()) == "$");
  CHECK(path_of({{"terms", json::array()}}) == "$.basis");
  CHECK(path_of({{"basis", "polar"}, {"terms", json::array()}}) == "$.basis");
  CHECK(path_of({{"basis", "xy"}}) == "$.terms");
  CHECK(path_of({{"basis", "xy"}, {"terms", {{{"e1", 0}, {"e2", 0}, {"q", {{1, 1, 0}}}}}}}) == "$.terms[0].q[0]");
  CHECK(path_of({{"basis", "xy"}, {"terms", {{{"e1", -1}, {"e2", 0}, {"q", json::array()}}}}}) == "$.terms[0].e1");
  CHECK(path_of({{"basis", "xy"}, {"terms", {{{"e2", 0}, {"q", json::array()}}}}}) == "$.terms[0].e1");
  CHECK(path_of({{"basis", "xy"}, {"terms", json::array()}}) == "none");
}

TEST_CASE("text rendering") {
  CHECK(to_text(Spinor()) == "0");
  CHECK(to_text(parse_spinor("1")) == "e^(-q^2/2)*(1)");
  CHECK(to_text(parse_spinor("q")) == "e^(-q^2/2)*(q)");
  CHECK(to_text(monogenic_minus(1)) == "e^(-q^2/2)*(q*zbar + (-q + 2/3*q^3)*z)");
  CHECK(to_text(build_xs()) == to_text(parse_operator(to_text(build_xs()))));
  CHECK(parse_operator(to_text(build_casimir())) == build_casimir());
  CHECK(parse_operator(to_text(build_ds_squared())) == build_ds_squared());
}

TEST_CASE("latex rendering") {
  CHECK(to_latex(rat(2, 3)) == "\\frac{2}{3}");
  const std::string m1 = to_latex(monogenic_minus(1));
  CHECK(m1.rfind("e^{-\\frac{q^2}{2}}", 0) == 0);
  CHECK(m1.find("\\frac{2}{3} q^{3}") != std::string::npos);
  CHECK(m1.find("\\bar{z}") != std::string::npos);
  CHECK(to_latex(build_xs()).find("\\partial_q") != std::string::npos);
}

TEST_CASE("rendering is deterministic") {
  const Spinor s = change_basis(monogenic_minus(3), Basis::XY);
  CHECK(to_json(s).dump() == to_json(change_basis(monogenic_minus(3), Basis::XY)).dump());
  CHECK(to_text(s) == to_text(change_basis(change_basis(s, Basis::ZZBAR), Basis::XY)));
}
