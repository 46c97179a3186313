#include <doctest.h>

#include "wt/verify.hpp"

using namespace wt;

TEST_CASE("every suite passes on the standard operators") {
  for (const auto& suite : {"algebra", "kernels", "combinatorics"}) {
    const auto r = run_suite(suite, OperatorTable::standard());
    CAPTURE(to_text(r));
    CHECK(r.all_pass());
    CHECK(r.exit_code() == 0);
    CHECK_FALSE(r.checks.empty());
  }
}

TEST_CASE("parallel and serial reports are identical") {
  const auto a = run_suite("all", OperatorTable::standard(), Exec::Serial);
  const auto b = run_suite("all", OperatorTable::standard(), Exec::Parallel);
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(to_json(a)["schema_version"] == kSchemaVersion);
}

TEST_CASE("a corrupted operator table fails with a witness") {
  for (const auto& name : {"xs", "ds", "ts", "rhoX", "casimir", "ds2"}) {
    OperatorTable t = OperatorTable::standard();
    t.perturb(name);
    const auto r = run_suite("all", t, Exec::Parallel);
    CAPTURE(name);
    CHECK(r.exit_code() == 1);
    for (const auto& c : r.checks) {
      if (!c.pass) CHECK_FALSE(c.witness.empty());
    }
  }
}

TEST_CASE("unknown names") {
  CHECK_THROWS_AS(run_suite("bogus", OperatorTable::standard()), std::invalid_argument);
  OperatorTable t = OperatorTable::standard();
  CHECK_THROWS_AS(t.perturb("nope"), std::invalid_argument);
  CHECK_THROWS_AS((void)t.at("nope"), std::invalid_argument);
}

TEST_CASE("report rendering") {
  const auto r = run_suite("combinatorics", OperatorTable::standard());
  const auto j = to_json(r);
  CHECK(j["suite"] == "combinatorics");
  CHECK(j["exit_code"] == 0);
  CHECK(j["checks"][0].contains("anchor"));
  CHECK_FALSE(j["checks"][0].contains("witness"));
  CHECK(to_text(r).find("passed") != std::string::npos);
  CHECK(to_latex(r).find("\\begin{tabular}") != std::string::npos);
}
