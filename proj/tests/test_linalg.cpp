#include <doctest.h>

#include <random>

#include "support.hpp"
#include "wt/linalg.hpp"

using namespace wt;
using namespace wt::testing;

TEST_CASE("row reduction and rank") {
  const Matrix m = from_rows({{rat(1), rat(2), rat(3)}, {rat(2), rat(4), rat(6)}, {rat(0), rat(1), I}}, 3);
  CHECK(rank(m) == 2);
  const auto e = row_reduce(m);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  const auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  for (std::size_t r = 0; r < 3; ++r) {
    Scalar dot;
    for (std::size_t c = 0; c < 3; ++c) dot += m(r, c) * ns[0][c];
    CHECK(dot.is_zero());
  }
  CHECK(ns[0][2] == rat(1));
  CHECK(rank(Matrix(0, 4)) == 0);
  CHECK(nullspace(Matrix(0, 3)).size() == 3);
}

TEST_CASE("span comparison") {
  const std::vector<std::vector<Scalar>> a{{rat(1), rat(0)}, {rat(1), rat(1)}};
  const std::vector<std::vector<Scalar>> b{{rat(0), rat(2)}, {rat(3), rat(0)}};
  const std::vector<std::vector<Scalar>> c{{rat(1), rat(1)}};
  CHECK(same_span(a, b, 2));
  CHECK_FALSE(same_span(a, c, 2));
  CHECK(same_span({}, {}, 3));
}

TEST_CASE("serial and parallel elimination agree on random matrices") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> zero(0, 2);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 3 + trial % 17, cols = 2 + (trial * 7) % 19;
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = zero(rng) == 0 ? Scalar() : random_scalar(rng);
    }
    const auto s = row_reduce(m, Exec::Serial);
    const auto p = row_reduce(m, Exec::Parallel);
    CHECK(s.reduced == p.reduced);
    CHECK(s.pivots == p.pivots);
    CHECK(nullspace(m, Exec::Serial) == nullspace(m, Exec::Parallel));
  }
}
