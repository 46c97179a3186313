#include "wt/linalg.hpp"

#include <cstdint>

namespace wt {

namespace {

// Eliminates column `col` from every row except `pivot_row`.
void eliminate(Matrix& m, std::size_t pivot_row, std::size_t col, Exec exec) {
  const auto rows = static_cast<std::int64_t>(m.rows());
  const std::size_t cols = m.cols();
  auto update = [&](std::size_t r) {
    if (r == pivot_row || m(r, col).is_zero()) return;
    const Scalar factor = m(r, col);
    for (std::size_t c = col; c < cols; ++c) {
      if (!m(pivot_row, c).is_zero()) m(r, c) -= factor * m(pivot_row, c);
    }
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t r = 0; r < rows; ++r) update(static_cast<std::size_t>(r));
  } else {
    for (std::int64_t r = 0; r < rows; ++r) update(static_cast<std::size_t>(r));
  }
}

}  // namespace

RowEchelon row_reduce(Matrix m, Exec exec) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    }
    const Scalar inv = m(row, col).inv();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    eliminate(m, row, col, exec);
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m, Exec exec) { return row_reduce(m, exec).pivots.size(); }

std::vector<std::vector<Scalar>> nullspace(const Matrix& m, Exec exec) {
  const RowEchelon e = row_reduce(m, exec);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(m.cols());
    v[f] = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

bool same_span(const std::vector<std::vector<Scalar>>& a, const std::vector<std::vector<Scalar>>& b,
               std::size_t dim, Exec exec) {
  std::vector<std::vector<Scalar>> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t ra = rank(from_rows(a, dim), exec);
  const std::size_t rb = rank(from_rows(b, dim), exec);
  return ra == rb && rank(from_rows(both, dim), exec) == ra;
}

}  // namespace wt
