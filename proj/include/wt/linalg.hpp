#pragma once

#include <cstddef>
#include <vector>

#include "wt/exactnum.hpp"

namespace wt {

/// Execution policy for the elimination kernels. Serial is the reference;
/// Parallel distributes row updates with OpenMP and must give identical
/// results.
enum class Exec { Serial, Parallel };

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon row_reduce(Matrix m, Exec exec = Exec::Serial);
std::size_t rank(const Matrix& m, Exec exec = Exec::Serial);

/// Basis of {v : m v = 0}, one vector per free column, with a 1 in that column.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m, Exec exec = Exec::Serial);

/// Matrix whose rows are the given vectors (all of equal length `cols`).
Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols);

/// True iff the two families span the same subspace.
bool same_span(const std::vector<std::vector<Scalar>>& a, const std::vector<std::vector<Scalar>>& b,
               std::size_t dim, Exec exec = Exec::Serial);

}  // namespace wt
