#pragma once

#include <cstddef>
#include <vector>

#include "sdist/rational.hpp"

namespace sdist {

// Dense row-major matrix.
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, K(0)) {}

  static Matrix from_rows(const std::vector<std::vector<K>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i)
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i].at(j);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<K> row(std::size_t i) const {
    return std::vector<K>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<K> data_;
};

// Rank over Q. Rows are cleared to integers and reduced by Bareiss fraction-free elimination.
std::size_t exact_rank(const Matrix<Rational>& m);

inline constexpr double kFloatRankThreshold = 1e-8;

// Rank of a floating-point matrix by fully pivoted elimination; a pivot counts as zero
// below relative_threshold times the largest absolute entry of the input.
std::size_t float_rank(const Matrix<double>& m, double relative_threshold = kFloatRankThreshold);

}  // namespace sdist
