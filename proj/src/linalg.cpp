#include "sdist/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace sdist {

std::size_t exact_rank(const Matrix<Rational>& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  // Scale each row by the lcm of its denominators.
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }

  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t float_rank(const Matrix<double>& m, double relative_threshold) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<double> a(rows * cols);
  double largest = 0.0;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      a[i * cols + j] = m(i, j);
      largest = std::max(largest, std::abs(m(i, j)));
    }
  if (largest == 0.0) return 0;
  const double threshold = relative_threshold * largest;
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * cols + j]; };

  std::vector<std::size_t> col_perm(cols);
  for (std::size_t j = 0; j < cols; ++j) col_perm[j] = j;

  std::size_t rank = 0;
  const std::size_t steps = std::min(rows, cols);
  for (; rank < steps; ++rank) {
    std::size_t pi = rank, pj = rank;
    double best = 0.0;
    for (std::size_t i = rank; i < rows; ++i)
      for (std::size_t j = rank; j < cols; ++j)
        if (std::abs(at(i, col_perm[j])) > best) {
          best = std::abs(at(i, col_perm[j]));
          pi = i;
          pj = j;
        }
    if (best < threshold) break;
    if (pi != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(pi, j), at(rank, j));
    std::swap(col_perm[pj], col_perm[rank]);
    const std::size_t pc = col_perm[rank];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const double f = at(i, pc) / at(rank, pc);
      if (f == 0.0) continue;
      for (std::size_t j = rank; j < cols; ++j) at(i, col_perm[j]) -= f * at(rank, col_perm[j]);
    }
  }
  return rank;
}

}  // namespace sdist
