#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sdist/linalg.hpp"

using namespace sdist;

TEST_CASE("exact_rank small cases") {
  CHECK(exact_rank(Matrix<Rational>(0, 0)) == 0);
  CHECK(exact_rank(Matrix<Rational>(3, 4)) == 0);

  Matrix<Rational> id(4, 6);
  for (std::size_t i = 0; i < 4; ++i) id(i, i + 1) = 1;
  CHECK(exact_rank(id) == 4);

  auto dup = Matrix<Rational>::from_rows({{1, 2, 3}, {Rational(1, 2), 0, 1}, {1, 2, 3}, {0, 0, 7}});
  CHECK(exact_rank(dup) == 3);

  auto frac = Matrix<Rational>::from_rows({{Rational(1, 3), Rational(1, 6)}, {Rational(2, 7), Rational(1, 7)}});
  CHECK(exact_rank(frac) == 1);
}

TEST_CASE("exact_rank matches plain rational elimination on random matrices") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    Matrix<Rational> m(rows, cols);
    // Low-rank products make dependencies common.
    const std::size_t inner = 1 + trial % 4;
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(inner)), b(inner, std::vector<Rational>(cols));
    for (auto& r : a)
      for (auto& x : r) x = oracle::random_rational(rng, 4, 3);
    for (auto& r : b)
      for (auto& x : r) x = oracle::random_rational(rng, 4, 3);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t k = 0; k < inner; ++k) m(i, j) += a[i][k] * b[k][j];
    const std::size_t r = exact_rank(m);
    CHECK(r == oracle::rational_rank(m));
    CHECK(r <= std::min({rows, cols, inner}));

    std::vector<std::size_t> rp(rows), cp(cols);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    Matrix<Rational> shuffled(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) shuffled(i, j) = m(rp[i], cp[j]);
    CHECK(exact_rank(shuffled) == r);
  }
}

TEST_CASE("float_rank thresholds tiny pivots") {
  auto m = Matrix<double>::from_rows({{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {1.0, 1.0, 1e-12}});
  CHECK(float_rank(m) == 2);
  CHECK(float_rank(m, 1e-14) == 3);
  CHECK(float_rank(Matrix<double>(2, 2)) == 0);
  auto tall = Matrix<double>::from_rows({{1.0, 2.0}, {2.0, 4.0}, {3.0, 6.0001}});
  CHECK(float_rank(tall) == 2);
  auto near = Matrix<double>::from_rows({{1.0, 2.0}, {2.0, 4.0}, {3.0, 6.0000001}});
  CHECK(float_rank(near) == 1);
}
