#pragma once

// Test-only reference computations, kept independent of the library code paths they check.

#include <cstdint>
#include <random>
#include <vector>

#include "sdist/linalg.hpp"
#include "sdist/polynomial.hpp"
#include "sdist/rational.hpp"

namespace oracle {

using sdist::Integer;
using sdist::Rational;

inline std::vector<std::vector<Integer>> pascal_triangle(long rows) {
  std::vector<std::vector<Integer>> t(static_cast<std::size_t>(rows + 1));
  for (long a = 0; a <= rows; ++a) {
    t[a].assign(static_cast<std::size_t>(a + 1), Integer(1));
    for (long b = 1; b < a; ++b) t[a][b] = t[a - 1][b - 1] + t[a - 1][b];
  }
  return t;
}

inline Integer factorial(long k) {
  Integer r = 1;
  for (long i = 2; i <= k; ++i) r *= i;
  return r;
}

inline Integer factorial_binom(long a, long b) {
  if (b < 0 || b > a) return 0;
  return factorial(a) / (factorial(b) * factorial(a - b));
}

// C(n+s-3, s-2) + C(n+s-4, s-3) + (n+2s-2)/s * C(n+s-3, s-1) from factorials.
inline Rational barg_musin_factorial(long n, long s) {
  Rational scale(Integer(n + 2 * s - 2), Integer(s));
  scale.canonicalize();
  Rational v = Rational(factorial_binom(n + s - 3, s - 2)) + Rational(factorial_binom(n + s - 4, s - 3)) +
               scale * Rational(factorial_binom(n + s - 3, s - 1));
  v.canonicalize();
  return v;
}

struct Counts {
  std::size_t up_to = 0;
  std::size_t exact = 0;
};

// Walks every exponent vector of total degree <= d (coordinates filled left to right
// with the remaining degree budget) and keeps those with i_1 <= 1.
inline void count_walk(std::vector<long>& e, std::size_t j, long budget, long d, Counts& c) {
  if (j == e.size()) {
    if (e[0] <= 1) {
      ++c.up_to;
      if (budget == 0) ++c.exact;
    }
    return;
  }
  for (long x = 0; x <= budget; ++x) {
    e[j] = x;
    count_walk(e, j + 1, budget - x, d, c);
  }
  e[j] = 0;
}

inline Counts count_reduced_monomials(long n, long d) {
  Counts c;
  std::vector<long> e(static_cast<std::size_t>(n), 0);
  count_walk(e, 0, d, d, c);
  return c;
}

// Plain Gauss-Jordan over Q, no fraction-free tricks.
inline std::size_t rational_rank(const sdist::Matrix<Rational>& input) {
  std::vector<std::vector<Rational>> a(input.rows());
  for (std::size_t i = 0; i < input.rows(); ++i) a[i] = input.row(i);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < input.cols() && rank < a.size(); ++col) {
    std::size_t p = rank;
    while (p < a.size() && sgn(a[p][col]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || sgn(a[i][col]) == 0) continue;
      const Rational f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < input.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Points (a^2 - b^2, 2ab) / (a^2 + b^2) on the unit circle.
inline std::vector<std::vector<Rational>> pythagorean_circle_points(std::size_t count) {
  std::vector<std::vector<Rational>> pts;
  for (long a = 2; pts.size() < count; ++a)
    for (long b = 1; b < a && pts.size() < count; ++b) {
      const long h = a * a + b * b;
      pts.push_back({Rational(a * a - b * b, h), Rational(2 * a * b, h)});
      pts.back()[0].canonicalize();
      pts.back()[1].canonicalize();
    }
  return pts;
}

inline Rational random_rational(std::mt19937_64& rng, long max_num = 9, long max_den = 7) {
  std::uniform_int_distribution<long> num(-max_num, max_num), den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline sdist::Monomial random_monomial(std::mt19937_64& rng, std::size_t n, unsigned max_degree) {
  std::vector<std::uint32_t> e(n, 0);
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  const unsigned d = deg(rng);
  for (unsigned k = 0; k < d; ++k) ++e[var(rng)];
  return sdist::Monomial(e);
}

inline sdist::Polynomial random_polynomial(std::mt19937_64& rng, std::size_t n, unsigned max_degree,
                                           std::size_t max_terms) {
  std::uniform_int_distribution<std::size_t> terms(1, max_terms);
  sdist::Polynomial f(n);
  const std::size_t t = terms(rng);
  for (std::size_t k = 0; k < t; ++k) f.add_term(random_monomial(rng, n, max_degree), random_rational(rng));
  return f;
}

}  // namespace oracle
