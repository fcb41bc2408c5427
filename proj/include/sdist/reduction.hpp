#pragma once

#include <vector>

#include "sdist/polynomial.hpp"

namespace sdist {

// 1 - x_2^2 - ... - x_n^2, the value of x_1^2 on the sphere.
template <class K>
BasicPolynomial<K> sphere_complement(std::size_t n) {
  BasicPolynomial<K> q = BasicPolynomial<K>::constant(n, K(1));
  for (std::size_t j = 1; j < n; ++j) q.add_term(Monomial::variable(n, j, 2), K(-1));
  return q;
}

// x_1^2 + ... + x_n^2 - 1
template <class K>
BasicPolynomial<K> sphere_relation(std::size_t n) {
  BasicPolynomial<K> g = BasicPolynomial<K>::constant(n, K(-1));
  for (std::size_t j = 0; j < n; ++j) g.add_term(Monomial::variable(n, j, 2), K(1));
  return g;
}

// Canonical representative of f modulo the sphere ideal: each monomial
// x_1^{2t+r} * rest (r in {0,1}) is rewritten as (1 - x_2^2 - ... - x_n^2)^t * x_1^r * rest.
// The result is supported on monomials with first exponent <= 1.
template <class K>
BasicPolynomial<K> canonical_reduce(const BasicPolynomial<K>& f) {
  const std::size_t n = f.dimension();
  BasicPolynomial<K> out(n);
  if (n == 0) return f;
  std::vector<BasicPolynomial<K>> complement_powers{BasicPolynomial<K>::constant(n, K(1))};
  for (const auto& [m, c] : f.terms()) {
    const std::uint32_t i1 = m.exponent(0);
    if (i1 <= 1) {
      out.add_term(m, c);
      continue;
    }
    const std::size_t t = i1 / 2;
    while (complement_powers.size() <= t)
      complement_powers.push_back(complement_powers.back() * sphere_complement<K>(n));
    const Monomial base = m.with_exponent(0, i1 % 2);
    for (const auto& [qm, qc] : complement_powers[t].terms()) out.add_term(qm * base, K(qc * c));
  }
  return out;
}

}  // namespace sdist
