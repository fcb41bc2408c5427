#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdist/error.hpp"
#include "sdist/polynomial.hpp"

namespace sdist {

enum class BasisMode { up_to_degree, exact_degree };

// Reduced monomials (first exponent <= 1) of degree <= d or == d, in increasing graded-lex order.
class BasisOrder {
 public:
  BasisOrder(std::size_t n, unsigned d, BasisMode mode, std::vector<Monomial> monomials);

  std::size_t dimension() const noexcept { return n_; }
  unsigned degree_cap() const noexcept { return d_; }
  BasisMode mode() const noexcept { return mode_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  const Monomial& operator[](std::size_t k) const { return monomials_[k]; }

  std::optional<std::size_t> index_of(const Monomial& m) const;

 private:
  std::size_t n_;
  unsigned d_;
  BasisMode mode_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> index_;
};

BasisOrder enumerate_basis(long n, long d, BasisMode mode);

// Coordinates of a reduced polynomial in an up-to-degree basis.
// Throws DomainError when f has a monomial outside the basis.
template <class K>
std::vector<K> coefficient_vector(const BasicPolynomial<K>& f, const BasisOrder& basis) {
  if (basis.mode() != BasisMode::up_to_degree) throw DomainError("coefficient_vector needs an up-to-degree basis");
  if (f.dimension() != basis.dimension()) throw DomainError("polynomial and basis dimensions differ");
  std::vector<K> v(basis.size(), K(0));
  for (const auto& [m, c] : f.terms()) {
    auto k = basis.index_of(m);
    if (!k) throw DomainError("monomial " + m.to_string() + " is not in the basis (unreduced or degree above cap)");
    v[*k] = c;
  }
  return v;
}

template <class K>
BasicPolynomial<K> from_coefficients(const std::vector<K>& v, const BasisOrder& basis) {
  if (v.size() != basis.size()) throw std::invalid_argument("coefficient vector length differs from basis size");
  BasicPolynomial<K> f(basis.dimension());
  for (std::size_t k = 0; k < v.size(); ++k) f.add_term(basis[k], v[k]);
  return f;
}

}  // namespace sdist
