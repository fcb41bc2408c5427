#include "sdist/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sdist {

Monomial::Monomial(std::vector<std::uint32_t> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), 0u)) {}

Monomial Monomial::variable(std::size_t n, std::size_t index, std::uint32_t power) {
  if (index >= n) throw std::out_of_range("variable index out of range");
  Monomial m(n);
  m.exponents_[index] = power;
  m.degree_ = power;
  return m;
}

Monomial Monomial::with_exponent(std::size_t j, std::uint32_t e) const {
  Monomial m = *this;
  m.degree_ = m.degree_ - m.exponents_.at(j) + e;
  m.exponents_[j] = e;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("monomial dimension mismatch");
  Monomial m = a;
  for (std::size_t j = 0; j < m.exponents_.size(); ++j) m.exponents_[j] += b.exponents_[j];
  m.degree_ += b.degree_;
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.exponents_.begin(), a.exponents_.end(), b.exponents_.begin(),
                                                b.exponents_.end());
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < exponents_.size(); ++j) {
    if (exponents_[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(j + 1);
    if (exponents_[j] > 1) out += '^' + std::to_string(exponents_[j]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace sdist
