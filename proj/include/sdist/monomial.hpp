#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace sdist {

// x_1^{i_1} ... x_n^{i_n}. Variables are 0-based in code and 1-based in text.
class Monomial {
 public:
  explicit Monomial(std::size_t n) : exponents_(n, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exponents);

  static Monomial variable(std::size_t n, std::size_t index, std::uint32_t power = 1);

  std::size_t dimension() const noexcept { return exponents_.size(); }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exponents_; }
  std::uint32_t exponent(std::size_t j) const { return exponents_[j]; }
  unsigned degree() const noexcept { return degree_; }

  // Member of the sphere's monomial basis: first exponent at most 1.
  bool is_reduced() const noexcept { return exponents_.empty() || exponents_[0] <= 1; }

  Monomial with_exponent(std::size_t j, std::uint32_t e) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  // Graded lexicographic: total degree first, then the exponent vectors compared
  // lexicographically from x_1, so x_1 is the heaviest variable (x_2 < x_1).
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  // "1", "x2", "x1*x3^2".
  std::string to_string() const;

 private:
  std::vector<std::uint32_t> exponents_;
  unsigned degree_ = 0;
};

}  // namespace sdist
