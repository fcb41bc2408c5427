#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sdist/basis.hpp"
#include "sdist/bounds.hpp"
#include "sdist/configuration.hpp"
#include "sdist/linalg.hpp"
#include "sdist/polynomial.hpp"

namespace sdist {

// prod_k (<x, v> - t_k), expanded factor by factor in index order. This is c * f_i
// before reduction, with c = prod_k (1 - t_k).
template <class K>
BasicPolynomial<K> annihilating_product(std::span<const K> v, std::span<const K> values) {
  const BasicPolynomial<K> form = linear_form<K>(v);
  BasicPolynomial<K> p = BasicPolynomial<K>::constant(v.size(), K(1));
  for (const K& t : values) p = p * (form - BasicPolynomial<K>::constant(v.size(), t));
  return p;
}

// e_0, ..., e_s of the values.
template <class K>
std::vector<K> elementary_symmetric(std::span<const K> values) {
  std::vector<K> e(values.size() + 1, K(0));
  e[0] = K(1);
  for (std::size_t k = 0; k < values.size(); ++k)
    for (std::size_t j = k + 1; j >= 1; --j) e[j] += e[j - 1] * values[k];
  return e;
}

// sum_j (-1)^j e_j(t) <x, v>^{s-j}: the same polynomial as annihilating_product,
// built from the elementary symmetric functions of the values.
template <class K>
BasicPolynomial<K> elementary_expansion(std::span<const K> v, std::span<const K> values) {
  const std::size_t s = values.size();
  const std::vector<K> e = elementary_symmetric<K>(values);
  const BasicPolynomial<K> form = linear_form<K>(v);
  std::vector<BasicPolynomial<K>> powers{BasicPolynomial<K>::constant(v.size(), K(1))};
  for (std::size_t k = 1; k <= s; ++k) powers.push_back(powers.back() * form);
  BasicPolynomial<K> out(v.size());
  for (std::size_t j = 0; j <= s; ++j) {
    const K coeff = (j % 2 == 0) ? K(e[j]) : K(-e[j]);
    out += powers[s - j] * coeff;
  }
  return out;
}

// Reduced polynomials, normalising constant and coefficient matrix for one scalar mode.
template <class K>
struct CertificateRows {
  K c;
  std::vector<BasicPolynomial<K>> reduced;
  Matrix<K> matrix;
};

struct Certificate {
  PointConfiguration config;
  InnerProductProfile profile;
  BasisOrder basis;  // up to degree s
  std::variant<CertificateRows<Rational>, CertificateRows<double>> rows;
  std::size_t rank = 0;

  bool is_exact() const { return std::holds_alternative<CertificateRows<Rational>>(rows); }
  const CertificateRows<Rational>& exact_rows() const { return std::get<CertificateRows<Rational>>(rows); }
  const CertificateRows<double>& float_rows() const { return std::get<CertificateRows<double>>(rows); }
};

// Builds f_i(x) = prod_k (<x, v_i> - t_k) / prod_k (1 - t_k) for every point, reduces it
// modulo the sphere relation and records its coordinates in the degree <= s basis.
// Throws ConfigError for fewer than two points or when some t_k is (numerically) 1.
Certificate build_certificate(const PointConfiguration& config);

enum class BoundStatus { attained, strict, violated, not_applicable };

std::string to_string(BoundStatus status);

struct BoundCheck {
  std::string name;
  std::string hypothesis;
  bool applies = false;
  std::string value;  // exact text; the Barg-Musin value may be a fraction
  bool respected = true;
};

struct CheckReport {
  std::size_t n = 0;
  std::size_t s = 0;
  std::size_t m = 0;
  bool exact = true;
  bool sum_zero = false;

  // f_i(v_j) == delta_ij; in float mode within 10x the configuration tolerance.
  bool delta = false;
  double delta_max_error = 0.0;

  // Every reduced f_i has no degree s-1 terms; nullopt when the sum-zero hypothesis fails.
  std::optional<bool> degree_gap;
  double degree_gap_max_residual = 0.0;

  std::size_t rank = 0;
  bool independent = false;

  // rank + M_{s-1}(n) <= M_{<=s}(n); checked only when the degree gap holds.
  std::optional<bool> dimension_inequality;

  Integer dm;
  BoundStatus theorem_bound = BoundStatus::not_applicable;
  // A violated bound under the sum-zero hypothesis means a bug upstream.
  bool severe = false;

  std::vector<BoundCheck> other_bounds;

  bool all_passed() const;
};

CheckReport verify_certificate(const Certificate& cert);

// The DGS, Gerzon/Musin, Hegedus and Barg-Musin bounds for a profile: whether each
// hypothesis holds and whether m points respect the bound.
std::vector<BoundCheck> classical_bounds(const InnerProductProfile& prof, std::size_t n, std::size_t m);

}  // namespace sdist
