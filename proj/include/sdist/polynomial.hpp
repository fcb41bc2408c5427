#pragma once

#include <cstddef>
#include <cstdio>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "sdist/monomial.hpp"
#include "sdist/rational.hpp"

namespace sdist {

// Sparse polynomial in n variables with coefficients in K (Rational or double).
// Terms are kept in graded-lex order and no stored coefficient is zero.
template <class K>
class BasicPolynomial {
 public:
  using Coefficient = K;
  using Terms = std::map<Monomial, K>;

  explicit BasicPolynomial(std::size_t n) : n_(n) {}

  static BasicPolynomial constant(std::size_t n, const K& c) {
    BasicPolynomial p(n);
    p.add_term(Monomial(n), c);
    return p;
  }
  static BasicPolynomial variable(std::size_t n, std::size_t index) {
    BasicPolynomial p(n);
    p.add_term(Monomial::variable(n, index), K(1));
    return p;
  }
  static BasicPolynomial term(const Monomial& m, const K& c) {
    BasicPolynomial p(m.dimension());
    p.add_term(m, c);
    return p;
  }

  std::size_t dimension() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  // nullopt stands for the degree of the zero polynomial (minus infinity).
  std::optional<unsigned> degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.degree();
  }

  K coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? K(0) : it->second;
  }

  void add_term(const Monomial& m, const K& c) {
    if (m.dimension() != n_) throw std::invalid_argument("monomial dimension mismatch");
    if (sdist::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (sdist::is_zero(it->second)) terms_.erase(it);
  }

  BasicPolynomial& operator+=(const BasicPolynomial& o) {
    check_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  BasicPolynomial& operator-=(const BasicPolynomial& o) {
    check_dim(o);
    for (const auto& [m, c] : o.terms_) add_term(m, K(-c));
    return *this;
  }
  BasicPolynomial& operator*=(const K& a) {
    if (sdist::is_zero(a)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= a;
    return *this;
  }

  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }
  friend BasicPolynomial operator-(BasicPolynomial a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }
  friend BasicPolynomial operator*(BasicPolynomial a, const K& k) { return a *= k; }
  friend BasicPolynomial operator*(const K& k, BasicPolynomial a) { return a *= k; }
  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    a.check_dim(b);
    BasicPolynomial r(a.n_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, K(ca * cb));
    return r;
  }
  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  // Terms in increasing graded-lex order, e.g. "1 - x2^2", "x1*x2 - x1*x2^3", "0".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      const bool negative = c < K(0);
      const K mag = negative ? K(-c) : c;
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      first = false;
      const bool unit = mag == K(1);
      const bool constant = m.degree() == 0;
      if (constant) {
        out += format_coefficient(mag);
      } else {
        if (!unit) out += format_coefficient(mag) + "*";
        out += m.to_string();
      }
    }
    return out;
  }

 private:
  void check_dim(const BasicPolynomial& o) const {
    if (o.n_ != n_) throw std::invalid_argument("polynomial dimension mismatch");
  }
  static std::string format_coefficient(const K& c) {
    if constexpr (std::is_same_v<K, double>) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", c);
      return buf;
    } else {
      return sdist::to_string(c);
    }
  }

  std::size_t n_;
  Terms terms_;
};

using Polynomial = BasicPolynomial<Rational>;
using FloatPolynomial = BasicPolynomial<double>;

// sum_j a_j x_j
template <class K>
BasicPolynomial<K> linear_form(std::span<const K> a) {
  BasicPolynomial<K> p(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) p.add_term(Monomial::variable(a.size(), j), a[j]);
  return p;
}

template <class S, class K>
S convert_scalar(const K& k) {
  if constexpr (std::is_same_v<S, double>)
    return to_double(k);
  else
    return S(k);
}

// Value of f at p. Coefficients are converted to the point's scalar type, so a
// rational polynomial can be evaluated exactly at rational points or in floating point.
template <class K, class S>
S evaluate(const BasicPolynomial<K>& f, std::span<const S> p) {
  if (p.size() != f.dimension())
    throw std::invalid_argument("point has " + std::to_string(p.size()) + " coordinates, polynomial has " +
                                std::to_string(f.dimension()) + " variables");
  S total(0);
  std::vector<std::vector<S>> powers(p.size(), std::vector<S>{S(1)});
  for (const auto& [m, c] : f.terms()) {
    S value = convert_scalar<S>(c);
    for (std::size_t j = 0; j < p.size(); ++j) {
      const std::uint32_t e = m.exponent(j);
      if (e == 0) continue;
      auto& pw = powers[j];
      while (pw.size() <= e) pw.push_back(S(pw.back() * p[j]));
      value *= pw[e];
    }
    total += value;
  }
  return total;
}

template <class K, class S>
S evaluate(const BasicPolynomial<K>& f, const std::vector<S>& p) {
  return evaluate<K, S>(f, std::span<const S>(p));
}

template <class To, class From>
BasicPolynomial<To> convert_polynomial(const BasicPolynomial<From>& f) {
  BasicPolynomial<To> r(f.dimension());
  for (const auto& [m, c] : f.terms()) r.add_term(m, convert_scalar<To>(c));
  return r;
}

}  // namespace sdist
