#include "sdist/certificate.hpp"

#include <algorithm>
#include <cmath>

#include "sdist/error.hpp"
#include "sdist/reduction.hpp"

namespace sdist {
namespace {

inline constexpr double kDegreeGapThreshold = 1e-6;
inline constexpr double kDeltaToleranceFactor = 10.0;

template <class K>
CertificateRows<K> build_rows(const std::vector<std::vector<K>>& points, const std::vector<K>& values,
                              const BasisOrder& basis) {
  CertificateRows<K> rows;
  rows.c = K(1);
  for (const K& t : values) rows.c *= K(1) - t;
  const K inverse = K(1) / rows.c;
  rows.matrix = Matrix<K>(points.size(), basis.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    BasicPolynomial<K> f = annihilating_product<K>(points[i], values) * inverse;
    BasicPolynomial<K> reduced = canonical_reduce(f);
    const std::vector<K> coeffs = coefficient_vector(reduced, basis);
    for (std::size_t k = 0; k < coeffs.size(); ++k) rows.matrix(i, k) = coeffs[k];
    rows.reduced.push_back(std::move(reduced));
  }
  return rows;
}

}  // namespace

Certificate build_certificate(const PointConfiguration& config) {
  if (config.size() < 2) throw ConfigError("a certificate needs at least two points");
  InnerProductProfile prof = profile(config);
  BasisOrder basis = enumerate_basis(static_cast<long>(config.dimension()), static_cast<long>(prof.s),
                                     BasisMode::up_to_degree);
  if (config.is_exact()) {
    for (const auto& t : prof.exact_values)
      if (t == 1) throw ConfigError("inner product 1 makes the normalising constant vanish");
    auto rows = build_rows<Rational>(config.exact_points(), prof.exact_values, basis);
    const std::size_t rank = exact_rank(rows.matrix);
    return Certificate{config, std::move(prof), std::move(basis), std::move(rows), rank};
  }
  for (double t : prof.values)
    if (std::abs(1.0 - t) < config.tolerance())
      throw ConfigError("inner product within tolerance of 1 makes the normalising constant vanish");
  auto rows = build_rows<double>(config.float_points(), prof.values, basis);
  const std::size_t rank = float_rank(rows.matrix);
  return Certificate{config, std::move(prof), std::move(basis), std::move(rows), rank};
}

std::string to_string(BoundStatus status) {
  switch (status) {
    case BoundStatus::attained: return "attained";
    case BoundStatus::strict: return "strict";
    case BoundStatus::violated: return "violated";
    case BoundStatus::not_applicable: return "not applicable";
  }
  return "unknown";
}

bool CheckReport::all_passed() const {
  if (!delta || !independent) return false;
  if (degree_gap == false || dimension_inequality == false) return false;
  if (theorem_bound == BoundStatus::violated) return false;
  return std::all_of(other_bounds.begin(), other_bounds.end(),
                     [](const BoundCheck& b) { return !b.applies || b.respected; });
}

namespace {

template <class K>
void check_delta(const Certificate& cert, const CertificateRows<K>& rows, CheckReport& report) {
  report.delta = true;
  const double limit = kDeltaToleranceFactor * cert.config.tolerance();
  const std::size_t m = cert.config.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if constexpr (std::is_same_v<K, Rational>) {
        const Rational v = evaluate(rows.reduced[i], cert.config.exact_points()[j]);
        if (v != (i == j ? 1 : 0)) {
          report.delta = false;
          report.delta_max_error = std::max(report.delta_max_error, std::abs(to_double(Rational(v - (i == j ? 1 : 0)))));
        }
      } else {
        const double v = evaluate(rows.reduced[i], cert.config.float_points()[j]);
        const double err = std::abs(v - (i == j ? 1.0 : 0.0));
        report.delta_max_error = std::max(report.delta_max_error, err);
        if (!(err <= limit)) report.delta = false;
      }
    }
}

template <class K>
void check_degree_gap(const Certificate& cert, const CertificateRows<K>& rows, CheckReport& report) {
  const unsigned gap_degree = static_cast<unsigned>(cert.profile.s - 1);
  bool ok = true;
  double residual = 0.0;
  double largest = 0.0;
  if constexpr (std::is_same_v<K, double>)
    for (std::size_t i = 0; i < rows.matrix.rows(); ++i)
      for (std::size_t k = 0; k < rows.matrix.cols(); ++k) largest = std::max(largest, std::abs(rows.matrix(i, k)));
  for (std::size_t i = 0; i < rows.matrix.rows(); ++i)
    for (std::size_t k = 0; k < cert.basis.size(); ++k) {
      if (cert.basis[k].degree() != gap_degree) continue;
      if constexpr (std::is_same_v<K, Rational>) {
        if (sgn(rows.matrix(i, k)) != 0) {
          ok = false;
          residual = std::max(residual, std::abs(to_double(rows.matrix(i, k))));
        }
      } else {
        const double a = std::abs(rows.matrix(i, k));
        residual = std::max(residual, a);
        if (!(a <= kDegreeGapThreshold * largest)) ok = false;
      }
    }
  report.degree_gap = ok;
  report.degree_gap_max_residual = residual;
}

bool hypothesis_sum_nonnegative(const InnerProductProfile& p) {
  if (p.exact_sum) return sgn(*p.exact_sum) >= 0;
  return p.sum >= -p.tolerance;
}

}  // namespace

CheckReport verify_certificate(const Certificate& cert) {
  CheckReport report;
  const auto& prof = cert.profile;
  report.n = cert.config.dimension();
  report.s = prof.s;
  report.m = cert.config.size();
  report.exact = cert.is_exact();
  report.sum_zero = prof.sum_zero;
  const long n = static_cast<long>(report.n), s = static_cast<long>(report.s);

  std::visit(
      [&](const auto& rows) {
        check_delta(cert, rows, report);
        if (prof.sum_zero) check_degree_gap(cert, rows, report);
      },
      cert.rows);

  report.rank = cert.rank;
  report.independent = cert.rank == report.m;

  if (report.degree_gap == true) {
    const Integer lhs = Integer(static_cast<unsigned long>(cert.rank)) + subspace_dimensions(n, s - 1).exact;
    report.dimension_inequality = lhs <= subspace_dimensions(n, s).up_to;
  }

  const BoundsReport bounds = compute_bounds(n, s);
  report.dm = bounds.dm;
  const Integer m(static_cast<unsigned long>(report.m));
  if (prof.sum_zero) {
    if (m == bounds.dm)
      report.theorem_bound = BoundStatus::attained;
    else if (m < bounds.dm)
      report.theorem_bound = BoundStatus::strict;
    else
      report.theorem_bound = BoundStatus::violated;
    report.severe = report.theorem_bound == BoundStatus::violated;
  }

  report.other_bounds = classical_bounds(prof, report.n, report.m);
  return report;
}

std::vector<BoundCheck> classical_bounds(const InnerProductProfile& prof, std::size_t n, std::size_t m_count) {
  const long s = static_cast<long>(prof.s);
  const BoundsReport bounds = compute_bounds(static_cast<long>(n), s);
  const Integer m(static_cast<unsigned long>(m_count));
  const bool even = s % 2 == 0;
  const bool nonnegative = hypothesis_sum_nonnegative(prof);
  return {
      {"dgs", "any spherical s-distance set", true, to_string(bounds.dgs), m <= bounds.dgs},
      {"gerzon", "s = 2 and t_1 + t_2 >= 0", s == 2 && nonnegative, to_string(bounds.gerzon), m <= bounds.gerzon},
      {"hegedus", "s even and P(F) = {+-a_i}", even && prof.symmetric_pm, to_string(bounds.hegedus),
       m <= bounds.hegedus},
      {"barg_musin", "s even and t_1 + ... + t_s >= 0", even && nonnegative, to_string(bounds.barg_musin),
       Rational(m) <= bounds.barg_musin},
  };
}

}  // namespace sdist
