#include "sdist/configuration.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "sdist/error.hpp"

namespace sdist {
namespace {

std::string describe_point(std::size_t index) { return "point " + std::to_string(index + 1); }

double dot(const FloatPoint& a, const FloatPoint& b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

Rational dot(const ExactPoint& a, const ExactPoint& b) {
  Rational s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

void check_shape(std::size_t n, std::size_t count, auto&& point_size) {
  if (n < 1) throw ConfigError("dimension must be >= 1");
  if (count < 1) throw ConfigError("configuration has no points");
  for (std::size_t i = 0; i < count; ++i)
    if (point_size(i) != n)
      throw ConfigError(describe_point(i) + " has " + std::to_string(point_size(i)) + " coordinates, expected " +
                        std::to_string(n));
}

}  // namespace

PointConfiguration PointConfiguration::exact(std::size_t n, std::vector<ExactPoint> points) {
  check_shape(n, points.size(), [&](std::size_t i) { return points[i].size(); });
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Rational norm2 = dot(points[i], points[i]);
    if (norm2 != 1)
      throw ConfigError(describe_point(i) + " is not on the sphere: squared norm " + to_string(norm2) +
                        " deviates from 1 by " + to_string(Rational(norm2 - 1)));
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw ConfigError("duplicate points: " + describe_point(i) + " equals " + describe_point(j));

  PointConfiguration c;
  c.n_ = n;
  c.mode_ = ScalarMode::exact;
  c.tolerance_ = 0.0;
  c.float_points_.reserve(points.size());
  for (const auto& p : points) {
    FloatPoint f(n);
    for (std::size_t j = 0; j < n; ++j) f[j] = to_double(p[j]);
    c.float_points_.push_back(std::move(f));
  }
  c.exact_points_ = std::move(points);
  return c;
}

PointConfiguration PointConfiguration::floating(std::size_t n, std::vector<FloatPoint> points, double tolerance) {
  if (!(tolerance >= 0.0) || !std::isfinite(tolerance)) throw ConfigError("tolerance must be a finite value >= 0");
  check_shape(n, points.size(), [&](std::size_t i) { return points[i].size(); });
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (double x : points[i])
      if (!std::isfinite(x)) throw ConfigError(describe_point(i) + " has a non-finite coordinate");
    const double deviation = std::abs(dot(points[i], points[i]) - 1.0);
    if (deviation > tolerance)
      throw ConfigError(describe_point(i) + " is not on the sphere: squared norm deviates from 1 by " +
                        std::to_string(deviation) + " (tolerance " + std::to_string(tolerance) + ")");
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      double d2 = 0.0;
      for (std::size_t k = 0; k < n; ++k) d2 += (points[i][k] - points[j][k]) * (points[i][k] - points[j][k]);
      if (std::sqrt(d2) <= tolerance)
        throw ConfigError("duplicate points: " + describe_point(i) + " and " + describe_point(j) +
                          " are within tolerance");
    }

  PointConfiguration c;
  c.n_ = n;
  c.mode_ = ScalarMode::floating;
  c.tolerance_ = tolerance;
  c.float_points_ = std::move(points);
  return c;
}

const std::vector<ExactPoint>& PointConfiguration::exact_points() const {
  if (mode_ != ScalarMode::exact) throw std::logic_error("configuration is in float mode");
  return exact_points_;
}

PointConfiguration PointConfiguration::without_point(std::size_t index) const {
  if (index >= size()) throw std::out_of_range("point index out of range");
  PointConfiguration c = *this;
  c.float_points_.erase(c.float_points_.begin() + static_cast<std::ptrdiff_t>(index));
  if (is_exact()) c.exact_points_.erase(c.exact_points_.begin() + static_cast<std::ptrdiff_t>(index));
  if (c.float_points_.empty()) throw ConfigError("configuration has no points");
  return c;
}

PointConfiguration PointConfiguration::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != size()) throw std::invalid_argument("permutation size mismatch");
  PointConfiguration c = *this;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    c.float_points_[k] = float_points_.at(perm[k]);
    if (is_exact()) c.exact_points_[k] = exact_points_.at(perm[k]);
  }
  return c;
}

PointConfiguration PointConfiguration::with_tolerance(double tolerance) const {
  if (is_exact()) return *this;
  return floating(n_, float_points_, tolerance);
}

InnerProductProfile profile(const PointConfiguration& config) {
  const std::size_t m = config.size();
  if (m < 2) throw ConfigError("inner products need at least two points, got " + std::to_string(m));

  InnerProductProfile prof;
  prof.mode = config.mode();
  prof.tolerance = config.tolerance();

  if (config.is_exact()) {
    const auto& pts = config.exact_points();
    std::vector<Rational> all;
    all.reserve(m * (m - 1) / 2);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        Rational g = dot(pts[i], pts[j]);
        Rational d2 = 0;
        for (std::size_t k = 0; k < config.dimension(); ++k) {
          Rational diff = pts[i][k] - pts[j][k];
          d2 += diff * diff;
        }
        if (d2 != 2 - 2 * g) throw ConfigError("distance and inner product disagree for a pair");
        all.push_back(std::move(g));
      }
    std::sort(all.begin(), all.end());
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (k == 0 || all[k] != all[k - 1]) {
        prof.exact_values.push_back(all[k]);
        prof.multiplicities.push_back(0);
      }
      ++prof.multiplicities.back();
    }
    Rational sum = 0;
    for (const auto& t : prof.exact_values) {
      if (t >= 1) throw ConfigError("inner product 1 between distinct points");
      sum += t;
      Rational d2 = 2 - 2 * t;
      prof.values.push_back(to_double(t));
      prof.distances.push_back(std::sqrt(to_double(d2)));
      prof.exact_squared_distances.push_back(std::move(d2));
    }
    prof.s = prof.exact_values.size();
    prof.sum = to_double(sum);
    prof.sum_zero = sgn(sum) == 0;
    prof.exact_sum = std::move(sum);
    const std::size_t s = prof.s;
    prof.symmetric_pm = true;
    for (std::size_t k = 0; k < s; ++k)
      if (sgn(prof.exact_values[k]) == 0 || prof.exact_values[k] + prof.exact_values[s - 1 - k] != 0)
        prof.symmetric_pm = false;
    return prof;
  }

  const double tol = config.tolerance();
  const auto& pts = config.float_points();
  struct Pair {
    double g;
    double d2;
  };
  std::vector<Pair> all;
  all.reserve(m * (m - 1) / 2);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      double d2 = 0.0;
      for (std::size_t k = 0; k < config.dimension(); ++k) d2 += (pts[i][k] - pts[j][k]) * (pts[i][k] - pts[j][k]);
      all.push_back({dot(pts[i], pts[j]), d2});
    }
  std::sort(all.begin(), all.end(), [](const Pair& a, const Pair& b) { return a.g < b.g; });

  // Single linkage: gaps <= tol join a cluster, gaps >= 3 tol split, anything between is ambiguous.
  std::vector<std::pair<std::size_t, std::size_t>> clusters{{0, 1}};
  for (std::size_t k = 1; k < all.size(); ++k) {
    const double gap = all[k].g - all[k - 1].g;
    if (gap <= tol) {
      ++clusters.back().second;
    } else if (gap >= 3.0 * tol) {
      clusters.push_back({k, k + 1});
    } else {
      throw ConfigError("ambiguous inner-product clustering: values " + std::to_string(all[k - 1].g) + " and " +
                        std::to_string(all[k].g) + " are separated by less than 3x tolerance");
    }
  }
  double sum = 0.0;
  for (const auto& [begin, end] : clusters) {
    double g = 0.0, d2 = 0.0;
    for (std::size_t k = begin; k < end; ++k) {
      g += all[k].g;
      d2 += all[k].d2;
    }
    const double count = static_cast<double>(end - begin);
    g /= count;
    d2 /= count;
    if (g >= 1.0 - tol) throw ConfigError("inner product 1 between distinct points");
    if (std::abs(d2 - (2.0 - 2.0 * g)) > 2.0 * tol + 1e-15)
      throw ConfigError("distance and inner product disagree beyond tolerance");
    prof.values.push_back(g);
    prof.multiplicities.push_back(end - begin);
    prof.distances.push_back(std::sqrt(d2));
    sum += g;
  }
  prof.s = prof.values.size();
  prof.sum = sum;
  prof.sum_zero = std::abs(sum) <= tol;
  prof.symmetric_pm = true;
  for (std::size_t k = 0; k < prof.s; ++k)
    if (std::abs(prof.values[k]) <= tol || std::abs(prof.values[k] + prof.values[prof.s - 1 - k]) > 2.0 * tol)
      prof.symmetric_pm = false;
  return prof;
}

ExactPoint rational_sphere_point(const std::vector<Rational>& t) {
  Rational q = 0;
  for (const auto& x : t) q += x * x;
  const Rational denom = 1 + q;
  ExactPoint p;
  p.reserve(t.size() + 1);
  for (const auto& x : t) p.push_back(Rational(2 * x / denom));
  p.push_back(Rational((1 - q) / denom));
  return p;
}

namespace {

PointConfiguration orthonormal(std::size_t n) {
  std::vector<ExactPoint> pts(n, ExactPoint(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) pts[i][i] = 1;
  return PointConfiguration::exact(n, std::move(pts));
}

PointConfiguration cross_polytope(std::size_t n) {
  std::vector<ExactPoint> pts;
  for (std::size_t i = 0; i < n; ++i)
    for (int sign : {1, -1}) {
      ExactPoint p(n, Rational(0));
      p[i] = sign;
      pts.push_back(std::move(p));
    }
  return PointConfiguration::exact(n, std::move(pts));
}

// Vertices of the regular simplex written in the Helmert basis of the hyperplane
// sum(y) = 0 in R^{n+1}, rescaled to unit length.
PointConfiguration simplex(std::size_t n) {
  const double scale = std::sqrt(static_cast<double>(n + 1) / static_cast<double>(n));
  std::vector<FloatPoint> pts(n + 1, FloatPoint(n, 0.0));
  for (std::size_t k = 1; k <= n; ++k) {
    const double norm = std::sqrt(static_cast<double>(k * (k + 1)));
    for (std::size_t i = 0; i < k; ++i) pts[i][k - 1] = scale / norm;
    pts[k][k - 1] = -static_cast<double>(k) * scale / norm;
  }
  return PointConfiguration::floating(n, std::move(pts));
}

PointConfiguration hexagon_lines() {
  const double h = std::sqrt(3.0) / 2.0;
  return PointConfiguration::floating(2, {{1.0, 0.0}, {0.5, h}, {-0.5, h}});
}

// One unit vector per diagonal of the icosahedron: cyclic shifts of (0, +-1, phi).
PointConfiguration icosahedron_lines() {
  const double phi = std::numbers::phi;
  const double r = std::sqrt(1.0 + phi * phi);
  std::vector<FloatPoint> pts;
  for (double sign : {1.0, -1.0}) pts.push_back({0.0, sign / r, phi / r});
  for (double sign : {1.0, -1.0}) pts.push_back({sign / r, phi / r, 0.0});
  for (double sign : {1.0, -1.0}) pts.push_back({phi / r, 0.0, sign / r});
  return PointConfiguration::floating(3, std::move(pts));
}

}  // namespace

std::vector<std::string> known_configuration_names() {
  return {"orthonormal", "simplex", "cross_polytope", "hexagon_lines", "icosahedron_lines"};
}

PointConfiguration known_configuration(std::string_view name, std::size_t n) {
  if (n < 2) throw DomainError("fixture dimension must be >= 2");
  if (name == "orthonormal") return orthonormal(n);
  if (name == "simplex") return simplex(n);
  if (name == "cross_polytope") return cross_polytope(n);
  if (name == "hexagon_lines") {
    if (n != 2) throw DomainError("hexagon_lines lives in dimension 2, requested " + std::to_string(n));
    return hexagon_lines();
  }
  if (name == "icosahedron_lines") {
    if (n != 3) throw DomainError("icosahedron_lines lives in dimension 3, requested " + std::to_string(n));
    return icosahedron_lines();
  }
  throw DomainError("unknown configuration '" + std::string(name) + "'");
}

}  // namespace sdist
