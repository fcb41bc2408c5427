#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sdist/rational.hpp"

namespace sdist {

enum class ScalarMode { exact, floating };

using ExactPoint = std::vector<Rational>;
using FloatPoint = std::vector<double>;

inline constexpr double kDefaultTolerance = 1e-9;

// A finite set of distinct unit vectors in R^n, stored either as exact rationals
// or as doubles with a tolerance. The factories validate and throw ConfigError.
class PointConfiguration {
 public:
  static PointConfiguration exact(std::size_t n, std::vector<ExactPoint> points);
  static PointConfiguration floating(std::size_t n, std::vector<FloatPoint> points,
                                     double tolerance = kDefaultTolerance);

  std::size_t dimension() const noexcept { return n_; }
  ScalarMode mode() const noexcept { return mode_; }
  bool is_exact() const noexcept { return mode_ == ScalarMode::exact; }
  std::size_t size() const noexcept { return float_points_.size(); }
  // 0 in exact mode.
  double tolerance() const noexcept { return tolerance_; }

  // Throws std::logic_error in float mode.
  const std::vector<ExactPoint>& exact_points() const;
  // Always available; converted from the exact points in exact mode.
  const std::vector<FloatPoint>& float_points() const noexcept { return float_points_; }

  // Copy with one point removed.
  PointConfiguration without_point(std::size_t index) const;
  // Copy with the points reordered; perm[k] is the index of the point placed at k.
  PointConfiguration permuted(const std::vector<std::size_t>& perm) const;
  PointConfiguration with_tolerance(double tolerance) const;

 private:
  PointConfiguration() = default;

  std::size_t n_ = 0;
  ScalarMode mode_ = ScalarMode::exact;
  double tolerance_ = 0.0;
  std::vector<ExactPoint> exact_points_;
  std::vector<FloatPoint> float_points_;
};

// The distinct inner products P(F) of a configuration and the matching distances D(F).
struct InnerProductProfile {
  ScalarMode mode = ScalarMode::exact;
  double tolerance = 0.0;
  std::size_t s = 0;
  // Increasing t_1 < ... < t_s (cluster means in float mode).
  std::vector<double> values;
  // Exact t_k, exact mode only.
  std::vector<Rational> exact_values;
  // Number of unordered pairs per value.
  std::vector<std::size_t> multiplicities;
  // distances[k] = |x - y| for pairs with inner product values[k], so this list is decreasing.
  std::vector<double> distances;
  // Exact squared distances 2 - 2 t_k, exact mode only.
  std::vector<Rational> exact_squared_distances;
  double sum = 0.0;
  std::optional<Rational> exact_sum;
  bool sum_zero = false;
  // The values split into pairs {a, -a} with a != 0.
  bool symmetric_pm = false;
};

// Throws ConfigError for fewer than two points, or in float mode when two clusters of
// inner products are closer than three tolerances (ambiguous clustering).
InnerProductProfile profile(const PointConfiguration& config);

// Inverse stereographic projection of t in Q^{n-1} onto the unit sphere in Q^n.
ExactPoint rational_sphere_point(const std::vector<Rational>& t);

// Fixtures: orthonormal, simplex, cross_polytope, hexagon_lines (n = 2), icosahedron_lines (n = 3).
PointConfiguration known_configuration(std::string_view name, std::size_t n);

std::vector<std::string> known_configuration_names();

}  // namespace sdist
