#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sdist/configuration.hpp"
#include "sdist/error.hpp"
#include "sdist/pointset_io.hpp"

using namespace sdist;

TEST_CASE("parse_config reads exact pointsets") {
  const auto c = parse_config(
      "# two points on the circle\n"
      "mode exact\n"
      "dim 2\n"
      "point 3/5 4/5\n"
      "point 5/13 12/13\n");
  CHECK(c.is_exact());
  CHECK(c.dimension() == 2);
  CHECK(c.size() == 2);
  CHECK(c.exact_points()[1][1] == Rational(12, 13));

  const InnerProductProfile p = profile(c);
  CHECK(p.s == 1);
  CHECK(p.exact_values[0] == Rational(63, 65));
}

TEST_CASE("parse_config errors") {
  CHECK_THROWS_AS(parse_config("mode exact\ndim 2\npoint 1 1\npoint 0 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("mode exact\ndim 2\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("mode exact\ndim 2\npoint 1 0\npoint 1 0\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("mode exact\ndim 2\npoint 1 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_config("mode exact\ndim 2\npoint 1 0\nbogus\n"), ParseError);
  try {
    parse_config("mode exact\ndim 2\npoint 1 0\npoint 0.6 0.8\n");
    FAIL("decimal accepted in exact mode");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
  try {
    parse_config("mode exact\ndim 2\npoint 1 0\npoint 1 1\n");
    FAIL("off-sphere point accepted");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("point 2") != std::string::npos);
  }
}

TEST_CASE("float pointsets use the tolerance") {
  const auto c = parse_config("mode float\ndim 2\ntol 1e-6\npoint 1 0\npoint 0.6 0.8000001\n");
  CHECK_FALSE(c.is_exact());
  CHECK(c.tolerance() == 1e-6);
  CHECK_THROWS_AS(parse_config("mode float\ndim 2\ntol 1e-9\npoint 1 0\npoint 0.6 0.81\n"), ConfigError);
}

TEST_CASE("write_config round trips") {
  for (const auto& name : known_configuration_names()) {
    const std::size_t n = name == "icosahedron_lines" ? 3 : (name == "hexagon_lines" ? 2 : 4);
    const PointConfiguration c = known_configuration(name, n);
    const PointConfiguration back = parse_config(write_config(c));
    CHECK(back.mode() == c.mode());
    CHECK(back.size() == c.size());
    if (c.is_exact()) {
      CHECK(back.exact_points() == c.exact_points());
    } else {
      CHECK(back.float_points() == c.float_points());
      CHECK(back.tolerance() == c.tolerance());
    }
  }
}

TEST_CASE("profiles of the fixtures") {
  const auto ortho = profile(known_configuration("orthonormal", 4));
  CHECK(ortho.s == 1);
  CHECK(ortho.exact_values == std::vector<Rational>{0});
  CHECK(ortho.multiplicities == std::vector<std::size_t>{6});
  CHECK(ortho.sum_zero);
  CHECK(ortho.exact_squared_distances == std::vector<Rational>{2});

  for (std::size_t n = 2; n <= 6; ++n) {
    const auto simplex = profile(known_configuration("simplex", n));
    CHECK(simplex.mode == ScalarMode::floating);
    REQUIRE(simplex.s == 1);
    CHECK(simplex.values[0] == doctest::Approx(-1.0 / static_cast<double>(n)).epsilon(1e-12));
    CHECK_FALSE(simplex.sum_zero);
  }

  const auto hex = profile(known_configuration("hexagon_lines", 2));
  REQUIRE(hex.s == 2);
  CHECK(hex.values[0] == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(hex.values[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(hex.sum_zero);
  CHECK(hex.symmetric_pm);
  CHECK(hex.distances[0] > hex.distances[1]);

  const auto cross = profile(known_configuration("cross_polytope", 3));
  CHECK(cross.exact_values == std::vector<Rational>{-1, 0});
  CHECK(*cross.exact_sum == -1);
  CHECK_FALSE(cross.sum_zero);
  CHECK_FALSE(cross.symmetric_pm);
  CHECK(cross.multiplicities == std::vector<std::size_t>{3, 12});

  const auto ico = profile(known_configuration("icosahedron_lines", 3));
  REQUIRE(ico.s == 2);
  CHECK(std::abs(ico.values[0] + 1.0 / std::sqrt(5.0)) < 1e-9);
  CHECK(std::abs(ico.values[1] - 1.0 / std::sqrt(5.0)) < 1e-9);
  CHECK(ico.sum_zero);

  CHECK_THROWS_AS(profile(known_configuration("orthonormal", 3).without_point(0).without_point(0)), ConfigError);
  CHECK_THROWS_AS(known_configuration("hexagon_lines", 3), DomainError);
  CHECK_THROWS_AS(known_configuration("nonesuch", 3), DomainError);
}

TEST_CASE("rational_sphere_point") {
  CHECK(rational_sphere_point({Rational(1, 2)}) == ExactPoint{Rational(4, 5), Rational(3, 5)});
  CHECK(rational_sphere_point({0, 0}) == ExactPoint{0, 0, 1});
  CHECK(rational_sphere_point({1, 1}) == ExactPoint{Rational(2, 3), Rational(2, 3), Rational(-1, 3)});

  std::mt19937_64 rng(5);
  for (int k = 0; k < 1000; ++k) {
    std::vector<Rational> t(1 + static_cast<std::size_t>(k % 5));
    for (auto& x : t) x = oracle::random_rational(rng, 20, 11);
    const ExactPoint p = rational_sphere_point(t);
    Rational norm = 0;
    for (const auto& x : p) norm += x * x;
    CHECK(norm == 1);
  }
}

TEST_CASE("profile is invariant under permutation and rotation") {
  const PointConfiguration ico = known_configuration("icosahedron_lines", 3);
  const auto base = profile(ico);

  std::vector<std::size_t> perm(ico.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(3);
  std::shuffle(perm.begin(), perm.end(), rng);
  const auto shuffled = profile(ico.permuted(perm));
  CHECK(shuffled.s == base.s);
  CHECK(shuffled.multiplicities == base.multiplicities);

  // Rotation about the z axis followed by one about the x axis.
  const double a = 0.7, b = -1.3;
  std::vector<FloatPoint> rotated;
  for (const auto& p : ico.float_points()) {
    const double x = std::cos(a) * p[0] - std::sin(a) * p[1];
    const double y = std::sin(a) * p[0] + std::cos(a) * p[1];
    rotated.push_back({x, std::cos(b) * y - std::sin(b) * p[2], std::sin(b) * y + std::cos(b) * p[2]});
  }
  const auto rot = profile(PointConfiguration::floating(3, rotated, ico.tolerance()));
  REQUIRE(rot.s == base.s);
  for (std::size_t k = 0; k < rot.s; ++k) CHECK(std::abs(rot.values[k] - base.values[k]) < 1e-12);
  CHECK(rot.multiplicities == base.multiplicities);

  const PointConfiguration cross = known_configuration("cross_polytope", 4);
  std::vector<std::size_t> rev(cross.size());
  std::iota(rev.rbegin(), rev.rend(), 0);
  CHECK(profile(cross.permuted(rev)).exact_values == profile(cross).exact_values);
}

TEST_CASE("float clustering rejects ambiguous gaps") {
  const double tol = 1e-3;
  const double a = std::acos(0.5), b = std::acos(0.502);
  const std::vector<FloatPoint> pts{{1, 0}, {std::cos(a), std::sin(a)}, {std::cos(b), std::sin(b)}};
  CHECK_THROWS_AS(profile(PointConfiguration::floating(2, pts, tol)), ConfigError);

  const double c = std::acos(0.5004);
  const std::vector<FloatPoint> close{{1, 0}, {std::cos(a), std::sin(a)}, {std::cos(c), -std::sin(c)}};
  const auto merged = profile(PointConfiguration::floating(2, close, tol));
  CHECK(merged.s == 2);
  CHECK(merged.multiplicities[1] == 2);
}
