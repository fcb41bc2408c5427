#include <cmath>

#include "doctest.h"
#include "sdist/certificate.hpp"
#include "sdist/error.hpp"
#include "sdist/search.hpp"

using namespace sdist;

namespace {

PointConfiguration perturbed(const PointConfiguration& c, double noise, std::uint64_t seed) {
  CounterStream stream(seed, 0);
  std::vector<FloatPoint> pts = c.float_points();
  for (auto& p : pts) {
    double r = 0.0;
    for (double& x : p) {
      x += noise * stream.normal();
      r += x * x;
    }
    for (double& x : p) x /= std::sqrt(r);
  }
  return PointConfiguration::floating(c.dimension(), pts, kSearchConfigTolerance);
}

double max_deviation(const PointConfiguration& c, const std::vector<double>& targets) {
  double worst = 0.0;
  const auto& pts = c.float_points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      double g = 0.0;
      for (std::size_t k = 0; k < pts[i].size(); ++k) g += pts[i][k] * pts[j][k];
      double best = 2.0;
      for (double t : targets) best = std::min(best, std::abs(g - t));
      worst = std::max(worst, best);
    }
  return worst;
}

}  // namespace

TEST_CASE("refine pulls a perturbed hexagon back") {
  const std::vector<double> targets{-0.5, 0.5};
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const PointConfiguration start = perturbed(known_configuration("hexagon_lines", 2), 1e-2, seed);
    CHECK(max_deviation(start, targets) > 1e-4);
    const RefineResult r = refine(start, targets);
    CHECK(r.converged);
    CHECK(r.iterations <= 500);
    CHECK(max_deviation(r.config, targets) <= 1e-6);
    for (std::size_t k = 1; k < r.history.size(); ++k) CHECK(r.history[k] <= r.history[k - 1]);
    CHECK(r.history.front() == doctest::Approx(target_penalty(start.float_points(), targets)));
  }
}

TEST_CASE("refine leaves an exact solution alone") {
  const PointConfiguration hex = known_configuration("hexagon_lines", 2);
  const RefineResult r = refine(hex, {-0.5, 0.5});
  CHECK(r.converged);
  CHECK(r.iterations == 0);
  for (std::size_t i = 0; i < hex.size(); ++i)
    for (std::size_t k = 0; k < 2; ++k) CHECK(std::abs(r.config.float_points()[i][k] - hex.float_points()[i][k]) < 1e-12);
}

TEST_CASE("refine validates its input") {
  const PointConfiguration hex = known_configuration("hexagon_lines", 2);
  CHECK_THROWS_AS(refine(hex, {0.5, -0.5}), DomainError);
  CHECK_THROWS_AS(refine(hex, {}), DomainError);
  CHECK_THROWS_AS(refine(hex, {-0.5, 1.0}), DomainError);
  CHECK_THROWS_AS(refine(known_configuration("orthonormal", 2), {0.0}), DomainError);
}

TEST_CASE("counter streams are keyed by seed and stream") {
  CounterStream a(42, 3), b(42, 3), c(42, 4), d(43, 3);
  for (int k = 0; k < 100; ++k) {
    const std::uint64_t x = a.next_u64();
    CHECK(x == b.next_u64());
    CHECK(x != c.next_u64());
    CHECK(x != d.next_u64());
  }
  CounterStream u(1, 1);
  double mean = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const double x = u.uniform();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
    mean += x;
  }
  CHECK(mean / 10000 == doctest::Approx(0.5).epsilon(0.02));

  CounterStream t(9, 0);
  for (std::size_t s = 1; s <= 5; ++s) {
    const auto v = sample_sum_zero_targets(s, t);
    REQUIRE(v.size() == s);
    double sum = 0.0;
    for (std::size_t k = 0; k < s; ++k) {
      sum += v[k];
      CHECK(std::abs(v[k]) < 0.95);
      if (k > 0) CHECK(v[k] - v[k - 1] >= 0.05);
    }
    CHECK(std::abs(sum) < 1e-12);
  }
}

TEST_CASE("search finds three points with two distances in the plane") {
  SearchOptions opts;
  opts.m_goal = 3;
  opts.seed = 42;
  opts.restarts = 8;
  const SearchResult r = search(2, 2, opts);
  CHECK(r.reached);
  CHECK(r.penalty < 1e-12);
  CHECK_FALSE(r.exceeds_bound);
  CHECK(r.target_bound == 3);
  REQUIRE(r.achieved_s.has_value());
  CHECK(*r.achieved_s == 2);
  CHECK(std::abs(r.targets[0] + r.targets[1]) < 1e-12);

  const CheckReport report = verify_certificate(build_certificate(r.best));
  CHECK(report.rank == 3);
  CHECK(report.theorem_bound == BoundStatus::attained);
  CHECK(report.all_passed());
}

TEST_CASE("search with a fixed zero target gives an orthonormal triple") {
  SearchOptions opts;
  opts.m_goal = 3;
  opts.targets = {0.0};
  opts.seed = 7;
  const SearchResult r = search(3, 1, opts);
  CHECK(r.reached);
  CHECK(max_deviation(r.best, {0.0}) < 1e-7);
  CHECK(r.target_bound == 3);
}

TEST_CASE("search cannot beat the bound") {
  SearchOptions opts;
  opts.m_goal = 4;
  opts.seed = 42;
  const SearchResult r = search(2, 2, opts);
  CHECK(r.exceeds_bound);
  CHECK_FALSE(r.reached);
  CHECK(r.penalty > 1e-4);
}

TEST_CASE("search is deterministic and independent of the thread count") {
  SearchOptions opts;
  opts.m_goal = 5;
  opts.seed = 2024;
  opts.restarts = 6;
  opts.max_iterations = 400;
  opts.threads = 1;
  const SearchResult a = search(3, 2, opts);
  const SearchResult b = search(3, 2, opts);
  opts.threads = 4;
  const SearchResult c = search(3, 2, opts);
  CHECK(a.best.float_points() == b.best.float_points());
  CHECK(a.best.float_points() == c.best.float_points());
  CHECK(a.penalty == c.penalty);
  CHECK(a.best_restart == c.best_restart);
  CHECK(a.targets == c.targets);
}

TEST_CASE("search validates its input") {
  SearchOptions opts;
  opts.m_goal = 3;
  CHECK_THROWS_AS(search(1, 2, opts), DomainError);
  CHECK_THROWS_AS(search(2, 0, opts), DomainError);
  opts.targets = {-0.5, 0.4};
  CHECK_THROWS_AS(search(2, 2, opts), DomainError);
  opts.targets = {-0.5, 0.5};
  CHECK_THROWS_AS(search(2, 3, opts), DomainError);
  opts.targets.clear();
  opts.m_goal = 1;
  CHECK_THROWS_AS(search(2, 2, opts), DomainError);
}
