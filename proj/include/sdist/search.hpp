#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sdist/configuration.hpp"
#include "sdist/rational.hpp"

namespace sdist {

struct RefineOptions {
  int max_iterations = 500;
  double step = 0.05;
  // Stop once the objective is at most tolerance^2.
  double tolerance = 1e-8;
};

struct RefineResult {
  PointConfiguration config;
  double penalty = 0.0;
  int iterations = 0;
  bool converged = false;
  // Objective after each accepted step, starting with the initial value.
  std::vector<double> history;
};

// sum_{i<j} (<v_i, v_j> - nearest target)^2
double target_penalty(const std::vector<FloatPoint>& points, const std::vector<double>& targets);

// Projected gradient descent of target_penalty with every point renormalised after each
// step. A step that increases the objective is retried at half length, at most 30 times.
// Throws DomainError unless targets are strictly increasing and below 1.
RefineResult refine(const PointConfiguration& start, const std::vector<double>& targets,
                    const RefineOptions& options = {});

struct SearchOptions {
  std::size_t m_goal = 2;
  int restarts = 8;
  std::uint64_t seed = 0;
  int max_iterations = 2000;
  // Fixed sum-zero targets; empty means sample per restart and descend on them with the points.
  std::vector<double> targets;
  double tolerance = 1e-8;
  // 0 reads SDIST_SEARCH_THREADS (default 1).
  unsigned threads = 0;
};

struct SearchResult {
  PointConfiguration best;
  std::optional<std::size_t> achieved_s;  // nullopt when the profile of best is ambiguous
  std::size_t s = 0;
  Integer target_bound;  // dm(n, s)
  std::size_t m = 0;
  double penalty = 0.0;
  std::vector<double> targets;
  std::uint64_t seed = 0;
  int iterations = 0;
  int restarts_used = 0;
  std::size_t best_restart = 0;

  // Penalty below tolerance^2.
  bool reached = false;
  bool exceeds_bound = false;
};

inline constexpr double kSearchConfigTolerance = 1e-7;

// Multi-start search for m_goal points on S^{n-1} whose inner products take s values
// summing to zero. Restart r draws from a stream keyed by (seed, r) only, so results do
// not depend on the thread count.
SearchResult search(std::size_t n, std::size_t s, const SearchOptions& options);

// Uniform doubles in [0, 1) from a counter-based generator keyed by (seed, stream).
class CounterStream {
 public:
  CounterStream(std::uint64_t seed, std::uint64_t stream);
  std::uint64_t next_u64();
  double uniform();
  double normal();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

FloatPoint random_sphere_point(std::size_t n, CounterStream& stream);

// s-1 uniform values in (-0.9, 0.9) plus the negated sum, resampled until every |t| < 0.95
// and all values are at least 0.05 apart. Sorted increasingly.
std::vector<double> sample_sum_zero_targets(std::size_t s, CounterStream& stream);

}  // namespace sdist
