#include "sdist/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>
#include <thread>

#include <Eigen/Dense>

#include "sdist/bounds.hpp"
#include "sdist/error.hpp"

namespace sdist {
namespace {

constexpr int kMaxHalvings = 30;
constexpr double kTargetSeparation = 0.05;
constexpr double kTargetLimit = 0.95;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

double dot(const FloatPoint& a, const FloatPoint& b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

void normalize(FloatPoint& p) {
  const double r = std::sqrt(dot(p, p));
  for (double& x : p) x /= r;
}

void check_targets(const std::vector<double>& targets) {
  if (targets.empty()) throw DomainError("at least one target inner product is required");
  for (std::size_t k = 0; k < targets.size(); ++k) {
    if (!(targets[k] < 1.0)) throw DomainError("target inner products must be below 1");
    if (k > 0 && !(targets[k] > targets[k - 1])) throw DomainError("target inner products must be strictly increasing");
  }
}

bool acceptable_targets(const std::vector<double>& t) {
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (!(std::abs(t[k]) < kTargetLimit)) return false;
    if (k > 0 && !(t[k] - t[k - 1] >= kTargetSeparation)) return false;
  }
  return true;
}

std::size_t nearest_index(double g, const std::vector<double>& targets) {
  auto it = std::lower_bound(targets.begin(), targets.end(), g);
  if (it == targets.end()) return targets.size() - 1;
  if (it == targets.begin()) return 0;
  const auto k = static_cast<std::size_t>(it - targets.begin());
  return (g - targets[k - 1] <= targets[k] - g) ? k - 1 : k;
}

// Tangential gradient of the penalty for every point.
void penalty_gradient(const std::vector<FloatPoint>& pts, const std::vector<double>& targets,
                      std::vector<FloatPoint>& grad) {
  const std::size_t m = pts.size(), n = pts.empty() ? 0 : pts[0].size();
  for (auto& g : grad) std::fill(g.begin(), g.end(), 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const double g = dot(pts[i], pts[j]);
      const double w = 2.0 * (g - targets[nearest_index(g, targets)]);
      for (std::size_t c = 0; c < n; ++c) {
        grad[i][c] += w * pts[j][c];
        grad[j][c] += w * pts[i][c];
      }
    }
  for (std::size_t i = 0; i < m; ++i) {
    const double radial = dot(grad[i], pts[i]);
    for (std::size_t c = 0; c < n; ++c) grad[i][c] -= radial * pts[i][c];
  }
}

constexpr int kPolishIterations = 200;

struct Polished {
  std::vector<FloatPoint> pts;
  std::vector<double> targets;
  double penalty = 0.0;
  int iterations = 0;
};

// Levenberg-Marquardt on the residuals <v_i, v_j> - t_k(ij) and |v_i|^2 - 1, with the
// nearest-target assignment frozen per step. Free targets are parametrised by t_1..t_{s-1}
// with t_s = -(t_1 + ... + t_{s-1}); fixed targets are left alone. Points are renormalised
// after every accepted step and a step is accepted only if the penalty does not increase.
Polished polish(std::vector<FloatPoint> pts, std::vector<double> targets, bool free_targets, double tolerance) {
  const std::size_t m = pts.size(), n = pts[0].size(), s = targets.size();
  const std::size_t free = free_targets ? s - 1 : 0;
  const std::size_t vars = m * n + free;
  const std::size_t pairs = m * (m - 1) / 2;
  double energy = target_penalty(pts, targets);
  double lambda = 1e-3;
  int it = 0;
  Eigen::MatrixXd jac(pairs + m, vars);
  Eigen::VectorXd res(pairs + m);
  for (; it < kPolishIterations && energy > tolerance * tolerance; ++it) {
    jac.setZero();
    std::size_t row = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j, ++row) {
        const double g = dot(pts[i], pts[j]);
        const std::size_t k = nearest_index(g, targets);
        res(static_cast<Eigen::Index>(row)) = g - targets[k];
        for (std::size_t c = 0; c < n; ++c) {
          jac(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(i * n + c)) = pts[j][c];
          jac(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(j * n + c)) = pts[i][c];
        }
        for (std::size_t f = 0; f < free; ++f)
          jac(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(m * n + f)) = k == f ? -1.0 : (k + 1 == s ? 1.0 : 0.0);
      }
    for (std::size_t i = 0; i < m; ++i, ++row) {
      res(static_cast<Eigen::Index>(row)) = dot(pts[i], pts[i]) - 1.0;
      for (std::size_t c = 0; c < n; ++c)
        jac(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(i * n + c)) = 2.0 * pts[i][c];
    }
    const Eigen::MatrixXd normal = jac.transpose() * jac;
    const Eigen::VectorXd rhs = -(jac.transpose() * res);

    bool accepted = false;
    while (!accepted && lambda < 1e12) {
      Eigen::MatrixXd damped = normal;
      damped.diagonal().array() += lambda * (1.0 + normal.diagonal().array());
      const Eigen::VectorXd delta = damped.ldlt().solve(rhs);
      std::vector<FloatPoint> trial = pts;
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t c = 0; c < n; ++c) trial[i][c] += delta(static_cast<Eigen::Index>(i * n + c));
        normalize(trial[i]);
      }
      std::vector<double> ttrial = targets;
      if (free_targets) {
        double sum = 0.0;
        for (std::size_t f = 0; f < free; ++f) {
          ttrial[f] += delta(static_cast<Eigen::Index>(m * n + f));
          sum += ttrial[f];
        }
        ttrial[s - 1] = -sum;
      }
      const double e = acceptable_targets(ttrial) ? target_penalty(trial, ttrial) : energy + 1.0;
      if (std::isfinite(e) && e <= energy) {
        pts.swap(trial);
        targets.swap(ttrial);
        energy = e;
        lambda = std::max(lambda / 3.0, 1e-12);
        accepted = true;
      } else {
        lambda *= 4.0;
      }
    }
    if (!accepted) break;
  }
  return {std::move(pts), std::move(targets), energy, it};
}

unsigned thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SDIST_SEARCH_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(std::min(v, 256L));
  }
  return 1;
}

struct RestartOutcome {
  std::optional<PointConfiguration> config;
  std::vector<double> targets;
  double penalty = std::numeric_limits<double>::infinity();
  int iterations = 0;
  bool uses_all_targets = false;
};

bool uses_all_targets(const std::vector<FloatPoint>& pts, const std::vector<double>& targets) {
  std::vector<bool> hit(targets.size(), false);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) hit[nearest_index(dot(pts[i], pts[j]), targets)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

RestartOutcome run_restart(std::size_t n, std::size_t s, const SearchOptions& options, std::size_t restart) {
  CounterStream stream(options.seed, restart);
  std::vector<FloatPoint> pts;
  for (std::size_t i = 0; i < options.m_goal; ++i) pts.push_back(random_sphere_point(n, stream));

  const bool adaptive = options.targets.empty();
  std::vector<double> targets = adaptive ? sample_sum_zero_targets(s, stream) : options.targets;

  RestartOutcome out;
  const RefineOptions ropts{options.max_iterations, 0.05, options.tolerance};
  try {
    // Gradient fit to the current targets, then a Levenberg-Marquardt polish that may also
    // move sampled targets.
    RefineResult fit = refine(PointConfiguration::floating(n, pts, kSearchConfigTolerance), targets, ropts);
    Polished p = polish(fit.config.float_points(), targets, adaptive, options.tolerance);
    out.iterations = fit.iterations + p.iterations;
    out.config = PointConfiguration::floating(n, std::move(p.pts), kSearchConfigTolerance);
    targets = std::move(p.targets);
    out.penalty = target_penalty(out.config->float_points(), targets);
    out.uses_all_targets = uses_all_targets(out.config->float_points(), targets);
  } catch (const ConfigError&) {
    // points collapsed onto each other
    out.config.reset();
    out.penalty = std::numeric_limits<double>::infinity();
  }
  out.targets = targets;
  return out;
}

}  // namespace

CounterStream::CounterStream(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix64(seed ^ splitmix64(stream * 0xD1B54A32D192ED03ull + 1))) {}

std::uint64_t CounterStream::next_u64() { return splitmix64(key_ + 0x9E3779B97F4A7C15ull * counter_++); }

double CounterStream::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double CounterStream::normal() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

FloatPoint random_sphere_point(std::size_t n, CounterStream& stream) {
  for (;;) {
    FloatPoint p(n);
    for (double& x : p) x = stream.normal();
    if (dot(p, p) > 1e-300) {
      normalize(p);
      return p;
    }
  }
}

std::vector<double> sample_sum_zero_targets(std::size_t s, CounterStream& stream) {
  if (s == 0) throw DomainError("s must be >= 1");
  if (s == 1) return {0.0};
  for (;;) {
    std::vector<double> t(s);
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < s; ++k) {
      t[k] = -0.9 + 1.8 * stream.uniform();
      sum += t[k];
    }
    t[s - 1] = -sum;
    std::sort(t.begin(), t.end());
    if (acceptable_targets(t)) return t;
  }
}

double target_penalty(const std::vector<FloatPoint>& points, const std::vector<double>& targets) {
  double e = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const double g = dot(points[i], points[j]);
      const double d = g - targets[nearest_index(g, targets)];
      e += d * d;
    }
  return e;
}

RefineResult refine(const PointConfiguration& start, const std::vector<double>& targets,
                    const RefineOptions& options) {
  if (start.is_exact()) throw DomainError("refine works on float configurations");
  check_targets(targets);
  const std::size_t m = start.size(), n = start.dimension();
  std::vector<FloatPoint> pts = start.float_points();
  double energy = target_penalty(pts, targets);
  RefineResult result{start, energy, 0, false, {energy}};

  double step = options.step;
  std::vector<FloatPoint> grad(m, FloatPoint(n));
  std::vector<FloatPoint> trial(m, FloatPoint(n));
  int it = 0;
  for (; it < options.max_iterations; ++it) {
    if (energy <= options.tolerance * options.tolerance) {
      result.converged = true;
      break;
    }
    penalty_gradient(pts, targets, grad);

    bool accepted = false;
    for (int halvings = 0; halvings <= kMaxHalvings; ++halvings, step *= 0.5) {
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < n; ++k) trial[i][k] = pts[i][k] - step * grad[i][k];
        normalize(trial[i]);
      }
      const double e = target_penalty(trial, targets);
      if (e <= energy) {
        pts.swap(trial);
        energy = e;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
    result.history.push_back(energy);
    step = std::min(2.0 * step, options.step);
  }
  if (energy <= options.tolerance * options.tolerance) result.converged = true;
  result.iterations = it;
  result.penalty = energy;
  result.config = PointConfiguration::floating(n, std::move(pts), start.tolerance());
  return result;
}

SearchResult search(std::size_t n, std::size_t s, const SearchOptions& options) {
  if (n < 2) throw DomainError("dimension n must be >= 2");
  if (s < 1) throw DomainError("s must be >= 1");
  if (options.m_goal < 2) throw DomainError("m_goal must be >= 2");
  if (options.restarts < 1) throw DomainError("restarts must be >= 1");
  if (!options.targets.empty()) {
    check_targets(options.targets);
    if (options.targets.size() != s) throw DomainError("expected " + std::to_string(s) + " targets");
    double sum = 0.0;
    for (double t : options.targets) sum += t;
    if (std::abs(sum) > 1e-9) throw DomainError("targets must sum to zero");
  }

  const std::size_t restarts = static_cast<std::size_t>(options.restarts);
  std::vector<RestartOutcome> outcomes(restarts);
  const unsigned threads = std::min<unsigned>(thread_count(options.threads), static_cast<unsigned>(restarts));
  if (threads <= 1) {
    for (std::size_t r = 0; r < restarts; ++r) outcomes[r] = run_restart(n, s, options, r);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t r = w; r < restarts; r += threads) outcomes[r] = run_restart(n, s, options, r);
      });
    for (auto& t : pool) t.join();
  }

  // Among restarts that reach the tolerance, those using every target come first; otherwise
  // the lowest penalty wins and ties keep the earliest restart.
  const double reach = options.tolerance * options.tolerance;
  auto rank = [&](const RestartOutcome& o) { return o.penalty < reach ? (o.uses_all_targets ? 0 : 1) : 2; };
  std::size_t best = restarts;
  for (std::size_t r = 0; r < restarts; ++r) {
    if (!outcomes[r].config) continue;
    if (best == restarts) {
      best = r;
      continue;
    }
    const int a = rank(outcomes[r]), b = rank(outcomes[best]);
    if (a < b || (a == b && outcomes[r].penalty < outcomes[best].penalty)) best = r;
  }
  if (best == restarts) throw ConfigError("every restart collapsed to coincident points");

  const RestartOutcome& win = outcomes[best];
  SearchResult result{*win.config, std::nullopt, 0, Integer(0), 0, 0.0, {}, 0, 0, 0, 0, false, false};
  result.s = s;
  result.m = win.config->size();
  result.penalty = win.penalty;
  result.targets = win.targets;
  result.seed = options.seed;
  result.iterations = win.iterations;
  result.restarts_used = options.restarts;
  result.best_restart = best;
  result.target_bound = compute_bounds(static_cast<long>(n), static_cast<long>(s)).dm;
  result.exceeds_bound = Integer(static_cast<unsigned long>(result.m)) > result.target_bound;
  result.reached = result.penalty < options.tolerance * options.tolerance;
  try {
    result.achieved_s = profile(result.best).s;
  } catch (const ConfigError&) {
    result.achieved_s.reset();
  }
  return result;
}

}  // namespace sdist
