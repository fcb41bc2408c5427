#include "cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "report.hpp"
#include "sdist/basis.hpp"
#include "sdist/bounds.hpp"
#include "sdist/certificate.hpp"
#include "sdist/error.hpp"
#include "sdist/expression.hpp"
#include "sdist/pointset_io.hpp"
#include "sdist/reduction.hpp"
#include "sdist/search.hpp"

namespace sdist::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Range {
  long lo = 0;
  long hi = 0;
};

long parse_long(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    throw UsageError("invalid " + what + " '" + text + "'");
  }
  if (used != text.size()) throw UsageError("invalid " + what + " '" + text + "'");
  return v;
}

// "A..B" inclusive, or a single "A".
Range parse_range(const std::string& text, const std::string& what) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const long v = parse_long(text, what);
    return {v, v};
  }
  Range r{parse_long(text.substr(0, dots), what), parse_long(text.substr(dots + 2), what)};
  if (r.lo > r.hi) throw UsageError("empty range '" + text + "' for " + what);
  return r;
}

PointConfiguration read_configuration(const std::string& path, std::istream& in) {
  if (path == "-") return parse_config(in);
  return load_config(path);
}

int run_bounds(const std::string& n_text, const std::string& s_text, const std::string& format, std::ostream& out) {
  const Range n = parse_range(n_text, "--n"), s = parse_range(s_text, "--s");
  if (n.lo < 2) throw UsageError("--n must be >= 2");
  if (s.lo < 1) throw UsageError("--s must be >= 1");
  if ((n.hi - n.lo + 1) * (s.hi - s.lo + 1) > 1000000) throw UsageError("table too large");
  std::vector<BoundsReport> rows;
  for (long a = n.lo; a <= n.hi; ++a)
    for (long b = s.lo; b <= s.hi; ++b) rows.push_back(compute_bounds(a, b));
  if (format == "json")
    out << report::bounds_json(rows).dump(2) << '\n';
  else
    out << report::bounds_tsv(rows);
  return kSuccess;
}

int run_verify(const std::string& path, std::optional<double> tol, const std::string& format, std::istream& in,
               std::ostream& out) {
  PointConfiguration config = read_configuration(path, in);
  if (tol) {
    if (config.is_exact()) throw UsageError("--tol applies to float configurations only");
    config = config.with_tolerance(*tol);
  }
  const InnerProductProfile prof = profile(config);
  if (format == "json")
    out << report::profile_json(config, prof).dump(2) << '\n';
  else
    out << report::profile_text(config, prof);
  return kSuccess;
}

int run_certify(const std::string& path, std::optional<double> tol, const std::string& format, std::istream& in,
                std::ostream& out) {
  PointConfiguration config = read_configuration(path, in);
  if (tol) {
    if (config.is_exact()) throw UsageError("--tol applies to float configurations only");
    config = config.with_tolerance(*tol);
  }
  const Certificate cert = build_certificate(config);
  const CheckReport r = verify_certificate(cert);
  if (format == "json")
    out << report::certificate_json(cert, r).dump(2) << '\n';
  else
    out << report::certificate_text(cert, r);
  return r.all_passed() ? kSuccess : kCheckFailed;
}

int run_reduce(long n, const std::string& expr, std::ostream& out) {
  if (n < 2) throw UsageError("--n must be >= 2");
  Polynomial f(0);
  try {
    f = parse_polynomial(expr, static_cast<std::size_t>(n));
  } catch (const ParseError& e) {
    throw UsageError(std::string("cannot parse expression: ") + e.what());
  }
  out << canonical_reduce(f).to_string() << '\n';
  return kSuccess;
}

int run_basis(long n, long d, bool exact_degree, std::ostream& out) {
  if (n < 2) throw UsageError("--n must be >= 2");
  if (d < 0) throw UsageError("--d must be >= 0");
  const BasisOrder basis = enumerate_basis(n, d, exact_degree ? BasisMode::exact_degree : BasisMode::up_to_degree);
  for (const auto& m : basis.monomials()) out << m.to_string() << '\n';
  out << "count: " << basis.size() << '\n';
  return kSuccess;
}

std::vector<double> parse_targets(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      out.push_back(to_double(parse_rational(item)));
    } catch (const ParseError&) {
      throw UsageError("invalid target '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial-method bounds and certificates for spherical s-distance sets", "sdist"};
  app.require_subcommand(1);

  std::string n_range, s_range, format = "tsv";
  auto* bounds = app.add_subcommand("bounds", "Table of bounds over ranges of n and s");
  bounds->add_option("--n", n_range, "Dimension range A..B")->required();
  bounds->add_option("--s", s_range, "Distance-count range C..D")->required();
  bounds->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

  std::string file;
  std::optional<double> tol;
  std::string report_format = "text";
  auto* verify = app.add_subcommand("verify", "Inner-product profile of a pointset and which bounds apply");
  verify->add_option("file", file, "Pointset file, or - for stdin")->required();
  verify->add_option("--tol", tol, "Override the float tolerance");
  verify->add_option("--format", report_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* certify = app.add_subcommand("certify", "Build and check the linear-independence certificate");
  certify->add_option("file", file, "Pointset file, or - for stdin")->required();
  certify->add_option("--tol", tol, "Override the float tolerance");
  certify->add_option("--format", report_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  long n = 0, d = 0;
  std::string expr;
  auto* reduce = app.add_subcommand("reduce", "Canonical reduction modulo x1^2 + ... + xn^2 - 1");
  reduce->add_option("--n", n, "Number of variables")->required();
  reduce->add_option("expr", expr, "Polynomial, e.g. \"3/2*x1^2*x3 - x2 + 1\"")->required();

  bool exact_degree = false;
  auto* basis = app.add_subcommand("basis", "Reduced monomial basis in graded-lex order");
  basis->add_option("--n", n, "Number of variables")->required();
  basis->add_option("--d", d, "Degree cap")->required();
  basis->add_flag("--exact-degree", exact_degree, "Only monomials of degree exactly d");

  long s = 0, m = 0, restarts = 8, max_iterations = 2000;
  std::uint64_t seed = 0;
  std::string targets;
  auto* search_cmd = app.add_subcommand("search", "Multi-start search for sum-zero s-distance sets");
  search_cmd->add_option("--n", n, "Dimension")->required();
  search_cmd->add_option("--s", s, "Number of inner products")->required();
  search_cmd->add_option("--m", m, "Number of points")->required();
  search_cmd->add_option("--seed", seed, "Random seed");
  search_cmd->add_option("--restarts", restarts, "Number of restarts");
  search_cmd->add_option("--max-iterations", max_iterations, "Gradient steps per refinement round");
  search_cmd->add_option("--targets", targets, "Comma-separated sum-zero inner products");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*bounds) return run_bounds(n_range, s_range, format, out);
    if (*verify) return run_verify(file, tol, report_format, in, out);
    if (*certify) return run_certify(file, tol, report_format, in, out);
    if (*reduce) return run_reduce(n, expr, out);
    if (*basis) return run_basis(n, d, exact_degree, out);
    if (*search_cmd) {
      if (n < 2 || s < 1 || m < 2 || restarts < 1 || max_iterations < 1)
        throw UsageError("search needs --n >= 2, --s >= 1, --m >= 2, --restarts >= 1, --max-iterations >= 1");
      SearchOptions opts;
      opts.m_goal = static_cast<std::size_t>(m);
      opts.restarts = static_cast<int>(restarts);
      opts.seed = seed;
      opts.max_iterations = static_cast<int>(max_iterations);
      if (!targets.empty()) opts.targets = parse_targets(targets);
      const SearchResult r = sdist::search(static_cast<std::size_t>(n), static_cast<std::size_t>(s), opts);
      out << write_config(r.best);
      err << report::search_text(r);
      return kSuccess;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputData;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kInputData;
  }
  return kUsage;
}

}  // namespace sdist::cli
