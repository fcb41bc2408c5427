#include "sdist/pointset_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "sdist/error.hpp"

namespace sdist {
namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string f; ss >> f;) out.push_back(f);
  return out;
}

double parse_double(const std::string& text, std::size_t line) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || errno == ERANGE)
    throw ParseError("invalid number '" + text + "'", line);
  return v;
}

}  // namespace

PointConfiguration parse_config(std::istream& in) {
  std::optional<ScalarMode> mode;
  std::optional<std::size_t> dim;
  std::optional<double> tol;
  struct RawPoint {
    std::vector<std::string> fields;
    std::size_t line;
  };
  std::vector<RawPoint> raw;

  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto fields = split_fields(line);
    if (fields.empty()) continue;
    const std::string& key = fields[0];
    if (key == "mode") {
      if (fields.size() != 2) throw ParseError("expected 'mode exact|float'", lineno);
      if (mode) throw ParseError("repeated 'mode'", lineno);
      if (fields[1] == "exact")
        mode = ScalarMode::exact;
      else if (fields[1] == "float")
        mode = ScalarMode::floating;
      else
        throw ParseError("unknown mode '" + fields[1] + "'", lineno);
    } else if (key == "dim") {
      if (fields.size() != 2) throw ParseError("expected 'dim <n>'", lineno);
      if (dim) throw ParseError("repeated 'dim'", lineno);
      const std::string& v = fields[1];
      if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos || v.size() > 6)
        throw ParseError("invalid dimension '" + v + "'", lineno);
      dim = std::stoul(v);
      if (*dim < 1) throw ParseError("dimension must be >= 1", lineno);
    } else if (key == "tol") {
      if (fields.size() != 2) throw ParseError("expected 'tol <float>'", lineno);
      if (tol) throw ParseError("repeated 'tol'", lineno);
      tol = parse_double(fields[1], lineno);
      if (!(*tol >= 0.0)) throw ParseError("tolerance must be >= 0", lineno);
    } else if (key == "point") {
      if (!dim) throw ParseError("'point' before 'dim'", lineno);
      if (fields.size() != *dim + 1)
        throw ParseError("point has " + std::to_string(fields.size() - 1) + " coordinates, expected " +
                             std::to_string(*dim),
                         lineno);
      raw.push_back({std::vector<std::string>(fields.begin() + 1, fields.end()), lineno});
    } else {
      throw ParseError("unknown directive '" + key + "'", lineno);
    }
  }
  if (!mode) throw ParseError("missing 'mode' line");
  if (!dim) throw ParseError("missing 'dim' line");
  if (raw.empty()) throw ConfigError("configuration has no points");

  if (*mode == ScalarMode::exact) {
    if (tol) throw ParseError("'tol' is only valid in float mode");
    std::vector<ExactPoint> pts;
    for (const auto& rp : raw) {
      ExactPoint p;
      for (const auto& f : rp.fields) {
        try {
          p.push_back(parse_rational(f, false));
        } catch (const ParseError& e) {
          throw ParseError(e.what(), rp.line);
        }
      }
      pts.push_back(std::move(p));
    }
    return PointConfiguration::exact(*dim, std::move(pts));
  }

  std::vector<FloatPoint> pts;
  for (const auto& rp : raw) {
    FloatPoint p;
    for (const auto& f : rp.fields) {
      if (f.find('/') != std::string::npos) {
        try {
          p.push_back(to_double(parse_rational(f)));
        } catch (const ParseError& e) {
          throw ParseError(e.what(), rp.line);
        }
      } else {
        p.push_back(parse_double(f, rp.line));
      }
    }
    pts.push_back(std::move(p));
  }
  return PointConfiguration::floating(*dim, std::move(pts), tol.value_or(kDefaultTolerance));
}

PointConfiguration parse_config(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_config(in);
}

PointConfiguration load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  return parse_config(in);
}

std::string write_config(const PointConfiguration& config) {
  std::string out;
  char buf[40];
  if (config.is_exact()) {
    out += "mode exact\n";
    out += "dim " + std::to_string(config.dimension()) + "\n";
    for (const auto& p : config.exact_points()) {
      out += "point";
      for (const auto& c : p) out += " " + to_string(c);
      out += "\n";
    }
    return out;
  }
  out += "mode float\n";
  out += "dim " + std::to_string(config.dimension()) + "\n";
  std::snprintf(buf, sizeof buf, "%.17g", config.tolerance());
  out += std::string("tol ") + buf + "\n";
  for (const auto& p : config.float_points()) {
    out += "point";
    for (double c : p) {
      std::snprintf(buf, sizeof buf, "%.17g", c);
      out += std::string(" ") + buf;
    }
    out += "\n";
  }
  return out;
}

}  // namespace sdist
