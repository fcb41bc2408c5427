#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "sdist/configuration.hpp"

namespace sdist {

// Line-oriented pointset text:
//
//   # comment
//   mode exact|float
//   dim <n>
//   tol <float>            (float mode only, optional)
//   point <c_1> ... <c_n>
//
// Coordinates are `p/q`, integers or decimals; decimals are rejected in exact mode.
// Syntax problems raise ParseError with a line number; invariant violations raise ConfigError.
PointConfiguration parse_config(std::istream& in);
PointConfiguration parse_config(std::string_view text);
PointConfiguration load_config(const std::string& path);

std::string write_config(const PointConfiguration& config);

}  // namespace sdist
