#pragma once

#include <cstddef>
#include <string_view>

#include "sdist/polynomial.hpp"

namespace sdist {

// Parses text such as `3/2*x1^2*x3 - x2 + 1` into a polynomial in n variables.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := number | 'x' K ['^' E]
//
// Numbers are integers, `p/q` fractions or decimals (converted exactly). K is a
// 1-based variable index in [1, n], E an integer >= 1. Whitespace is ignored.
// Throws ParseError with the character offset on malformed input.
Polynomial parse_polynomial(std::string_view text, std::size_t n);

}  // namespace sdist
