#pragma once

#include <string_view>

#include "quartic/polynomial.hpp"

namespace quartic {

/// Parses an expression such as "64*r^2*(r+3)*(r^2+3*r+18)^2/27" over the
/// variables of `table`. Supports + - * ^ (non-negative integer exponents),
/// parentheses, and division by rational constants. Throws ParseError.
Polynomial parse_polynomial(std::string_view text, const TablePtr& table);

}  // namespace quartic
