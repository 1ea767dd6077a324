#pragma once

#include <string_view>

#include "cflab/polynomial.hpp"
#include "cflab/ratfun.hpp"

namespace cflab {

/// Parses an expression in n built from rational literals, + - * / ^,
/// parentheses (also [] and {}) and implicit multiplication ("2n(n+1)").
/// Exponents are nonnegative integer literals up to 64.
/// parse_poly rejects division by a non-constant expression.
Polynomial parse_poly(std::string_view text);

/// Same grammar, but division by polynomials is allowed.
RationalFunction parse_ratfun(std::string_view text);

}  // namespace cflab
