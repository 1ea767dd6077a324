#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cflab/bigfloat.hpp"

namespace cflab {

enum class BaseConstant { one, pi_sq, log2, catalan, zeta2, zeta3, zeta4, zeta5, zeta7 };

const std::vector<BaseConstant>& all_base_constants();
std::string constant_name(BaseConstant c);
/// Inverse of constant_name.
std::optional<BaseConstant> constant_from_name(const std::string& name);

/// Largest supported digits request.
constexpr int kMaxConstantDigits = 1000;

/// Reference value correct to `digits` decimal digits. method 1 is the
/// primary route and method 2 an independent one:
///   pi_sq    Machin arctangents / Gauss arctangents, squared
///   log2     atanh(1/3) / atanh(1/5) + atanh(1/7)
///   catalan  accelerated alternating series / Ramanujan's central-binomial form
///   zeta2,4  powers of pi / Euler-Maclaurin
///   zeta3,5,7 accelerated eta series / Euler-Maclaurin
/// Results are memoized per (constant, digits, method). Throws BudgetError
/// above kMaxConstantDigits.
FloatApprox const_value(BaseConstant c, int digits, int method = 1);

/// (sum c_i C_i) / (sum d_j C_j).
struct ClosedFormConstant {
  std::map<BaseConstant, Rational> numerator;
  std::map<BaseConstant, Rational> denominator;

  /// e.g. "(16+3*pi_sq)/(16-pi_sq)".
  std::string render() const;
};

/// Throws DomainError when the denominator is indistinguishable from zero.
FloatApprox eval_closed_form(const ClosedFormConstant& expr, int digits);

/// Exact Bernoulli number B_n (B_1 = -1/2).
Rational bernoulli(int n);

}  // namespace cflab
