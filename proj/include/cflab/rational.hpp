#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cflab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws DomainError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q" (integers in base 10, optional surrounding blanks).
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

bool is_integer(const Rational& x);
bool is_nonpositive_integer(const Rational& x);

/// Rising factorial (a)_k = a(a+1)...(a+k-1), (a)_0 = 1.
Rational pochhammer(const Rational& a, long k);

/// k!! for k >= -3 with (-1)!! = 1 and (-3)!! = -1.
Rational double_factorial(long k);

Integer factorial(long n);

/// C(n, k); zero outside 0 <= k <= n.
Integer binomial(long n, long k);

/// Prime factorization of |n| (n != 0) as (prime, exponent) pairs, ascending.
std::vector<std::pair<Integer, int>> factorize(const Integer& n);

/// All positive divisors of |n| (n != 0), ascending.
std::vector<Integer> positive_divisors(const Integer& n);

}  // namespace cflab
