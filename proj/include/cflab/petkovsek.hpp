#pragma once

#include <string>
#include <vector>

#include "cflab/cf_engine.hpp"
#include "cflab/polynomial.hpp"
#include "cflab/ratfun.hpp"

namespace cflab {

/// f(n) = z * p(n)/p(n-1) * q(n)/r(n) with p, q, r monic.
struct GPForm {
  Rational z;
  Polynomial p, q, r;

  RationalFunction reconstruct() const;
};

/// Normal form with gcd(q(n), r(n+j)) = 1 for all j >= 0,
/// gcd(p(n-1), q(n)) = 1 and gcd(p(n), r(n)) = 1.
/// Throws DomainError on the zero function.
GPForm gp_normal_form(const RationalFunction& f);

/// All integers j >= 0 with gcd(q(n), r(n+j)) != 1, ascending.
std::vector<long> shift_set(const Polynomial& q, const Polynomial& r);

/// p2(n) y(n+2) + p1(n) y(n+1) + p0(n) y(n) = 0.
struct Recurrence2 {
  Polynomial p2, p1, p0;

  /// y(n+1) = a(n) y(n) + b(n) y(n-1), shifted: p2 = 1, p1 = -a(n+1), p0 = -b(n+1).
  static Recurrence2 from_cf(const CFSpec& cf);
};

/// y(n+1)/y(n) = ratio(n), y(first_valid_index) = y0.
struct HypergeometricTerm {
  RationalFunction ratio;
  Rational y0 = 1;
  long first_valid_index = 0;
};

/// Smallest index k >= 0 such that ratio has neither a zero nor a pole at any
/// integer >= k.
long first_valid_index(const RationalFunction& ratio);

HypergeometricTerm make_term(const RationalFunction& ratio, const Rational& y0);

/// Hypergeometric solutions, one per distinct reduced ratio, sorted by
/// (deg num, deg den, leading coefficient, rendering). y0 is 1.
/// Throws DomainError if p2 or p0 is zero.
std::vector<HypergeometricTerm> hyper_solve(const Recurrence2& rec);

/// p2(n) R(n+1) R(n) + p1(n) R(n) + p0(n) == 0 identically.
bool certify(const Recurrence2& rec, const HypergeometricTerm& term);

/// y_n = y0 * prod_{k=first}^{n-1} ratio(k). Throws DomainError below the
/// first valid index.
Rational term_value(const HypergeometricTerm& term, long n);

/// Degree cap on the polynomial factor c searched by hyper_solve.
constexpr int kMaxCDegree = 12;

}  // namespace cflab
