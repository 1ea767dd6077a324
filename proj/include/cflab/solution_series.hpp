#pragma once

#include <string>
#include <vector>

#include "cflab/cf_engine.hpp"
#include "cflab/petkovsek.hpp"

namespace cflab {

/// Series attached to a nonvanishing solution y of y(n+1) = a(n)y(n) + b(n)y(n-1):
/// t_k = (-1)^k prod_{i=1}^k b(i) / (y_k y_{k+1}) and
/// CF = (a(0) - y_1/y_0) + 1/(y_0^2 sum t_k).
struct Lemma31Series {
  CFSpec cf;
  HypergeometricTerm solution;
  /// t_{k+1}/t_k = -b(k+1) / (R(k) R(k+1)).
  RationalFunction term_ratio;
};

/// Checks the certificate and y_n != 0 for n >= 0.
/// Throws HypothesisError.
Lemma31Series make_lemma31(const CFSpec& cf, const HypergeometricTerm& sol);

/// Exact t_0 ... t_{K-1}.
std::vector<Rational> series_terms_exact(const CFSpec& cf, const HypergeometricTerm& sol, long K);

struct Lemma31Evaluation {
  FloatApprox value;
  long terms = 0;
  /// "geometric" or "polynomial".
  std::string regime;
  /// Fitted decay exponent m (t_k ~ C k^-m) in the polynomial regime.
  double exponent = 0;
};

/// Throws HypothesisError, DomainError (divergent series or zero sum),
/// BudgetError (target not reached within max_terms).
Lemma31Evaluation cf_from_solution(const CFSpec& cf, const HypergeometricTerm& sol,
                                   int target_digits, long max_terms);

}  // namespace cflab
