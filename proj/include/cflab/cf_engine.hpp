#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cflab/bigfloat.hpp"
#include "cflab/hparams.hpp"
#include "cflab/polynomial.hpp"

namespace cflab {

/// CF[a, b] = a(0) + b(1)/(a(1) + b(2)/(a(2) + ...)).
struct CFSpec {
  Polynomial a;
  Polynomial b;

  /// deg b == 2 deg a.
  bool degree_regime() const { return !b.is_zero() && b.degree() == 2 * a.degree(); }
};

template <typename T>
struct ConvergentPair {
  T A;
  T B;
  long index;
};

/// (A_n, B_n) with A_0 = 1, A_1 = a(0), B_0 = 0, B_1 = 1.
ConvergentPair<Rational> convergent_exact(const CFSpec& cf, long n);
/// (A_0, B_0) ... (A_n, B_n).
std::vector<ConvergentPair<Rational>> convergents_exact(const CFSpec& cf, long n);
/// Float-mode pair, jointly rescaled by powers of two whenever the magnitude
/// exceeds 2^rescale_bits. Only A/B is meaningful.
ConvergentPair<BigFloat> convergent_float(const CFSpec& cf, long n, Precision prec,
                                          long rescale_bits = 256);

struct EvalOptions {
  /// 0 selects working_precision(target_digits).
  Precision precision = 0;
  long rescale_bits = 256;
  bool record_gaps = false;
  int stable_steps = 8;
};

struct CFEvaluation {
  FloatApprox value;
  bool finite = false;
  long iterations = 0;
  /// |A_n/B_n - A_{n-1}/B_{n-1}| per step, when requested.
  std::vector<double> gaps;
};

/// Iterates convergents until the relative gap stays below 10^-target_digits
/// for `stable_steps` consecutive steps.
/// Throws SingularConvergentError, ConvergenceError.
CFEvaluation eval_cf(const CFSpec& cf, int target_digits, long max_iter,
                     const EvalOptions& opts = {});

/// Smallest integer k >= 1 with b(k) = 0, if any.
std::optional<long> first_vanishing_b(const Polynomial& b);

/// The CF whose reciprocal is H: a = forward difference of n(n+alpha)(n+beta),
/// b = -2n(n+alpha)(n+beta)(n+gamma).
CFSpec h_cf(const HParams& p);

/// Exact (A_n, B_n) of h_cf(p) from the finite hypergeometric sums.
/// Throws DomainError at pole parameters.
std::pair<Rational, Rational> closed_form_AB(const Rational& alpha, const Rational& beta,
                                             const Rational& gamma, long n);

/// A'_0 ... A'_n_max with A'_n = A_n / ((gamma+1)_n n!), exact.
std::vector<Rational> normalized_A_exact(const HParams& p, long n_max);
/// Same in floating point.
std::vector<BigFloat> normalized_A_float(const HParams& p, long n_max, Precision prec);

/// A'_{n_max+1} / A'_{n_max}.
FloatApprox ratio_limit_check(const Rational& alpha, const Rational& beta, const Rational& gamma,
                              long n_max);

}  // namespace cflab
