#pragma once

#include <string>
#include <vector>

#include "cflab/bigfloat.hpp"
#include "cflab/cf_engine.hpp"
#include "cflab/hparams.hpp"

namespace cflab {

enum class SeriesClass { convergent, divergent, pole };

const char* to_string(SeriesClass c);

SeriesClass series_convergence_class(const HParams& p);

/// n-th term (1/2)_n (gamma+1)_n / (((alpha+1)/2)_{n+1} ((beta+1)/2)_{n+1}).
/// Throws DomainError at a pole.
Rational h_series_term(const HParams& p, long n);

/// H = (1/4) sum of h_series_term with a power-law tail correction.
/// Throws DomainError outside the convergent class.
FloatApprox h_value_series(const HParams& p, long max_terms, Precision prec = 128);

/// 1 / CF of h_cf(p).
FloatApprox h_value_cf(const HParams& p, int target_digits, long max_iter = 20000);

/// Series in terms of the normalized numerators A'_n; geometric with ratio 1/2.
/// Throws DomainError if some A'_n vanishes.
FloatApprox h_lemma23_series(const HParams& p, long max_terms, Precision prec = 0);
/// Picks the number of terms for the requested digits.
FloatApprox h_lemma23_value(const HParams& p, int target_digits);

/// H(alpha-2, beta; gamma) from H(alpha, beta; gamma).
FloatApprox alpha_step_down(const HParams& p, const FloatApprox& h);
/// H(alpha+2, beta; gamma) from H(alpha, beta; gamma).
FloatApprox alpha_step_up(const HParams& p, const FloatApprox& h);
/// H(alpha, beta; gamma-1) from H(alpha, beta; gamma).
FloatApprox gamma_step_down(const HParams& p, const FloatApprox& h);
/// H(alpha, beta; gamma+1) from H(alpha, beta; gamma).
FloatApprox gamma_step_up(const HParams& p, const FloatApprox& h);

enum class HRoute {
  automatic,  // CF first, ladder if the CF stalls
  cf,         // CF only
  ladder,     // walk into the series region, base value from h_lemma23_value
};

struct HEvaluation {
  FloatApprox value;
  /// Parameter points visited, starting at the request and ending at the base.
  std::vector<HParams> path;
  std::string method;
};

/// Sequence of points from p into the region 2*gamma - alpha - beta < 1,
/// each move being gamma-1, alpha+2 or beta+2 (or a bounded reverse move)
/// with a regular target and a nonvanishing relation divisor.
/// Throws DegenerateRelationError when no route exists.
std::vector<HParams> plan_ladder(const HParams& p);

HEvaluation h_anywhere(const HParams& p, int target_digits, HRoute route = HRoute::automatic);

/// |H(2p,0;q) - H(2q,0;p)| < 10^-target_digits.
bool symmetry_check(long p_idx, long q_idx, int target_digits);

}  // namespace cflab
