#pragma once

#include <string>

#include "cflab/rational.hpp"

namespace cflab {

/// Parameter triple (alpha, beta, gamma) of H.
struct HParams {
  Rational alpha, beta, gamma;

  /// (alpha+1)/2, (beta+1)/2 or gamma+1 is a nonpositive integer.
  bool has_pole() const;
  /// (alpha+beta+1)/2 - gamma is a nonpositive integer.
  bool lemma_excluded() const;
  /// 2*gamma - alpha - beta < 1.
  bool in_series_region() const;
  /// (alpha+beta+1)/2 - gamma.
  Rational epsilon() const { return (alpha + beta + 1) / 2 - gamma; }

  std::string render() const;

  friend bool operator==(const HParams& a, const HParams& b) {
    return a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma;
  }
  friend bool operator<(const HParams& a, const HParams& b) {
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    if (a.beta != b.beta) return a.beta < b.beta;
    return a.gamma < b.gamma;
  }
};

}  // namespace cflab
