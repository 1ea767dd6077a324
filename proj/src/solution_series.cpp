#include "cflab/solution_series.hpp"

#include <cmath>
#include <optional>

#include "cflab/errors.hpp"

namespace cflab {

Lemma31Series make_lemma31(const CFSpec& cf, const HypergeometricTerm& sol) {
  if (!certify(Recurrence2::from_cf(cf), sol))
    throw HypothesisError("solution does not satisfy the recurrence");
  if (sol.y0 == 0) throw HypothesisError("y_0 = 0");
  long first = first_valid_index(sol.ratio);
  if (first > 0 || sol.first_valid_index > 0)
    throw HypothesisError("solution vanishes or is undefined at an index below " +
                          std::to_string(std::max(first, sol.first_valid_index)));
  const RationalFunction& R = sol.ratio;
  RationalFunction tr = RationalFunction(-cf.b.shift(1)) / (R * R.shift(1));
  return {cf, sol, tr};
}

std::vector<Rational> series_terms_exact(const CFSpec& cf, const HypergeometricTerm& sol, long K) {
  Lemma31Series s = make_lemma31(cf, sol);
  std::vector<Rational> out;
  if (K <= 0) return out;
  Rational y0 = sol.y0, y1 = y0 * sol.ratio.eval(0);
  out.push_back(1 / (y0 * y1));
  for (long k = 0; k + 1 < K; ++k) out.push_back(out.back() * s.term_ratio.eval(k));
  return out;
}

namespace {

/// Fast float evaluation of a rational function at integers.
class RatEvaluator {
 public:
  explicit RatEvaluator(const RationalFunction& f) {
    auto n = f.num().integer_form();
    auto d = f.den().integer_form();
    num_ = std::move(n.first);
    den_ = std::move(d.first);
    // f = (N / dn) / (D / dd) = (N * dd) / (D * dn)
    for (auto& c : num_) c *= d.second;
    for (auto& c : den_) c *= n.second;
  }

  BigFloat eval(long k, Precision prec) const {
    Integer a = horner(num_, k), b = horner(den_, k);
    if (b == 0) throw DomainError("pole at " + std::to_string(k));
    return BigFloat::from_integer(a, prec) / BigFloat::from_integer(b, prec);
  }

 private:
  static Integer horner(const std::vector<Integer>& c, long k) {
    Integer acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      acc *= k;
      acc += *it;
    }
    return acc;
  }
  std::vector<Integer> num_, den_;
};

}  // namespace

Lemma31Evaluation cf_from_solution(const CFSpec& cf, const HypergeometricTerm& sol,
                                   int target_digits, long max_terms) {
  Lemma31Series s = make_lemma31(cf, sol);
  const RationalFunction& tr = s.term_ratio;
  Precision prec = working_precision(target_digits) + 64;

  Rational y0 = sol.y0, y1 = y0 * sol.ratio.eval(0);
  Rational offset = cf.a.eval(0) - y1 / y0;
  Rational scale_r = 1 / (y0 * y0);

  // Limit of the term ratio.
  int dn = tr.num().degree(), dd = tr.den().degree();
  Rational L = 0;
  if (!tr.is_zero() && dn > dd) throw DomainError("series terms grow: the CF is not covered by this route");
  if (!tr.is_zero() && dn == dd) L = tr.num().leading() / tr.den().leading();
  if (abs(L) > 1) throw DomainError("series diverges geometrically");
  bool geometric = abs(L) < 1;
  bool alternating = (L == -1);

  Lemma31Evaluation out;
  out.regime = geometric ? "geometric" : "polynomial";

  RatEvaluator ratio(tr);
  BigFloat t = BigFloat::from_rational(1 / (y0 * y1), prec);
  BigFloat sum(prec);
  std::vector<BigFloat> sums, terms;  // polynomial regime history: S_k, t_k
  if (!geometric) {
    sums.reserve(4096);
    terms.reserve(4096);
  }
  BigFloat one = BigFloat::from_long(1, 64);
  const BigFloat tol = pow10_neg(target_digits + 1, 64);

  auto finish = [&](const BigFloat& S, const BigFloat& err_S, long n_terms) {
    FloatApprox series(S, err_add(err_S, err_mul(BigFloat::from_long(4 * n_terms + 4, 64), S.ulp())));
    if (err_from(series.value) <= series.error) throw DomainError("series sum indistinguishable from zero");
    FloatApprox v = add_rational(FloatApprox::exact(scale_r, prec) / series, offset);
    return v;
  };
  auto good_enough = [&](const FloatApprox& v) {
    BigFloat mag = err_from(v.value);
    if (mag < one) mag = one;
    return v.error <= err_mul(tol, mag);
  };

  for (long k = 0; k < max_terms; ++k) {
    if (t.is_zero()) {
      // Finite series: every later term vanishes as well.
      FloatApprox v = finish(sum, BigFloat(64), k);
      out.value = v;
      out.terms = k;
      return out;
    }
    sum += t;
    if (!geometric) {
      sums.push_back(sum);
      terms.push_back(t);
    }
    BigFloat r = ratio.eval(k, prec);
    BigFloat next = t * r;
    long n_terms = k + 1;
    bool checkpoint = n_terms >= 32 && (geometric || n_terms % 64 == 0);
    if (checkpoint) {
      if (geometric) {
        BigFloat rho = err_from(r);
        BigFloat lim = err_from(BigFloat::from_rational(abs(L), 64));
        if (lim > rho) rho = lim;
        if (rho < one) {
          BigFloat denom(64);
          mpfr_ui_sub(denom.raw(), 1, rho.raw(), MPFR_RNDD);
          BigFloat tail(64);
          mpfr_div(tail.raw(), err_mul(err_from(next), rho).raw(), denom.raw(), MPFR_RNDU);
          FloatApprox v = finish(sum, tail, n_terms);
          if (good_enough(v)) {
            out.value = v;
            out.terms = n_terms;
            return out;
          }
        }
      } else if (alternating) {
        FloatApprox v = finish(sum, err_from(next), n_terms);
        if (good_enough(v)) {
          out.value = v;
          out.terms = n_terms;
          return out;
        }
      } else {
        // t_k ~ C k^-m: fit m on the last 16 terms, corrected tail t_N N/(m-1) - t_N/2,
        // error bound from the change against the same estimate at N/2.
        auto estimate = [&](long N, double& m) {
          const BigFloat& tn = terms[N - 1];
          const BigFloat& tp = terms[N - 17];
          double lr = std::log((tp / tn).abs().to_double());
          m = lr / std::log(static_cast<double>(N - 1) / static_cast<double>(N - 17));
          if (!(m > 1.0)) return std::optional<BigFloat>();
          BigFloat coef = BigFloat::from_long(N - 1, prec) / BigFloat::from_double(m - 1, prec);
          BigFloat tail = tn * (coef - BigFloat::from_rational(Rational(1, 2), prec));
          return std::optional<BigFloat>(sums[N - 1] + tail);
        };
        double m_full = 0, m_half = 0;
        auto e_full = estimate(n_terms, m_full);
        auto e_half = estimate(n_terms / 2, m_half);
        if (e_full && e_half) {
          BigFloat err = err_add(err_from(*e_full - *e_half), err_from(t));
          FloatApprox v = finish(*e_full, err, n_terms);
          out.exponent = m_full;
          if (good_enough(v)) {
            out.value = v;
            out.terms = n_terms;
            return out;
          }
        }
      }
    }
    t = std::move(next);
  }
  throw BudgetError("series did not reach the target within " + std::to_string(max_terms) + " terms");
}

}  // namespace cflab
