#include "cflab/cf_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cflab/errors.hpp"

namespace cflab {

namespace {

/// Evaluates a polynomial at integer points through its integer form.
class IntEvaluator {
 public:
  explicit IntEvaluator(const Polynomial& p) {
    auto f = p.integer_form();
    coeffs_ = std::move(f.first);
    den_ = std::move(f.second);
  }

  void eval(long n, Integer& out) const {
    out = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      out *= n;
      out += *it;
    }
  }

  BigFloat eval_float(long n, Precision prec) const {
    Integer v;
    eval(n, v);
    BigFloat r = BigFloat::from_integer(v, prec);
    if (den_ != 1) r /= BigFloat::from_integer(den_, prec);
    return r;
  }

 private:
  std::vector<Integer> coeffs_;
  Integer den_;
};

void rescale(BigFloat& A0, BigFloat& A1, BigFloat& B0, BigFloat& B1, long bits) {
  long e = std::max({A1.exponent(), B1.exponent(), A0.exponent(), B0.exponent()});
  if (e > bits || e < -bits) {
    A0 = A0.mul_2exp(-e);
    A1 = A1.mul_2exp(-e);
    B0 = B0.mul_2exp(-e);
    B1 = B1.mul_2exp(-e);
  }
}

}  // namespace

std::vector<ConvergentPair<Rational>> convergents_exact(const CFSpec& cf, long n) {
  if (n < 0) throw DomainError("convergent index must be nonnegative");
  std::vector<ConvergentPair<Rational>> out;
  out.push_back({Rational(1), Rational(0), 0});
  if (n == 0) return out;
  out.push_back({cf.a.eval(0), Rational(1), 1});
  for (long k = 1; k < n; ++k) {
    Rational ak = cf.a.eval(k), bk = cf.b.eval(k);
    const auto& cur = out[k];
    const auto& prev = out[k - 1];
    Rational A = ak * cur.A + bk * prev.A;
    Rational B = ak * cur.B + bk * prev.B;
    out.push_back({A, B, k + 1});
  }
  return out;
}

ConvergentPair<Rational> convergent_exact(const CFSpec& cf, long n) {
  if (n < 0) throw DomainError("convergent index must be nonnegative");
  Rational A0 = 1, B0 = 0;
  if (n == 0) return {A0, B0, 0};
  Rational A1 = cf.a.eval(0), B1 = 1;
  for (long k = 1; k < n; ++k) {
    Rational ak = cf.a.eval(k), bk = cf.b.eval(k);
    Rational A2 = ak * A1 + bk * A0;
    Rational B2 = ak * B1 + bk * B0;
    A0 = std::move(A1);
    B0 = std::move(B1);
    A1 = std::move(A2);
    B1 = std::move(B2);
  }
  return {A1, B1, n};
}

ConvergentPair<BigFloat> convergent_float(const CFSpec& cf, long n, Precision prec,
                                          long rescale_bits) {
  if (n < 0) throw DomainError("convergent index must be nonnegative");
  IntEvaluator ea(cf.a), eb(cf.b);
  BigFloat A0 = BigFloat::from_long(1, prec), B0(prec);
  if (n == 0) return {A0, B0, 0};
  BigFloat A1 = ea.eval_float(0, prec), B1 = BigFloat::from_long(1, prec);
  for (long k = 1; k < n; ++k) {
    BigFloat ak = ea.eval_float(k, prec), bk = eb.eval_float(k, prec);
    BigFloat A2 = ak * A1 + bk * A0;
    BigFloat B2 = ak * B1 + bk * B0;
    A0 = std::move(A1);
    B0 = std::move(B1);
    A1 = std::move(A2);
    B1 = std::move(B2);
    rescale(A0, A1, B0, B1, rescale_bits);
  }
  return {A1, B1, n};
}

std::optional<long> first_vanishing_b(const Polynomial& b) {
  if (b.is_zero()) return 1;
  std::optional<long> best;
  for (const auto& r : linear_factorization(b).roots) {
    if (is_integer(r) && r >= 1 && r.get_num().fits_slong_p()) {
      long k = r.get_num().get_si();
      if (!best || k < *best) best = k;
    }
  }
  return best;
}

CFEvaluation eval_cf(const CFSpec& cf, int target_digits, long max_iter, const EvalOptions& opts) {
  if (target_digits < 1) throw DomainError("target_digits must be at least 1");
  Precision prec = opts.precision ? opts.precision : working_precision(target_digits);
  CFEvaluation out;

  if (auto k = first_vanishing_b(cf.b); k && *k <= std::max(max_iter, 1L)) {
    auto pair = convergent_exact(cf, *k);
    if (pair.B == 0) throw SingularConvergentError("B_n vanished", *k);
    out.value = FloatApprox::exact(pair.A / pair.B, prec);
    out.finite = true;
    out.iterations = *k;
    return out;
  }

  IntEvaluator ea(cf.a), eb(cf.b);
  BigFloat A0 = BigFloat::from_long(1, prec), B0(prec);
  BigFloat A1 = ea.eval_float(0, prec), B1 = BigFloat::from_long(1, prec);
  BigFloat prev = A1;
  BigFloat tol = pow10_neg(target_digits, 64);
  BigFloat one = BigFloat::from_long(1, 64);
  int stable = 0;
  double last_gap = std::numeric_limits<double>::infinity();
  BigFloat gap(64);
  for (long k = 1; k <= max_iter; ++k) {
    BigFloat ak = ea.eval_float(k, prec), bk = eb.eval_float(k, prec);
    BigFloat A2 = ak * A1 + bk * A0;
    BigFloat B2 = ak * B1 + bk * B0;
    A0 = std::move(A1);
    B0 = std::move(B1);
    A1 = std::move(A2);
    B1 = std::move(B2);
    if (B1.is_zero()) throw SingularConvergentError("B_n vanished", k + 1);
    rescale(A0, A1, B0, B1, opts.rescale_bits);
    BigFloat r = A1 / B1;
    gap = err_from(r - prev);
    last_gap = gap.to_double();
    if (opts.record_gaps) out.gaps.push_back(last_gap);
    BigFloat mag = err_from(r);
    if (mag < one) mag = one;
    if (gap <= err_mul(tol, mag))
      ++stable;
    else
      stable = 0;
    prev = std::move(r);
    if (stable >= opts.stable_steps) {
      out.iterations = k + 1;
      BigFloat rounding = err_mul(BigFloat::from_long(8 * (k + 1), 64), prev.ulp());
      out.value = FloatApprox(prev, err_add(err_mul(BigFloat::from_long(8, 64), gap), rounding));
      return out;
    }
  }
  throw ConvergenceError("continued fraction did not converge within " +
                             std::to_string(max_iter) + " iterations",
                         last_gap);
}

CFSpec h_cf(const HParams& p) {
  Polynomial n = Polynomial::variable();
  Polynomial na = n + Polynomial(p.alpha);
  Polynomial nb = n + Polynomial(p.beta);
  Polynomial ng = n + Polynomial(p.gamma);
  Polynomial cubic = n * na * nb;
  return {cubic.forward_difference(), Polynomial(-2) * cubic * ng};
}

namespace {

void require_regular(const Rational& alpha, const Rational& beta, const Rational& gamma) {
  HParams p{alpha, beta, gamma};
  if (p.has_pole()) throw DomainError("pole parameters " + p.render());
}

}  // namespace

std::pair<Rational, Rational> closed_form_AB(const Rational& alpha, const Rational& beta,
                                             const Rational& gamma, long n) {
  require_regular(alpha, beta, gamma);
  if (n < 0) throw DomainError("closed_form_AB: negative index");
  Rational ha = (alpha + 1) / 2, hb = (beta + 1) / 2, g1 = gamma + 1;

  // Prefix sums of the H series terms, S[k] = sum_{i<k} t_i.
  std::vector<Rational> S(static_cast<std::size_t>(n) + 1);
  Rational t = 1 / (ha * hb);
  for (long i = 0; i < n; ++i) {
    S[i + 1] = S[i] + t;
    t *= (Rational(1, 2) + i) * (g1 + i) / ((ha + i + 1) * (hb + i + 1));
  }

  // c_k = (ha)_k (hb)_k / ((g1)_k k!) * 4^k, built incrementally.
  Rational c = 1;
  long k0 = (n + 1) / 2;
  for (long k = 0; k < k0; ++k) c *= (ha + k) * (hb + k) * 4 / ((g1 + k) * (k + 1));
  Rational sumA = 0, sumB = 0;
  for (long k = k0; k <= n; ++k) {
    Rational w = c * Rational(binomial(k, n - k));
    if ((n - k) % 2) w = -w;
    sumA += w;
    sumB += w * S[k];
    c *= (ha + k) * (hb + k) * 4 / ((g1 + k) * (k + 1));
  }
  Rational pre = pochhammer(g1, n) * Rational(factorial(n));
  return {pre * sumA, pre * sumB / 4};
}

std::vector<Rational> normalized_A_exact(const HParams& p, long n_max) {
  require_regular(p.alpha, p.beta, p.gamma);
  CFSpec cf = h_cf(p);
  std::vector<Rational> out{Rational(1)};
  if (n_max == 0) return out;
  out.push_back(cf.a.eval(0) / (p.gamma + 1));
  for (long n = 1; n < n_max; ++n) {
    Rational num = cf.a.eval(n) * out[n] - 2 * (p.alpha + n) * (p.beta + n) * out[n - 1];
    out.push_back(num / ((p.gamma + n + 1) * (n + 1)));
  }
  return out;
}

std::vector<BigFloat> normalized_A_float(const HParams& p, long n_max, Precision prec) {
  require_regular(p.alpha, p.beta, p.gamma);
  CFSpec cf = h_cf(p);
  std::vector<BigFloat> out{BigFloat::from_long(1, prec)};
  if (n_max == 0) return out;
  out.push_back(BigFloat::from_rational(cf.a.eval(0) / (p.gamma + 1), prec));
  for (long n = 1; n < n_max; ++n) {
    BigFloat an = BigFloat::from_rational(cf.a.eval(n), prec);
    BigFloat cn = BigFloat::from_rational(2 * (p.alpha + n) * (p.beta + n), prec);
    BigFloat dn = BigFloat::from_rational((p.gamma + n + 1) * (n + 1), prec);
    out.push_back((an * out[n] - cn * out[n - 1]) / dn);
  }
  return out;
}

FloatApprox ratio_limit_check(const Rational& alpha, const Rational& beta, const Rational& gamma,
                              long n_max) {
  const Precision prec = 256;
  auto A = normalized_A_float(HParams{alpha, beta, gamma}, n_max + 1, prec);
  if (A[n_max].is_zero()) throw DomainError("A' vanished at the requested index");
  BigFloat r = A[n_max + 1] / A[n_max];
  // Forward recurrence rounding: a few ulps per step, relative.
  BigFloat err = err_mul(BigFloat::from_long(16 * (n_max + 2), 64), r.ulp());
  return {r, err};
}

}  // namespace cflab
