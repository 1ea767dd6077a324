#include "cflab/constants.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "cflab/errors.hpp"

namespace cflab {

const std::vector<BaseConstant>& all_base_constants() {
  static const std::vector<BaseConstant> all = {
      BaseConstant::one,   BaseConstant::pi_sq, BaseConstant::log2,  BaseConstant::catalan, BaseConstant::zeta2,
      BaseConstant::zeta3, BaseConstant::zeta4, BaseConstant::zeta5, BaseConstant::zeta7};
  return all;
}

std::string constant_name(BaseConstant c) {
  switch (c) {
    case BaseConstant::one: return "one";
    case BaseConstant::pi_sq: return "pi_sq";
    case BaseConstant::log2: return "log2";
    case BaseConstant::catalan: return "catalan";
    case BaseConstant::zeta2: return "zeta2";
    case BaseConstant::zeta3: return "zeta3";
    case BaseConstant::zeta4: return "zeta4";
    case BaseConstant::zeta5: return "zeta5";
    case BaseConstant::zeta7: return "zeta7";
  }
  return "?";
}

std::optional<BaseConstant> constant_from_name(const std::string& name) {
  for (BaseConstant c : all_base_constants())
    if (constant_name(c) == name) return c;
  return std::nullopt;
}

namespace {

/// Value known to within `bound`, before rounding.
struct ExactApprox {
  Rational value;
  Rational bound;
};

FloatApprox round_once(const ExactApprox& x, Precision prec) {
  FloatApprox r = FloatApprox::exact(x.value, prec);
  BigFloat b(64);
  mpfr_set_q(b.raw(), x.bound.get_mpq_t(), MPFR_RNDU);
  r.error = err_add(r.error, b);
  return r;
}

Rational pow_rat(const Rational& x, long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
  r.canonicalize();
  return r;
}

/// 10^-d as an exact rational.
Rational tenth_pow(int d) { return 1 / pow_rat(Rational(10), d); }

/// atan(1/x) for integer x > 1 from its alternating Taylor series.
ExactApprox atan_inv(long x, const Rational& tol) {
  Rational sum = 0;
  Integer x2 = Integer(x) * x;
  Integer pw = x;  // x^(2k+1)
  for (long k = 0;; ++k) {
    Rational term = make_rational(1, Integer(2 * k + 1) * pw);
    if (term < tol) return {sum, term};
    if (k % 2)
      sum -= term;
    else
      sum += term;
    pw *= x2;
  }
}

/// atanh(1/x) for integer x > 1; positive series with ratio < 1/x^2.
ExactApprox atanh_inv(long x, const Rational& tol) {
  Rational sum = 0;
  Integer x2 = Integer(x) * x;
  Integer pw = x;
  Rational tail_factor = make_rational(x2, x2 - 1);
  for (long k = 0;; ++k) {
    Rational term = make_rational(1, Integer(2 * k + 1) * pw);
    if (term * tail_factor < tol) return {sum, term * tail_factor};
    sum += term;
    pw *= x2;
  }
}

/// Alternating sum_{k>=0} (-1)^k a_k with a_k = f(k) totally monotone,
/// accelerated with Chebyshev weights. Error <= 2 a_0 (5/29)^n.
template <typename F>
ExactApprox accelerated_alternating(F a, const Rational& tol) {
  Rational a0 = a(0);
  long n = 1;
  while (2 * a0 * pow_rat(Rational(5, 29), n) >= tol) ++n;
  // d = T_n(3)
  Integer t0 = 1, t1 = 3;
  for (long k = 1; k < n; ++k) {
    Integer t2 = 6 * t1 - t0;
    t0 = t1;
    t1 = t2;
  }
  Rational d = (n == 0) ? Rational(1) : Rational(t1);
  Rational b = -1, c = -d, s = 0;
  for (long k = 0; k < n; ++k) {
    c = b - c;
    s += c * a(k);
    b = b * Rational((k + n) * (k - n)) / ((Rational(k) + Rational(1, 2)) * (k + 1));
  }
  return {s / d, 2 * a0 * pow_rat(Rational(5, 29), n)};
}

/// Exact Bernoulli numbers, grown on demand.
class BernoulliTable {
 public:
  Rational get(int n) {
    {
      std::shared_lock lock(mu_);
      if (n < static_cast<int>(b_.size())) return b_[n];
    }
    std::unique_lock lock(mu_);
    while (static_cast<int>(b_.size()) <= n) {
      int m = static_cast<int>(b_.size());
      if (m == 0) {
        b_.push_back(1);
        continue;
      }
      // sum_{k=0}^{m} C(m+1, k) B_k = 0
      Rational acc = 0;
      for (int k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * b_[k];
      b_.push_back(-acc / Rational(m + 1));
    }
    return b_[n];
  }

 private:
  std::shared_mutex mu_;
  std::vector<Rational> b_;
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable t;
  return t;
}

/// zeta(s) by Euler-Maclaurin at cut N with exact Bernoulli numbers.
ExactApprox zeta_euler_maclaurin(int s, int digits, const Rational& tol) {
  long N = 2L * digits + 20;
  Rational sum = 0;
  for (long k = 1; k < N; ++k) sum += 1 / pow_rat(Rational(k), s);
  Rational Nr = N;
  sum += 1 / (pow_rat(Nr, s - 1) * (s - 1));
  sum += 1 / (pow_rat(Nr, s) * 2);
  // Correction terms B_{2j}/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}.
  Rational rising = s;  // s(s+1)...(s+2j-2)
  Integer fact2j = 2;   // (2j)!
  for (int j = 1;; ++j) {
    Rational term = bernoulli(2 * j) / Rational(fact2j) * rising / pow_rat(Nr, s + 2 * j - 1);
    if (abs(term) < tol) return {sum, 2 * abs(term)};
    sum += term;
    rising *= Rational((s + 2 * j - 1) * (s + 2 * j));
    fact2j *= (2 * j + 1) * (2 * j + 2);
    if (j > 4 * digits + 100) throw ConvergenceError("Euler-Maclaurin did not converge", 0);
  }
}

FloatApprox pi_value(int digits, int method, Precision prec) {
  Rational tol = tenth_pow(digits + 12) / 64;
  ExactApprox pi;
  if (method == 1) {
    ExactApprox a = atan_inv(5, tol), b = atan_inv(239, tol);
    pi = {16 * a.value - 4 * b.value, 16 * a.bound + 4 * b.bound};
  } else {
    ExactApprox a = atan_inv(18, tol), b = atan_inv(57, tol), c = atan_inv(239, tol);
    pi = {48 * a.value + 32 * b.value - 20 * c.value, 48 * a.bound + 32 * b.bound + 20 * c.bound};
  }
  return round_once(pi, prec);
}

FloatApprox compute(BaseConstant c, int digits, int method, Precision prec) {
  Rational tol = tenth_pow(digits + 10);
  switch (c) {
    case BaseConstant::one:
      return FloatApprox::exact(1, prec);
    case BaseConstant::pi_sq: {
      FloatApprox pi = pi_value(digits, method, prec);
      return pi * pi;
    }
    case BaseConstant::log2: {
      if (method == 1) {
        ExactApprox a = atanh_inv(3, tol);
        return round_once({2 * a.value, 2 * a.bound}, prec);
      }
      ExactApprox a = atanh_inv(5, tol), b = atanh_inv(7, tol);
      return round_once({2 * (a.value + b.value), 2 * (a.bound + b.bound)}, prec);
    }
    case BaseConstant::catalan: {
      if (method == 1) {
        auto a = [](long k) { return make_rational(1, Integer(2 * k + 1) * (2 * k + 1)); };
        return round_once(accelerated_alternating(a, tol), prec);
      }
      // G = (pi/8) log(2+sqrt3) + (3/8) sum 1/(C(2n,n)(2n+1)^2),
      // log(2+sqrt3) = (2/sqrt3) sum 3^-k/(2k+1).
      Rational s1 = 0, s2 = 0;
      Rational b1 = 0, b2 = 0;
      for (long k = 0;; ++k) {
        Rational term = 1 / (pow_rat(Rational(3), k) * (2 * k + 1));
        if (term < tol / 4) {
          b1 = term * Rational(3, 2);
          break;
        }
        s1 += term;
      }
      Integer central = 1;
      for (long n = 0;; ++n) {
        if (n > 0) central = central * (2 * (2 * n - 1)) / n;
        Rational term = make_rational(1, central * (2 * n + 1) * (2 * n + 1));
        if (term < tol / 4) {
          b2 = term * Rational(4, 3);
          break;
        }
        s2 += term;
      }
      FloatApprox pi = pi_value(digits, 1, prec);
      BigFloat sqrt3 = BigFloat::from_long(3, prec).sqrt();
      FloatApprox root3(sqrt3, sqrt3.ulp());
      FloatApprox logpart = scale(round_once({s1, b1}, prec), 2) / root3;
      FloatApprox g = scale(pi * logpart, Rational(1, 8)) + scale(round_once({s2, b2}, prec), Rational(3, 8));
      return g;
    }
    case BaseConstant::zeta2:
    case BaseConstant::zeta4: {
      int s = c == BaseConstant::zeta2 ? 2 : 4;
      if (method == 1) {
        FloatApprox p2 = compute(BaseConstant::pi_sq, digits, 1, prec);
        return s == 2 ? scale(p2, Rational(1, 6)) : scale(p2 * p2, Rational(1, 90));
      }
      return round_once(zeta_euler_maclaurin(s, digits, tol), prec);
    }
    case BaseConstant::zeta3:
    case BaseConstant::zeta5:
    case BaseConstant::zeta7: {
      int s = c == BaseConstant::zeta3 ? 3 : c == BaseConstant::zeta5 ? 5 : 7;
      if (method == 1) {
        auto a = [s](long k) -> Rational { return 1 / pow_rat(Rational(k + 1), s); };
        ExactApprox eta = accelerated_alternating(a, tol);
        Rational f = 1 - 1 / pow_rat(Rational(2), s - 1);
        return round_once({eta.value / f, eta.bound / f}, prec);
      }
      return round_once(zeta_euler_maclaurin(s, digits, tol), prec);
    }
  }
  throw DomainError("unknown constant");
}

class ConstantCache {
 public:
  std::optional<FloatApprox> find(const std::tuple<int, int, int>& key) {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void store(const std::tuple<int, int, int>& key, const FloatApprox& v) {
    std::unique_lock lock(mu_);
    map_.emplace(key, v);
  }

 private:
  std::shared_mutex mu_;
  std::map<std::tuple<int, int, int>, FloatApprox> map_;
};

ConstantCache& cache() {
  static ConstantCache c;
  return c;
}

}  // namespace

Rational bernoulli(int n) {
  if (n < 0) throw DomainError("negative Bernoulli index");
  return bernoulli_table().get(n);
}

FloatApprox const_value(BaseConstant c, int digits, int method) {
  if (digits > kMaxConstantDigits)
    throw BudgetError("constants are limited to " + std::to_string(kMaxConstantDigits) + " digits");
  if (digits < 1) digits = 1;
  if (method != 1 && method != 2) throw DomainError("method must be 1 or 2");
  auto key = std::make_tuple(static_cast<int>(c), digits, method);
  if (auto hit = cache().find(key)) return *hit;
  FloatApprox v = compute(c, digits, method, working_precision(digits));
  cache().store(key, v);
  return v;
}

namespace {

std::string render_combo(const std::map<BaseConstant, Rational>& m) {
  std::string out;
  for (BaseConstant c : all_base_constants()) {
    auto it = m.find(c);
    if (it == m.end() || it->second == 0) continue;
    Rational v = it->second;
    if (v < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    Rational mag = abs(v);
    if (c == BaseConstant::one) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + "*";
      out += constant_name(c);
    }
  }
  return out.empty() ? "0" : out;
}

FloatApprox eval_combo(const std::map<BaseConstant, Rational>& m, int digits) {
  Precision prec = working_precision(digits);
  FloatApprox acc = FloatApprox::exact(0, prec);
  for (const auto& [c, coeff] : m) {
    if (coeff == 0) continue;
    acc = acc + scale(const_value(c, digits, 1), coeff);
  }
  return acc;
}

}  // namespace

std::string ClosedFormConstant::render() const {
  auto wrap = [](const std::map<BaseConstant, Rational>& m, const std::string& s) {
    std::size_t terms = std::count_if(m.begin(), m.end(), [](const auto& kv) { return kv.second != 0; });
    return terms > 1 ? "(" + s + ")" : s;
  };
  std::string num = render_combo(numerator), den = render_combo(denominator);
  if (den == "1") return num;
  return wrap(numerator, num) + "/" + wrap(denominator, den);
}

FloatApprox eval_closed_form(const ClosedFormConstant& expr, int digits) {
  if (expr.denominator.empty()) throw DomainError("closed form with empty denominator");
  // Extra digits cover cancellation in the denominator.
  int inner = std::min(digits + 10, kMaxConstantDigits);
  FloatApprox num = eval_combo(expr.numerator, inner);
  FloatApprox den = eval_combo(expr.denominator, inner);
  return num / den;
}

}  // namespace cflab
