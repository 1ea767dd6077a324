#include "cflab/bigfloat.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "cflab/errors.hpp"

namespace cflab {

namespace {

constexpr Precision kErrPrec = 64;

Precision max_prec(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

BigFloat::BigFloat(Precision prec) {
  mpfr_init2(v_, std::max(prec, static_cast<Precision>(MPFR_PREC_MIN)));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_rational(const Rational& x, Precision prec) {
  BigFloat r(prec);
  mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_integer(const Integer& x, Precision prec) {
  BigFloat r(prec);
  mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_long(long x, Precision prec) {
  BigFloat r(prec);
  mpfr_set_si(r.v_, x, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::from_double(double x, Precision prec) {
  BigFloat r(prec);
  mpfr_set_d(r.v_, x, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow2(long e, Precision prec) {
  BigFloat r(prec);
  mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::parse_decimal(std::string_view text, Precision prec) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty decimal", 0);
  BigFloat r(prec);
  char* end = nullptr;
  mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  auto consumed = static_cast<std::size_t>(end - s.c_str());
  if (consumed != s.size() || !r.is_finite()) throw ParseError("malformed decimal", consumed);
  return r;
}

BigFloat BigFloat::with_precision(Precision prec) const {
  BigFloat r(prec);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::ulp() const {
  if (is_zero() || !is_finite()) return BigFloat(kErrPrec);
  return pow2(exponent() - static_cast<long>(precision()), kErrPrec);
}

double BigFloat::log10_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  mpfr_t t;
  mpfr_init2(t, kErrPrec);
  mpfr_abs(t, v_, MPFR_RNDN);
  mpfr_log10(t, t, MPFR_RNDN);
  double d = mpfr_get_d(t, MPFR_RNDN);
  mpfr_clear(t);
  return d;
}

std::string BigFloat::to_decimal(int digits) const {
  if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() < 0 ? "-inf" : "inf");
  if (is_zero()) return "0";
  digits = std::max(digits, 1);
  mpfr_exp_t e10 = 0;
  char* raw = mpfr_get_str(nullptr, &e10, 10, static_cast<std::size_t>(digits), v_, MPFR_RNDN);
  std::string s(raw);
  mpfr_free_str(raw);
  std::string sign_str;
  if (!s.empty() && s[0] == '-') {
    sign_str = "-";
    s.erase(0, 1);
  }
  long e = static_cast<long>(e10);
  std::string out;
  if (e <= 0 && e > -6) {
    out = "0." + std::string(static_cast<std::size_t>(-e), '0') + s;
  } else if (e > 0 && e <= 30) {
    if (static_cast<std::size_t>(e) >= s.size())
      out = s + std::string(static_cast<std::size_t>(e) - s.size(), '0');
    else
      out = s.substr(0, static_cast<std::size_t>(e)) + "." + s.substr(static_cast<std::size_t>(e));
  } else {
    out = s.substr(0, 1);
    if (s.size() > 1) out += "." + s.substr(1);
    out += "e" + std::to_string(e - 1);
  }
  return sign_str + out;
}

BigFloat BigFloat::abs() const {
  BigFloat r(precision());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  BigFloat r(precision());
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::mul_2exp(long e) const {
  BigFloat r(precision());
  mpfr_mul_2si(r.v_, v_, e, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) { return *this = *this + o; }
BigFloat& BigFloat::operator-=(const BigFloat& o) { return *this = *this - o; }
BigFloat& BigFloat::operator*=(const BigFloat& o) { return *this = *this * o; }
BigFloat& BigFloat::operator/=(const BigFloat& o) { return *this = *this / o; }

BigFloat err_from(const BigFloat& x) {
  BigFloat r(kErrPrec);
  mpfr_abs(r.raw(), x.raw(), MPFR_RNDU);
  return r;
}

BigFloat err_add(const BigFloat& a, const BigFloat& b) {
  BigFloat r(kErrPrec);
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
  return r;
}

BigFloat err_mul(const BigFloat& a, const BigFloat& b) {
  BigFloat r(kErrPrec);
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
  return r;
}

namespace {

BigFloat err_div(const BigFloat& a, const BigFloat& b) {
  BigFloat r(kErrPrec);
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDU);
  return r;
}

BigFloat err_sub_down(const BigFloat& a, const BigFloat& b) {
  BigFloat r(kErrPrec);
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDD);
  return r;
}

}  // namespace

FloatApprox FloatApprox::exact(const Rational& x, Precision prec) {
  BigFloat v(prec);
  int inexact = mpfr_set_q(v.raw(), x.get_mpq_t(), MPFR_RNDN);
  BigFloat e(kErrPrec);
  if (inexact != 0) e = v.ulp();
  return {v, e};
}

FloatApprox operator+(const FloatApprox& a, const FloatApprox& b) {
  BigFloat v = a.value + b.value;
  return {v, err_add(err_add(a.error, b.error), v.ulp())};
}

FloatApprox operator-(const FloatApprox& a, const FloatApprox& b) {
  BigFloat v = a.value - b.value;
  return {v, err_add(err_add(a.error, b.error), v.ulp())};
}

FloatApprox operator-(const FloatApprox& a) { return {-a.value, a.error}; }

FloatApprox operator*(const FloatApprox& a, const FloatApprox& b) {
  BigFloat v = a.value * b.value;
  BigFloat e = err_add(err_mul(err_from(a.value), b.error), err_mul(err_from(b.value), a.error));
  e = err_add(e, err_mul(a.error, b.error));
  return {v, err_add(e, v.ulp())};
}

FloatApprox operator/(const FloatApprox& a, const FloatApprox& b) {
  BigFloat margin = err_sub_down(err_from(b.value), b.error);
  if (margin.sign() <= 0) throw DomainError("division by a value indistinguishable from zero");
  BigFloat v = a.value / b.value;
  // |a/b - A/B| <= (ea + |a/b| eb) / (|b| - eb)
  BigFloat e = err_div(err_add(a.error, err_mul(err_from(v), b.error)), margin);
  return {v, err_add(e, err_add(v.ulp(), err_div(err_mul(err_from(v), v.ulp()), margin)))};
}

FloatApprox scale(const FloatApprox& a, const Rational& c) {
  return a * FloatApprox::exact(c, a.precision());
}

FloatApprox add_rational(const FloatApprox& a, const Rational& c) {
  return a + FloatApprox::exact(c, a.precision());
}

int max_digits_for(Precision prec) {
  return static_cast<int>(std::floor(static_cast<double>(prec - 1) * std::log10(2.0)));
}

int agree_digits(const FloatApprox& a, const FloatApprox& b) {
  BigFloat diff(std::max(a.precision(), b.precision()) + 8);
  mpfr_sub(diff.raw(), a.value.raw(), b.value.raw(), MPFR_RNDN);
  BigFloat total = err_add(err_add(err_from(diff), a.error), b.error);
  int cap = max_digits_for(std::min(a.precision(), b.precision()));
  if (total.is_zero()) return cap;
  double scale_log = std::max(0.0, a.value.log10_abs());
  double d = scale_log - total.log10_abs();
  if (d < 0) return 0;
  return static_cast<int>(std::floor(d + 1e-12));
}

int guard_bits() {
  const char* env = std::getenv("CFLAB_PRECISION_GUARD_BITS");
  if (!env || !*env) return 64;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0 || v > 100000) return 64;
  return static_cast<int>(v);
}

Precision working_precision(int digits) {
  return std::max(static_cast<Precision>(digits) * 4 + guard_bits(), kMinPrecision);
}

BigFloat pow10_neg(int d, Precision prec) {
  BigFloat r(prec);
  mpfr_set_ui(r.raw(), 10, MPFR_RNDN);
  mpfr_pow_si(r.raw(), r.raw(), -d, MPFR_RNDU);
  return r;
}

}  // namespace cflab
