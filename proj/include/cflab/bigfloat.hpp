#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

#include "cflab/rational.hpp"

namespace cflab {

using Precision = mpfr_prec_t;

constexpr Precision kMinPrecision = 16;

/// RAII wrapper over an MPFR value. Results of binary operations use the
/// larger of the operand precisions and round to nearest.
class BigFloat {
 public:
  explicit BigFloat(Precision prec = 64);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat from_rational(const Rational& x, Precision prec);
  static BigFloat from_integer(const Integer& x, Precision prec);
  static BigFloat from_long(long x, Precision prec);
  static BigFloat from_double(double x, Precision prec);
  /// 2^e.
  static BigFloat pow2(long e, Precision prec);
  /// Parses a decimal string ("-1.25e-3"). Throws ParseError.
  static BigFloat parse_decimal(std::string_view text, Precision prec);

  Precision precision() const { return mpfr_get_prec(v_); }
  /// Same value rounded to another precision.
  BigFloat with_precision(Precision prec) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Exponent e with |x| = m * 2^e, 1/2 <= m < 1 (0 for zero).
  long exponent() const { return is_zero() ? 0 : static_cast<long>(mpfr_get_exp(v_)); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// One unit in the last place at this precision (0 for zero).
  BigFloat ulp() const;
  /// log10|x| as a double; -inf for zero.
  double log10_abs() const;

  /// Significant-digit decimal rendering.
  std::string to_decimal(int digits) const;

  BigFloat abs() const;
  BigFloat sqrt() const;
  BigFloat mul_2exp(long e) const;

  BigFloat operator-() const;
  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);

  friend int compare(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return compare(a, b) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return compare(a, b) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return compare(a, b) >= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return compare(a, b) == 0; }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
};

/// A value with an absolute error bound: truth lies in [value - error, value + error].
struct FloatApprox {
  BigFloat value;
  BigFloat error;

  FloatApprox() : value(64), error(64) {}
  FloatApprox(BigFloat v, BigFloat e) : value(std::move(v)), error(std::move(e)) {}
  static FloatApprox exact(const Rational& x, Precision prec);

  Precision precision() const { return value.precision(); }
};

/// Interval-style arithmetic; error bounds are accumulated with upward
/// rounding and include one ulp of the rounded result.
FloatApprox operator+(const FloatApprox& a, const FloatApprox& b);
FloatApprox operator-(const FloatApprox& a, const FloatApprox& b);
FloatApprox operator*(const FloatApprox& a, const FloatApprox& b);
/// Throws DomainError when the divisor's interval contains zero.
FloatApprox operator/(const FloatApprox& a, const FloatApprox& b);
FloatApprox operator-(const FloatApprox& a);
FloatApprox scale(const FloatApprox& a, const Rational& c);
FloatApprox add_rational(const FloatApprox& a, const Rational& c);

/// Error quantities: sums and products rounded upward, kept at 64 bits.
BigFloat err_add(const BigFloat& a, const BigFloat& b);
BigFloat err_mul(const BigFloat& a, const BigFloat& b);
BigFloat err_from(const BigFloat& x);

/// Largest d >= 0 with |a - b| + ea + eb <= 10^-d * max(1, |a|). When every
/// term is exactly zero the precision-limited maximum is returned.
int agree_digits(const FloatApprox& a, const FloatApprox& b);

/// floor((prec - 1) * log10(2)).
int max_digits_for(Precision prec);

/// digits * 4 + guard bits; guard from CFLAB_PRECISION_GUARD_BITS (default 64).
Precision working_precision(int digits);
int guard_bits();

/// 10^-d as a BigFloat (rounded up).
BigFloat pow10_neg(int d, Precision prec);

}  // namespace cflab
