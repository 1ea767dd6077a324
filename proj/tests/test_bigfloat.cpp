#include <cstdlib>

#include "cflab/bigfloat.hpp"
#include "cflab/constants.hpp"
#include "cflab/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cflab;

TEST_CASE("from_rational is within half an ulp") {
  BigFloat x = BigFloat::from_rational(Rational(1, 3), 64);
  BigFloat third = BigFloat::from_long(1, 256) / BigFloat::from_long(3, 256);
  BigFloat rel = ((x.with_precision(256) - third) / third).abs();
  CHECK(rel <= BigFloat::pow2(-64, 64));
  CHECK(BigFloat::from_rational(Rational(0), 64).is_zero());
  CHECK(BigFloat::from_rational(Rational(5, 7), 128).to_decimal(10) == "0.7142857143");
}

TEST_CASE("FloatApprox::exact") {
  FloatApprox a = FloatApprox::exact(Rational(1, 2), 64);
  CHECK(a.error.is_zero());
  FloatApprox b = FloatApprox::exact(Rational(1, 3), 64);
  CHECK(!b.error.is_zero());
  CHECK(b.error <= BigFloat::pow2(-64, 64));
}

TEST_CASE("agree_digits") {
  Precision p = 256;
  auto ex = [&](const char* s) {
    return FloatApprox(BigFloat::parse_decimal(s, p), BigFloat(64));
  };
  CHECK(agree_digits(ex("1.23456"), ex("1.23457")) == 5);
  CHECK(agree_digits(ex("1"), ex("2")) == 0);
  CHECK(agree_digits(ex("0"), ex("0")) == max_digits_for(p));
  CHECK(agree_digits(ex("1e-30"), ex("0")) == 30);
  // Error bounds count against agreement.
  FloatApprox noisy(BigFloat::parse_decimal("1.23456", p), BigFloat::parse_decimal("1e-3", 64));
  CHECK(agree_digits(noisy, ex("1.23456")) == 3);
}

TEST_CASE("agree_digits is monotone in the gap") {
  Precision p = 256;
  FloatApprox base(BigFloat::from_long(3, p), BigFloat(64));
  int prev = 1000;
  for (int k = 1; k <= 60; ++k) {
    FloatApprox other(BigFloat::from_long(3, p) + pow10_neg(k, p), BigFloat(64));
    int d = agree_digits(base, other);
    CHECK(d <= prev + 1);
    CHECK(d >= k - 2);
    prev = d;
  }
}

TEST_CASE("interval arithmetic contains the truth") {
  Precision p = 80;
  FloatApprox third = FloatApprox::exact(Rational(1, 3), p);
  FloatApprox sum = third + third + third;
  FloatApprox one = FloatApprox::exact(Rational(1), 256);
  BigFloat diff = (sum.value.with_precision(256) - one.value).abs();
  CHECK(diff <= sum.error);
  FloatApprox q = FloatApprox::exact(Rational(1), p) / third;
  CHECK((q.value.with_precision(256) - BigFloat::from_long(3, 256)).abs() <= q.error);
  FloatApprox zero(BigFloat(p), BigFloat::pow2(-10, 64));
  CHECK_THROWS_AS(one / zero, DomainError);
}

TEST_CASE("parse_decimal and to_decimal") {
  BigFloat x = BigFloat::parse_decimal("-1.25e-3", 64);
  CHECK(x.to_double() == -0.00125);
  CHECK(BigFloat::parse_decimal("0.5", 64).to_decimal(3) == "0.500");
  CHECK_THROWS_AS(BigFloat::parse_decimal("1.2.3", 64), ParseError);
  CHECK_THROWS_AS(BigFloat::parse_decimal("abc", 64), ParseError);
  BigFloat pi2 = BigFloat::parse_decimal(oracle::kPiSq, 256);
  CHECK(pi2.to_decimal(20) == "9.8696044010893586188");
}

TEST_CASE("working precision and guard bits") {
  unsetenv("CFLAB_PRECISION_GUARD_BITS");
  CHECK(guard_bits() == 64);
  CHECK(working_precision(100) == 464);
  setenv("CFLAB_PRECISION_GUARD_BITS", "128", 1);
  CHECK(working_precision(100) == 528);
  unsetenv("CFLAB_PRECISION_GUARD_BITS");
  CHECK(max_digits_for(64) == 18);
}

TEST_CASE("doubling precision keeps agreement with the lower precision") {
  // Evaluate a constant at P and 2P bits; the two must agree to P bits minus slack.
  for (int digits : {20, 40, 80}) {
    FloatApprox lo = const_value(BaseConstant::zeta3, digits);
    FloatApprox hi = const_value(BaseConstant::zeta3, 2 * digits);
    CHECK(agree_digits(lo, hi) >= digits);
    CHECK(oracle::digits_vs(lo, oracle::kZeta3) >= std::min(digits, 48));
  }
}
