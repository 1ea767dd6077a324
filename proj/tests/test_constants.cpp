#include <thread>

#include "cflab/constants.hpp"
#include "cflab/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cflab;

namespace {

FloatApprox C(BaseConstant c, int d, int m = 1) { return const_value(c, d, m); }

}  // namespace

TEST_CASE("const_value examples") {
  CHECK(C(BaseConstant::pi_sq, 12).value.to_decimal(12) == "9.86960440109");
  CHECK(C(BaseConstant::log2, 12).value.to_decimal(12) == "0.693147180560");
  CHECK(C(BaseConstant::catalan, 12).value.to_decimal(12) == "0.915965594177");
  CHECK_THROWS_AS(C(BaseConstant::zeta3, kMaxConstantDigits + 1), BudgetError);
  CHECK_THROWS_AS(C(BaseConstant::zeta3, 20, 3), DomainError);
}

TEST_CASE("reference decimals") {
  const std::pair<BaseConstant, const char*> refs[] = {
      {BaseConstant::pi_sq, oracle::kPiSq},   {BaseConstant::log2, oracle::kLog2},
      {BaseConstant::catalan, oracle::kCatalan}, {BaseConstant::zeta2, oracle::kZeta2},
      {BaseConstant::zeta3, oracle::kZeta3},  {BaseConstant::zeta4, oracle::kZeta4},
      {BaseConstant::zeta5, oracle::kZeta5},  {BaseConstant::zeta7, oracle::kZeta7},
  };
  for (auto [c, ref] : refs) {
    CAPTURE(constant_name(c));
    CHECK(oracle::digits_vs(C(c, 48, 1), ref) >= 48);
    CHECK(oracle::digits_vs(C(c, 48, 2), ref) >= 48);
  }
}

TEST_CASE("method pairs agree to 40 digits") {
  for (BaseConstant c : all_base_constants()) {
    CAPTURE(constant_name(c));
    CHECK(agree_digits(C(c, 40, 1), C(c, 40, 2)) >= 40);
  }
}

TEST_CASE("zeta at even arguments") {
  FloatApprox pi2 = C(BaseConstant::pi_sq, 45);
  CHECK(agree_digits(scale(C(BaseConstant::zeta2, 45), 6), pi2) >= 40);
  CHECK(agree_digits(scale(C(BaseConstant::zeta4, 45), 90), pi2 * pi2) >= 40);
}

TEST_CASE("precision doubling") {
  for (BaseConstant c : all_base_constants()) {
    CAPTURE(constant_name(c));
    FloatApprox lo = C(c, 30), hi = C(c, 60);
    CHECK(agree_digits(lo, hi) >= 30);
    CHECK(lo.value.to_decimal(30) == hi.value.to_decimal(30));
  }
}

TEST_CASE("names") {
  for (BaseConstant c : all_base_constants()) CHECK(constant_from_name(constant_name(c)) == c);
  CHECK(!constant_from_name("zeta6").has_value());
}

TEST_CASE("bernoulli") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("eval_closed_form") {
  ClosedFormConstant e30;
  e30.numerator = {{BaseConstant::one, 16}, {BaseConstant::pi_sq, 3}};
  e30.denominator = {{BaseConstant::one, 16}, {BaseConstant::pi_sq, -1}};
  CHECK(oracle::digits_vs(eval_closed_form(e30, 45), oracle::kPiCombo30) >= 45);
  CHECK(e30.render() == "(16+3*pi_sq)/(16-pi_sq)");

  ClosedFormConstant unit;
  unit.numerator = {{BaseConstant::one, 1}};
  unit.denominator = {{BaseConstant::one, 1}};
  FloatApprox u = eval_closed_form(unit, 20);
  CHECK(u.value == BigFloat::from_long(1, 64));

  ClosedFormConstant t4;
  t4.numerator = {{BaseConstant::one, 2}};
  t4.denominator = {{BaseConstant::zeta5, 2}, {BaseConstant::zeta3, 6}, {BaseConstant::one, -9}};
  CHECK(oracle::digits_vs(eval_closed_form(t4, 45), oracle::kZetaCombo4) >= 45);

  ClosedFormConstant zero;
  zero.numerator = {{BaseConstant::one, 1}};
  zero.denominator = {{BaseConstant::zeta2, 6}, {BaseConstant::pi_sq, -1}};
  CHECK_THROWS_AS(eval_closed_form(zero, 20), DomainError);
}

TEST_CASE("concurrent fills are idempotent") {
  std::vector<std::string> out(8);
  std::vector<std::thread> pool;
  for (int i = 0; i < 8; ++i)
    pool.emplace_back([i, &out] {
      out[i] = const_value(BaseConstant::zeta7, 333, 1 + i % 2).value.to_decimal(333);
    });
  for (auto& t : pool) t.join();
  for (int i = 1; i < 8; ++i) CHECK(out[i] == out[0]);
}
