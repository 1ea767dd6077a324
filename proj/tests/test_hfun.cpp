#include "cflab/constants.hpp"
#include "cflab/errors.hpp"
#include "cflab/hfun.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cflab;

namespace {

HParams hp(Rational a, Rational b, Rational g) { return HParams{a, b, g}; }

// Combined error bounds cover the difference.
bool within_bounds(const FloatApprox& x, const FloatApprox& y) {
  BigFloat d = (x.value.with_precision(512) - y.value.with_precision(512)).abs();
  return d <= err_add(x.error, y.error);
}

}  // namespace

TEST_CASE("series_convergence_class") {
  CHECK(series_convergence_class(hp(0, 0, 0)) == SeriesClass::convergent);
  CHECK(series_convergence_class(hp(0, 0, 1)) == SeriesClass::divergent);
  CHECK(series_convergence_class(hp(-1, 0, 0)) == SeriesClass::pole);
  CHECK(series_convergence_class(hp(0, 0, -1)) == SeriesClass::pole);
  CHECK(series_convergence_class(hp(0, 0, Rational(1, 2))) == SeriesClass::divergent);
}

TEST_CASE("h_series_term") {
  CHECK(h_series_term(hp(0, 0, 0), 0) == 4);
  // (1/2)(1) / ((1/2)(3/2))^2
  CHECK(h_series_term(hp(0, 0, 0), 1) == Rational(8, 9));
  CHECK(h_series_term(hp(0, 0, Rational(-1, 2)), 0) == 4);
  CHECK_THROWS_AS(h_series_term(hp(-1, 0, 0), 0), DomainError);
}

TEST_CASE("h_value_series examples") {
  FloatApprox g = h_value_series(hp(0, 0, 0), 1000000);
  CHECK(oracle::digits_vs(g, oracle::kTwoG) >= 7);
  CHECK(g.error.to_double() < 1e-6);
  CHECK(g.error.to_double() > 1e-12);

  FloatApprox p = h_value_series(hp(0, 0, Rational(-1, 2)), 10000);
  CHECK(oracle::digits_vs(p, oracle::kPiSqOver8) >= 4);

  FloatApprox l = h_value_series(hp(1, 1, 0), 10000);
  CHECK(oracle::digits_vs(l, oracle::kOneMinusLog2) >= 4);

  CHECK_THROWS_AS(h_value_series(hp(0, 0, 1), 100), DomainError);
  CHECK_THROWS_AS(h_value_series(hp(-1, 0, 0), 100), DomainError);
}

TEST_CASE("h_value_cf examples") {
  CHECK(oracle::digits_vs(h_value_cf(hp(0, 0, 0), 30), oracle::kTwoG) >= 30);
  CHECK(oracle::digits_vs(h_value_cf(hp(0, 0, 1), 30), oracle::kTwoGMinus1Over2) >= 30);
  CHECK(agree_digits(h_value_cf(hp(2, 0, 0), 30), h_value_cf(hp(0, 0, 1), 30)) >= 30);
}

TEST_CASE("contiguous steps") {
  FloatApprox h200 = h_value_cf(hp(2, 0, 0), 30);
  CHECK(oracle::digits_vs(alpha_step_down(hp(2, 0, 0), h200), oracle::kTwoG) >= 29);
  CHECK_THROWS_AS(alpha_step_down(hp(1, 0, 0), h200), DegenerateRelationError);

  FloatApprox h400 = h_value_cf(hp(4, 0, 0), 30);
  CHECK(agree_digits(alpha_step_down(hp(4, 0, 0), h400), h200) >= 28);

  FloatApprox h001 = h_value_cf(hp(0, 0, 1), 30);
  CHECK(oracle::digits_vs(gamma_step_down(hp(0, 0, 1), h001), oracle::kTwoG) >= 29);

  FloatApprox pi8(BigFloat::parse_decimal(oracle::kPiSqOver8, 256), BigFloat::pow2(-160, 64));
  CHECK(oracle::digits_vs(gamma_step_down(hp(0, 0, Rational(-1, 2)), pi8),
                          oracle::kPiSqPlus4Over16) >= 40);
  // gamma = (alpha+1)/2 zeroes the divisor.
  CHECK_THROWS_AS(gamma_step_down(hp(1, 3, 1), h001), DegenerateRelationError);

  // The up steps invert the down steps.
  FloatApprox h = h_value_cf(hp(1, 2, Rational(1, 3)), 30);
  FloatApprox down = gamma_step_down(hp(1, 2, Rational(1, 3)), h);
  CHECK(agree_digits(gamma_step_up(hp(1, 2, Rational(-2, 3)), down), h) >= 27);
  FloatApprox left = alpha_step_down(hp(3, 2, Rational(1, 3)), h_value_cf(hp(3, 2, Rational(1, 3)), 30));
  CHECK(agree_digits(alpha_step_up(hp(1, 2, Rational(1, 3)), left),
                     h_value_cf(hp(3, 2, Rational(1, 3)), 30)) >= 27);
}

TEST_CASE("contiguous relation residuals") {
  const Rational halves[] = {Rational(-1, 2), 0, Rational(1, 2), 1, Rational(3, 2), 2, 3};
  int checked = 0;
  for (const Rational& a : halves)
    for (const Rational& b : {Rational(0), Rational(1, 2), Rational(2)})
      for (const Rational& g : {Rational(-1, 2), Rational(0), Rational(1), Rational(3, 2)}) {
        HParams p = hp(a, b, g);
        HParams pa = hp(a - 2, b, g), pg = hp(a, b, g - 1);
        if (p.has_pole() || p.lemma_excluded()) continue;
        FloatApprox h = h_value_cf(p, 30);
        Precision pr = 200;
        if (!pa.has_pole() && !pa.lemma_excluded() && (a - 1) * (a + b - 2 * g - 1) != 0) {
          FloatApprox ha = h_value_cf(pa, 30);
          FloatApprox res = add_rational(scale(h, a * (a - 2 * g - 1)) -
                                             scale(ha, (a - 1) * (a + b - 2 * g - 1)),
                                         1);
          CHECK(res.value.with_precision(pr).abs().to_double() < 1e-20);
          ++checked;
        }
        if (!pg.has_pole() && !pg.lemma_excluded() && (2 * g - a - 1) * (2 * g - b - 1) != 0) {
          FloatApprox hg = h_value_cf(pg, 30);
          FloatApprox res = add_rational(scale(h, 2 * g * (2 * g - a - b - 1)) -
                                             scale(hg, (2 * g - a - 1) * (2 * g - b - 1)),
                                         1);
          CHECK(res.value.abs().to_double() < 1e-20);
          ++checked;
        }
      }
  CHECK(checked > 40);
}

TEST_CASE("h_anywhere examples") {
  HEvaluation a = h_anywhere(hp(0, 0, 3), 30, HRoute::ladder);
  CHECK(oracle::digits_vs(a.value, oracle::k450GMinus299Over720) >= 30);
  CHECK(a.path.size() == 4);
  CHECK(oracle::digits_vs(h_anywhere(hp(0, 0, 3), 30).value, oracle::k450GMinus299Over720) >= 30);

  HEvaluation b = h_anywhere(hp(4, 2, 2), 30, HRoute::ladder);
  CHECK(oracle::digits_vs(b.value, oracle::k17Minus6GOver128) >= 30);

  HEvaluation c = h_anywhere(hp(0, 0, 0), 30, HRoute::ladder);
  CHECK(c.path.size() == 1);
  CHECK(oracle::digits_vs(c.value, oracle::kTwoG) >= 30);

  CHECK_THROWS_AS(h_anywhere(hp(-1, 0, 0), 20), DomainError);
}

TEST_CASE("ladder avoids degenerate divisors") {
  // alpha = 1 blocks alpha steps and gamma = (alpha+1)/2 blocks the first gamma step.
  for (HParams p : {hp(1, 1, 3), hp(1, 3, 1), hp(3, 3, 5), hp(Rational(1, 2), 0, 4)}) {
    auto path = plan_ladder(p);
    REQUIRE(!path.empty());
    CHECK(path.front() == p);
    CHECK(path.back().in_series_region());
    HEvaluation e = h_anywhere(p, 25, HRoute::ladder);
    CHECK(agree_digits(e.value, h_value_cf(p, 25)) >= 24);
  }
}

TEST_CASE("h_lemma23_series examples") {
  CHECK(oracle::digits_vs(h_lemma23_series(hp(0, 0, 0), 120), oracle::kTwoG) >= 25);
  CHECK(oracle::digits_vs(h_lemma23_series(hp(2, 2, 1), 120), oracle::k3Minus2GOver8) >= 25);
  CHECK(oracle::digits_vs(h_lemma23_series(hp(0, 0, Rational(-1, 2)), 120), oracle::kPiSqOver8) >= 25);
  CHECK(oracle::digits_vs(h_lemma23_value(hp(0, 0, 0), 60), oracle::kTwoG) >= 48);
}

TEST_CASE("symmetry in alpha and beta") {
  for (auto [a, b, g] : {std::tuple{Rational(0), Rational(2), Rational(1)},
                         std::tuple{Rational(1, 2), Rational(3), Rational(-1, 3)},
                         std::tuple{Rational(5), Rational(1, 3), Rational(2)}}) {
    CHECK(agree_digits(h_value_cf(hp(a, b, g), 30), h_value_cf(hp(b, a, g), 30)) >= 30);
  }
}

TEST_CASE("series and CF agree in the convergent region") {
  for (HParams p : {hp(0, 0, 0), hp(1, 1, 0), hp(2, 0, Rational(1, 2)), hp(3, 1, 1),
                    hp(0, 2, Rational(-1, 2))}) {
    FloatApprox s = h_value_series(p, 20000);
    FloatApprox c = h_value_cf(p, 30);
    CHECK(within_bounds(s, c));
    FloatApprox l = h_lemma23_series(p, 150);
    CHECK(within_bounds(l, c));
  }
}

TEST_CASE("symmetry_check") {
  CHECK(symmetry_check(1, 0, 25));
  CHECK(symmetry_check(0, 0, 25));
  CHECK(symmetry_check(2, 1, 25));
  for (long p = 0; p <= 3; ++p)
    for (long q = 0; q <= 3; ++q) CHECK(symmetry_check(p, q, 25));
}
