#include <random>

#include "cflab/cf_engine.hpp"
#include "cflab/errors.hpp"
#include "cflab/parser.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cflab;

namespace {

CFSpec cf(const char* a, const char* b) { return CFSpec{parse_poly(a), parse_poly(b)}; }

}  // namespace

TEST_CASE("convergent_exact") {
  CFSpec c = cf("3n^2+3n+1", "-2n^4");
  auto p0 = convergent_exact(c, 0);
  CHECK(p0.A == 1);
  CHECK(p0.B == 0);
  auto p1 = convergent_exact(c, 1);
  CHECK(p1.A == 1);
  CHECK(p1.B == 1);
  auto p2 = convergent_exact(c, 2);
  CHECK(p2.A == 5);
  CHECK(p2.B == 7);
  CHECK_THROWS_AS(convergent_exact(c, -1), DomainError);
}

TEST_CASE("cross-determinant identity") {
  // A_{n+1} B_n - A_n B_{n+1} = -(-1)^n prod_{i=1}^n b(i) up to the sign convention
  // fixed by A_1 B_0 - A_0 B_1 = -1.
  for (auto c : {cf("3n^2+3n+1", "-2n^4"), cf("2n+1", "-n^2"), cf("n^3+5", "-n^6+n")}) {
    auto v = convergents_exact(c, 41);
    Rational prod = 1;
    for (long n = 0; n <= 40; ++n) {
      if (n > 0) prod *= -c.b.eval(n);
      Rational det = v[n + 1].A * v[n].B - v[n].A * v[n + 1].B;
      CHECK(det == -prod);
    }
  }
}

TEST_CASE("float convergents match exact ones") {
  CFSpec c = cf("3n^2+3n+1", "-2n^4");
  auto ex = convergent_exact(c, 200);
  for (long rb : {64L, 256L, 1000L}) {
    auto fl = convergent_float(c, 200, 256, rb);
    BigFloat q = fl.A / fl.B;
    BigFloat qe = BigFloat::from_rational(ex.A / ex.B, 256);
    CHECK(((q - qe) / qe).abs() < BigFloat::pow2(-230, 64));
  }
}

TEST_CASE("eval_cf examples") {
  auto r = eval_cf(cf("3n^2+3n+1", "-2n^4"), 25, 10000);
  CHECK(oracle::digits_vs(r.value, oracle::kInvTwoG) >= 20);
  CHECK(!r.finite);

  auto f = eval_cf(cf("n+1", "0"), 10, 100);
  CHECK(f.finite);
  CHECK(f.value.value == BigFloat::from_long(1, 64));
  CHECK(f.value.error.is_zero());

  auto g = eval_cf(cf("3n+3", "-2n^2"), 20, 10000);
  CHECK(oracle::digits_vs(g.value, oracle::kInv2Log2Minus1) >= 19);
}

TEST_CASE("finite continued fractions") {
  // b(3) = 0 truncates the fraction.
  CFSpec c = cf("n+1", "n(3-n)");
  auto r = eval_cf(c, 30, 100);
  CHECK(r.finite);
  auto ex = convergent_exact(c, 3);
  CHECK(agree_digits(r.value, FloatApprox::exact(ex.A / ex.B, 256)) >= 30);
  CHECK(first_vanishing_b(parse_poly("n(3-n)")) == 3);
  CHECK(!first_vanishing_b(parse_poly("-2n^4")).has_value());
}

TEST_CASE("rescaling does not change the value") {
  CFSpec c = cf("34n^3+51n^2+27n+5", "-n^6");
  EvalOptions a, b;
  a.rescale_bits = 100;
  b.rescale_bits = 1000;
  auto ra = eval_cf(c, 40, 10000, a);
  auto rb = eval_cf(c, 40, 10000, b);
  CHECK(agree_digits(ra.value, rb.value) >= 38);
}

TEST_CASE("singular convergent and non-convergence") {
  CHECK_THROWS_AS(eval_cf(cf("n-1", "1"), 10, 100), SingularConvergentError);
  try {
    eval_cf(cf("1", "-n^4"), 20, 60);
    FAIL("expected non-convergence");
  } catch (const ConvergenceError& e) {
    CHECK(e.last_gap() > 0);
  } catch (const SingularConvergentError&) {
    // also acceptable for a divergent CF
  }
}

TEST_CASE("gaps halve for the H family") {
  EvalOptions o;
  o.record_gaps = true;
  auto r = eval_cf(h_cf(HParams{0, 0, 0}), 30, 10000, o);
  REQUIRE(r.gaps.size() > 40);
  size_t n = r.gaps.size();
  double ratio = r.gaps[n - 10] / r.gaps[n - 11];
  CHECK(ratio == doctest::Approx(0.5).epsilon(0.1));
}

TEST_CASE("h_cf") {
  CFSpec c = h_cf(HParams{0, 0, 0});
  CHECK(c.a == parse_poly("3n^2+3n+1"));
  CHECK(c.b == parse_poly("-2n^4"));
  CFSpec d = h_cf(HParams{1, 2, Rational(1, 2)});
  CHECK(d.b == parse_poly("-2n(n+1)(n+2)(n+1/2)"));
}

TEST_CASE("closed form numerators match the recurrence") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<long> num(-8, 8), den(1, 4);
  int checked = 0;
  for (int t = 0; t < 40; ++t) {
    HParams p{make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)),
              make_rational(num(rng), den(rng))};
    if (p.has_pole()) continue;
    auto v = convergents_exact(h_cf(p), 30);
    for (long n = 0; n <= 30; ++n) {
      auto [A, B] = closed_form_AB(p.alpha, p.beta, p.gamma, n);
      CHECK(A == v[n].A);
      CHECK(B == v[n].B);
    }
    ++checked;
  }
  CHECK(checked >= 15);
  CHECK_THROWS_AS(closed_form_AB(0, 0, -1, 3), DomainError);
}

TEST_CASE("normalized numerators") {
  HParams p{0, 0, 0};
  auto ex = normalized_A_exact(p, 30);
  auto fl = normalized_A_float(p, 30, 200);
  for (long n = 0; n <= 30; ++n) {
    auto [A, B] = closed_form_AB(0, 0, 0, n);
    CHECK(ex[n] == A / (pochhammer(Rational(1), n) * factorial(n)));
    BigFloat e = BigFloat::from_rational(ex[n], 200);
    CHECK(((fl[n] - e) / e).abs() < BigFloat::pow2(-180, 64));
  }
}

TEST_CASE("ratio_limit_check tends to 2") {
  FloatApprox r = ratio_limit_check(0, 0, 0, 2000);
  CHECK(r.value.to_double() == doctest::Approx(2.0).epsilon(0.01));
  FloatApprox s = ratio_limit_check(Rational(1, 2), 3, Rational(-1, 3), 4000);
  CHECK(s.value.to_double() == doctest::Approx(2.0).epsilon(0.01));
}
