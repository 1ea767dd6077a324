#include "cflab/errors.hpp"
#include "cflab/parser.hpp"
#include "cflab/registry.hpp"
#include "cflab/solution_series.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cflab;

namespace {

CFSpec cf(const char* a, const char* b) { return CFSpec{parse_poly(a), parse_poly(b)}; }

const CFSpec kThm33 = cf("n^4+(n+1)^4+2{n^2+(n+1)^2}", "-n^8");
const HypergeometricTerm kSol33 = make_term(parse_ratfun("(n+1)^4(2n+3)/(2n+1)"), 1);

}  // namespace

TEST_CASE("cf_from_solution, polynomial regime") {
  auto t = series_terms_exact(kThm33, kSol33, 1);
  REQUIRE(t.size() == 1);
  CHECK(t[0] == Rational(1, 3));
  CHECK(kThm33.a.eval(0) - term_value(kSol33, 1) / term_value(kSol33, 0) == 0);

  Lemma31Evaluation r = cf_from_solution(kThm33, kSol33, 15, 100000);
  CHECK(r.regime == "polynomial");
  CHECK(oracle::digits_vs(r.value, oracle::kZetaCombo3) >= 15);
  CHECK(r.exponent == doctest::Approx(6.0).epsilon(0.02));
}

TEST_CASE("cf_from_solution, geometric regime") {
  CFSpec c = cf("3n+3", "-2n^2");
  HypergeometricTerm s = make_term(parse_ratfun("2(n+1)(n+3)/(n+2)"), 2);
  Lemma31Evaluation r = cf_from_solution(c, s, 30, 100000);
  CHECK(r.regime == "geometric");
  CHECK(oracle::digits_vs(r.value, oracle::kInv2Log2Minus1) >= 19);
  CHECK(r.terms < 200);
}

TEST_CASE("a vanishing solution term violates the hypothesis") {
  // y_n = n - 2 solves y(n+1) = 2y(n) - y(n-1) and vanishes at n = 2.
  CFSpec c = cf("2", "-1");
  HypergeometricTerm s = make_term(parse_ratfun("(n-1)/(n-2)"), -2);
  CHECK_THROWS_AS(make_lemma31(c, s), HypothesisError);
  CHECK_THROWS_AS(cf_from_solution(c, s, 10, 100), HypothesisError);
  // Uncertified solution.
  CHECK_THROWS_AS(make_lemma31(kThm33, make_term(parse_ratfun("n+1"), 1)), HypothesisError);
}

TEST_CASE("budget exhaustion") {
  CHECK_THROWS_AS(cf_from_solution(kThm33, kSol33, 30, 200), BudgetError);
}

TEST_CASE("series_terms_exact") {
  auto t = series_terms_exact(kThm33, kSol33, 2);
  REQUIRE(t.size() == 2);
  CHECK(t[0] == Rational(1, 3));
  // y_1 = 3, y_2 = 5 * 16, b(1) = -1.
  CHECK(t[1] == Rational(1, 240));

  const ConjectureEntry* e7 = find_entry(builtin_registry(), "thm3.7");
  REQUIRE(e7 != nullptr);
  REQUIRE(e7->solution.has_value());
  auto t7 = series_terms_exact(e7->cf, e7->solution->term, 1);
  REQUIRE(t7.size() == 1);
  CHECK(t7[0] == Rational(1, 5));
}

TEST_CASE("numerators from the solution") {
  for (const auto& e : builtin_registry()) {
    if (!e.solution) continue;
    CAPTURE(e.id);
    const HypergeometricTerm& s = e.solution->term;
    auto conv = convergents_exact(e.cf, 40);
    auto t = series_terms_exact(e.cf, s, 40);
    Rational y0 = term_value(s, 0), y1 = term_value(s, 1);
    Rational a0y0_y1 = e.cf.a.eval(0) * y0 - y1;
    Rational partial = 0;
    for (long n = 1; n <= 40; ++n) {
      partial += t[n - 1];
      CHECK(conv[n].A == term_value(s, n) * (1 / y0 + a0y0_y1 * partial));
    }
  }
}

TEST_CASE("term ratio is exact") {
  Lemma31Series ls = make_lemma31(kThm33, kSol33);
  auto t = series_terms_exact(kThm33, kSol33, 102);
  for (long k = 0; k <= 100; ++k) CHECK(t[k + 1] / t[k] == ls.term_ratio.eval(k));
}

TEST_CASE("agreement with eval_cf for each particular-solution identity") {
  for (const auto& e : builtin_registry()) {
    if (!e.solution || e.id.rfind("thm3.", 0) != 0) continue;
    CAPTURE(e.id);
    auto a = cf_from_solution(e.cf, e.solution->term, 18, 100000);
    auto b = eval_cf(e.cf, 18, 100000);
    CHECK(agree_digits(a.value, b.value) >= 15);
  }
}
