#include "cflab/hfun.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

#include "cflab/errors.hpp"

namespace cflab {

bool HParams::has_pole() const {
  return is_nonpositive_integer((alpha + 1) / 2) || is_nonpositive_integer((beta + 1) / 2) ||
         is_nonpositive_integer(gamma + 1);
}

bool HParams::lemma_excluded() const { return is_nonpositive_integer(epsilon()); }

bool HParams::in_series_region() const { return 2 * gamma - alpha - beta < 1; }

std::string HParams::render() const {
  return "(" + to_string(alpha) + ", " + to_string(beta) + ", " + to_string(gamma) + ")";
}

const char* to_string(SeriesClass c) {
  switch (c) {
    case SeriesClass::convergent: return "convergent";
    case SeriesClass::divergent: return "divergent";
    case SeriesClass::pole: return "pole";
  }
  return "?";
}

SeriesClass series_convergence_class(const HParams& p) {
  if (p.has_pole()) return SeriesClass::pole;
  return p.in_series_region() ? SeriesClass::convergent : SeriesClass::divergent;
}

namespace {

void require_no_pole(const HParams& p) {
  if (p.has_pole()) throw DomainError("pole parameters " + p.render());
}

void require_lemma(const HParams& p) {
  require_no_pole(p);
  if (p.lemma_excluded())
    throw DomainError("(alpha+beta+1)/2 - gamma is a nonpositive integer at " + p.render());
}

/// t_{n+1} / t_n.
Rational series_ratio(const HParams& p, long n) {
  Rational ha = (p.alpha + 1) / 2, hb = (p.beta + 1) / 2;
  return (Rational(1, 2) + n) * (p.gamma + 1 + n) / ((ha + n + 1) * (hb + n + 1));
}

/// H(P) = (c1 H(Q) + c0) / d.
FloatApprox linear_step(const FloatApprox& h, const Rational& c1, const Rational& c0,
                        const Rational& d, const char* what) {
  if (d == 0) throw DegenerateRelationError(std::string(what) + ": vanishing divisor");
  return add_rational(scale(h, c1 / d), c0 / d);
}

HParams swapped(const HParams& p) { return {p.beta, p.alpha, p.gamma}; }

}  // namespace

Rational h_series_term(const HParams& p, long n) {
  require_no_pole(p);
  if (n < 0) throw DomainError("negative series index");
  Rational ha = (p.alpha + 1) / 2, hb = (p.beta + 1) / 2;
  return pochhammer(Rational(1, 2), n) * pochhammer(p.gamma + 1, n) /
         (pochhammer(ha, n + 1) * pochhammer(hb, n + 1));
}

FloatApprox h_value_series(const HParams& p, long max_terms, Precision prec) {
  SeriesClass cls = series_convergence_class(p);
  if (cls != SeriesClass::convergent)
    throw DomainError(std::string("series is ") + to_string(cls) + " at " + p.render());
  if (max_terms < 32) max_terms = 32;
  BigFloat sum(prec), t = BigFloat::from_rational(h_series_term(p, 0), prec);
  BigFloat half_estimate(prec);
  const long half = max_terms / 2;
  auto estimate = [&](long n_terms) {
    // sum_{n < n_terms} t_n + t_{n_terms} * n_terms / eps
    return sum + t * BigFloat::from_rational(Rational(n_terms) / p.epsilon(), prec);
  };
  for (long n = 0; n < max_terms; ++n) {
    if (n == half) half_estimate = estimate(half);
    sum += t;
    t *= BigFloat::from_rational(series_ratio(p, n), prec);
  }
  BigFloat full = estimate(max_terms);
  BigFloat spread = err_from(full - half_estimate);
  Rational weight = abs(p.alpha) + abs(p.beta) + abs(p.gamma) + 2;
  BigFloat local = err_mul(err_from(t), err_from(BigFloat::from_rational(weight, 64)));
  BigFloat bound = spread > local ? spread : local;
  BigFloat quarter = BigFloat::from_rational(Rational(1, 4), prec);
  BigFloat value = full * quarter;
  return {value, err_add(err_mul(bound, quarter), err_mul(BigFloat::from_long(4 * max_terms, 64), value.ulp()))};
}

FloatApprox h_value_cf(const HParams& p, int target_digits, long max_iter) {
  require_lemma(p);
  CFEvaluation ev = eval_cf(h_cf(p), target_digits + 2, max_iter);
  Precision prec = ev.value.precision();
  return FloatApprox::exact(1, prec) / ev.value;
}

FloatApprox h_lemma23_series(const HParams& p, long max_terms, Precision prec) {
  require_lemma(p);
  if (max_terms < 4) max_terms = 4;
  if (prec == 0) prec = static_cast<Precision>(max_terms) + 64;
  std::vector<BigFloat> A = normalized_A_float(p, max_terms + 1, prec);
  // c_n = 2^n (alpha+1)_n (beta+1)_n / ((gamma+1)_{n+1} (n+1)!), by ratio.
  Rational c = 1 / (p.gamma + 1);
  BigFloat sum(prec), term(prec);
  BigFloat last_ratio = BigFloat::from_long(1, 64);
  for (long n = 0; n < max_terms; ++n) {
    if (A[n].is_zero() || A[n + 1].is_zero())
      throw DomainError("A'_n vanished at n = " + std::to_string(A[n].is_zero() ? n : n + 1));
    BigFloat next = BigFloat::from_rational(c, prec) / (A[n] * A[n + 1]);
    if (!term.is_zero()) last_ratio = err_from(next / term);
    term = std::move(next);
    sum += term;
    c *= 2 * (p.alpha + 1 + n) * (p.beta + 1 + n) / ((p.gamma + n + 2) * (n + 2));
  }
  // Tail: once consecutive terms shrink by at most 3/4, the tail is <= 3|last term|.
  BigFloat tail = err_mul(BigFloat::from_long(3, 64), err_from(term));
  if (last_ratio > BigFloat::from_rational(Rational(3, 4), 64))
    throw ConvergenceError("series terms are not yet decaying geometrically", term.to_double());
  BigFloat rounding = err_mul(BigFloat::from_long(8 * max_terms, 64), sum.ulp());
  return {sum, err_add(tail, rounding)};
}

FloatApprox h_lemma23_value(const HParams& p, int target_digits) {
  long terms = static_cast<long>(std::ceil(target_digits * 3.3219280948873623)) + 48;
  return h_lemma23_series(p, terms, working_precision(target_digits) + 32);
}

FloatApprox alpha_step_down(const HParams& p, const FloatApprox& h) {
  const Rational& a = p.alpha;
  Rational c1 = a * (a - 2 * p.gamma - 1);
  Rational d = (a - 1) * (a + p.beta - 2 * p.gamma - 1);
  return linear_step(h, c1, 1, d, "alpha_step_down");
}

FloatApprox alpha_step_up(const HParams& p, const FloatApprox& h) {
  const Rational& a = p.alpha;
  Rational c1 = (a + 1) * (a + p.beta - 2 * p.gamma + 1);
  Rational d = (a + 2) * (a - 2 * p.gamma + 1);
  return linear_step(h, c1, -1, d, "alpha_step_up");
}

FloatApprox gamma_step_down(const HParams& p, const FloatApprox& h) {
  const Rational& g = p.gamma;
  Rational c1 = 2 * g * (2 * g - p.alpha - p.beta - 1);
  Rational d = (2 * g - p.alpha - 1) * (2 * g - p.beta - 1);
  return linear_step(h, c1, 1, d, "gamma_step_down");
}

FloatApprox gamma_step_up(const HParams& p, const FloatApprox& h) {
  const Rational& g = p.gamma;
  Rational c1 = (2 * g + 1 - p.alpha) * (2 * g + 1 - p.beta);
  Rational d = 2 * (g + 1) * (2 * g + 1 - p.alpha - p.beta);
  return linear_step(h, c1, -1, d, "gamma_step_up");
}

namespace {

enum class Move { gamma_down, alpha_up, beta_up, gamma_up, alpha_down, beta_down };

constexpr Move kMoves[] = {Move::gamma_down, Move::alpha_up,   Move::beta_up,
                           Move::gamma_up,   Move::alpha_down, Move::beta_down};

HParams apply(const HParams& p, Move m) {
  switch (m) {
    case Move::gamma_down: return {p.alpha, p.beta, p.gamma - 1};
    case Move::alpha_up: return {p.alpha + 2, p.beta, p.gamma};
    case Move::beta_up: return {p.alpha, p.beta + 2, p.gamma};
    case Move::gamma_up: return {p.alpha, p.beta, p.gamma + 1};
    case Move::alpha_down: return {p.alpha - 2, p.beta, p.gamma};
    case Move::beta_down: return {p.alpha, p.beta - 2, p.gamma};
  }
  return p;
}

bool is_reverse(Move m) {
  return m == Move::gamma_up || m == Move::alpha_down || m == Move::beta_down;
}

/// H(from) expressed through H(to), where to = apply(from, m).
FloatApprox map_back(const HParams& to, Move m, const FloatApprox& h_to) {
  switch (m) {
    case Move::gamma_down: return gamma_step_up(to, h_to);
    case Move::alpha_up: return alpha_step_down(to, h_to);
    case Move::beta_up: return alpha_step_down(swapped(to), h_to);
    case Move::gamma_up: return gamma_step_down(to, h_to);
    case Move::alpha_down: return alpha_step_up(to, h_to);
    case Move::beta_down: return alpha_step_up(swapped(to), h_to);
  }
  throw DomainError("unknown move");
}

bool move_ok(const HParams& to, Move m) {
  if (to.has_pole() || to.lemma_excluded()) return false;
  try {
    map_back(to, m, FloatApprox::exact(1, 64));
  } catch (const DegenerateRelationError&) {
    return false;
  }
  return true;
}

Move find_move(const HParams& from, const HParams& to) {
  for (Move m : kMoves)
    if (apply(from, m) == to) return m;
  throw DomainError("points are not adjacent");
}

constexpr int kMaxLadderDepth = 24;
constexpr int kMaxReverseMoves = 2;

}  // namespace

std::vector<HParams> plan_ladder(const HParams& p) {
  require_lemma(p);
  if (p.in_series_region()) return {p};
  struct Node {
    HParams at;
    int parent;
    int depth;
    int reverse;
  };
  std::vector<Node> nodes{{p, -1, 0, 0}};
  std::map<HParams, bool> seen{{p, true}};
  std::deque<int> queue{0};
  std::vector<std::string> blocked;
  while (!queue.empty()) {
    int idx = queue.front();
    queue.pop_front();
    Node cur = nodes[idx];
    if (cur.depth >= kMaxLadderDepth) continue;
    for (Move m : kMoves) {
      int rev = cur.reverse + (is_reverse(m) ? 1 : 0);
      if (rev > kMaxReverseMoves) continue;
      HParams nxt = apply(cur.at, m);
      if (seen.count(nxt)) continue;
      if (!move_ok(nxt, m)) {
        if (blocked.size() < 8) blocked.push_back(cur.at.render() + "->" + nxt.render());
        continue;
      }
      seen[nxt] = true;
      nodes.push_back({nxt, idx, cur.depth + 1, rev});
      int nidx = static_cast<int>(nodes.size()) - 1;
      if (nxt.in_series_region()) {
        std::vector<HParams> path;
        for (int k = nidx; k >= 0; k = nodes[k].parent) path.push_back(nodes[k].at);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(nidx);
    }
  }
  std::string msg = "no non-degenerate ladder from " + p.render();
  if (!blocked.empty()) {
    msg += "; blocked steps:";
    for (const auto& b : blocked) msg += " " + b;
  }
  throw DegenerateRelationError(msg);
}

HEvaluation h_anywhere(const HParams& p, int target_digits, HRoute route) {
  require_lemma(p);
  if (route != HRoute::ladder) {
    try {
      return {h_value_cf(p, target_digits), {p}, "cf"};
    } catch (const ConvergenceError&) {
      if (route == HRoute::cf) throw;
    }
  }
  std::vector<HParams> path = plan_ladder(p);
  // Extra digits absorb amplification along the ladder.
  int extra = 4 + 2 * static_cast<int>(path.size());
  FloatApprox h = h_lemma23_value(path.back(), target_digits + extra);
  for (std::size_t i = path.size() - 1; i > 0; --i)
    h = map_back(path[i], find_move(path[i - 1], path[i]), h);
  return {h, path, path.size() == 1 ? "lemma23" : "ladder+lemma23"};
}

bool symmetry_check(long p_idx, long q_idx, int target_digits) {
  if (p_idx < 0 || q_idx < 0) throw DomainError("symmetry_check: negative index");
  FloatApprox x = h_anywhere({Rational(2 * p_idx), 0, Rational(q_idx)}, target_digits + 4).value;
  FloatApprox y = h_anywhere({Rational(2 * q_idx), 0, Rational(p_idx)}, target_digits + 4).value;
  BigFloat diff = err_from(x.value - y.value);
  return diff < pow10_neg(target_digits, 64);
}

}  // namespace cflab
