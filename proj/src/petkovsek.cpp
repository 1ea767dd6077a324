#include "cflab/petkovsek.hpp"

#include <algorithm>
#include <cmath>

#include "cflab/errors.hpp"

namespace cflab {

RationalFunction GPForm::reconstruct() const {
  return RationalFunction(Polynomial(z) * p * q, p.shift(-1) * r);
}

namespace {

/// Upper bound on |root| (Fujiwara), as a double; 0 for constants.
double root_bound(const Polynomial& p) {
  int d = p.degree();
  if (d <= 0) return 0;
  double lc = std::fabs(p.leading().get_d());
  double best = 0;
  for (int i = 1; i <= d; ++i) {
    double c = std::fabs(p.coeff(d - i).get_d()) / lc;
    if (c == 0) continue;
    double v = (i == d) ? std::pow(c / 2, 1.0 / i) : std::pow(c, 1.0 / i);
    best = std::max(best, v);
  }
  return 2 * best;
}

/// Newton interpolation through (x_i, y_i), x_i = 0, 1, 2, ...
Polynomial interpolate(const std::vector<Rational>& ys) {
  std::size_t m = ys.size();
  std::vector<Rational> dd = ys;
  for (std::size_t k = 1; k < m; ++k)
    for (std::size_t i = m - 1; i >= k; --i) dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(k));
  Polynomial result, basis(1);
  for (std::size_t k = 0; k < m; ++k) {
    result += Polynomial(dd[k]) * basis;
    basis *= Polynomial(std::vector<Rational>{Rational(-static_cast<long>(k)), 1});
  }
  return result;
}

/// Resultant Res_n(q(n), r(n+j)) as a polynomial in j.
Polynomial shift_resultant(const Polynomial& q, const Polynomial& r) {
  int deg = q.degree() * r.degree();
  std::vector<Rational> ys;
  for (int j = 0; j <= deg; ++j) ys.push_back(resultant(q, r.shift(j)));
  return interpolate(ys);
}

Polynomial falling_shift_product(const Polynomial& g, long j) {
  Polynomial out(1);
  for (long i = 0; i < j; ++i) out *= g.shift(-i);
  return out;
}

}  // namespace

std::vector<long> shift_set(const Polynomial& q, const Polynomial& r) {
  std::vector<long> out;
  if (q.degree() <= 0 || r.degree() <= 0) return out;
  Polynomial R = shift_resultant(q, r);
  double bound = root_bound(q) + root_bound(r);
  if (!R.is_zero()) bound = std::min(bound, root_bound(R));
  long limit = static_cast<long>(std::ceil(bound)) + 1;
  for (long j = 0; j <= limit; ++j) {
    if (!R.is_zero() && R.eval(j) != 0) continue;
    if (poly_gcd(q, r.shift(j)).degree() > 0) out.push_back(j);
  }
  return out;
}

GPForm gp_normal_form(const RationalFunction& f) {
  if (f.is_zero()) throw DomainError("gp_normal_form of the zero function");
  GPForm out;
  out.z = f.num().leading() / f.den().leading();
  out.q = f.num().monic();
  out.r = f.den().monic();
  out.p = Polynomial(1);
  while (true) {
    std::vector<long> js = shift_set(out.q, out.r);
    if (js.empty()) break;
    long j = js.front();
    Polynomial g = poly_gcd(out.q, out.r.shift(j));
    out.q = exact_div(out.q, g);
    out.r = exact_div(out.r, g.shift(-j));
    out.p *= falling_shift_product(g, j);
  }
  out.p = out.p.monic();
  return out;
}

Recurrence2 Recurrence2::from_cf(const CFSpec& cf) {
  return {Polynomial(1), -cf.a.shift(1), -cf.b.shift(1)};
}

long first_valid_index(const RationalFunction& ratio) {
  long idx = 0;
  for (const Polynomial* p : {&ratio.num(), &ratio.den()}) {
    if (p->is_zero()) throw DomainError("zero ratio");
    for (const auto& root : linear_factorization(*p).roots)
      if (is_integer(root) && root >= 0 && root.get_num().fits_slong_p())
        idx = std::max(idx, root.get_num().get_si() + 1);
  }
  return idx;
}

HypergeometricTerm make_term(const RationalFunction& ratio, const Rational& y0) {
  return {ratio, y0, first_valid_index(ratio)};
}

namespace {

/// Basis of the nullspace of a rational matrix (rows x cols).
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> m, std::size_t cols) {
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t k = 0; k < cols; ++k) m[i][k] -= f * m[row][k];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Rational roots of c2 z^2 + c1 z + c0 (not both c2, c1 zero), nonzero only.
std::vector<Rational> rational_quadratic_roots(const Rational& c2, const Rational& c1, const Rational& c0) {
  std::vector<Rational> out;
  if (c2 == 0) {
    if (c1 != 0) out.push_back(-c0 / c1);
  } else {
    Rational disc = c1 * c1 - 4 * c2 * c0;
    if (disc >= 0) {
      Integer num = disc.get_num(), den = disc.get_den();
      Integer sn, sd;
      mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
      mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
      if (sn * sn == num && sd * sd == den) {
        Rational s = make_rational(sn, sd);
        out.push_back((-c1 + s) / (2 * c2));
        out.push_back((-c1 - s) / (2 * c2));
      }
    }
  }
  out.erase(std::remove(out.begin(), out.end(), Rational(0)), out.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Nonnegative integer roots (<= cap) of sum_j coeff_j * d^(falling j).
std::vector<long> indicial_roots(const std::vector<std::pair<int, Rational>>& terms, int cap) {
  std::vector<long> out;
  for (long d = 0; d <= cap; ++d) {
    Rational acc = 0;
    for (const auto& [j, c] : terms) {
      Rational fall = 1;
      for (int i = 0; i < j; ++i) fall *= d - i;
      acc += c * fall;
    }
    if (acc == 0) out.push_back(d);
  }
  return out;
}

/// Polynomial solutions c of deg <= D of Q2 c(n+2) + Q1 c(n+1) + Q0 c(n) = 0.
std::vector<Polynomial> polynomial_solutions(const Polynomial& Q2, const Polynomial& Q1,
                                             const Polynomial& Q0) {
  // Operator in the difference basis: L = sum_j T_j Delta^j, T_j = sum_k Q_k C(k, j).
  const Polynomial* Q[3] = {&Q0, &Q1, &Q2};
  std::vector<Polynomial> T(3);
  for (int j = 0; j <= 2; ++j)
    for (int k = j; k <= 2; ++k) T[j] += *Q[k] * Polynomial(Rational(binomial(k, j)));
  int D = -1000000;
  for (int j = 0; j <= 2; ++j)
    if (!T[j].is_zero()) D = std::max(D, T[j].degree() - j);
  if (D == -1000000) return {};
  std::vector<std::pair<int, Rational>> lead;
  for (int j = 0; j <= 2; ++j)
    if (!T[j].is_zero() && T[j].degree() - j == D) lead.push_back({j, T[j].leading()});
  std::vector<long> degs = indicial_roots(lead, kMaxCDegree);
  if (degs.empty()) return {};
  int maxdeg = static_cast<int>(degs.back());

  std::size_t cols = static_cast<std::size_t>(maxdeg) + 1;
  std::vector<Polynomial> images;
  int rows = 0;
  Polynomial n = Polynomial::variable();
  for (int i = 0; i <= maxdeg; ++i) {
    Polynomial basis = n.pow(static_cast<unsigned>(i));
    Polynomial img = Q2 * basis.shift(2) + Q1 * basis.shift(1) + Q0 * basis;
    rows = std::max(rows, img.degree() + 1);
    images.push_back(std::move(img));
  }
  if (rows <= 0) {
    std::vector<Polynomial> all;
    for (int i = 0; i <= maxdeg; ++i) all.push_back(n.pow(static_cast<unsigned>(i)));
    return all;
  }
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(rows), std::vector<Rational>(cols));
  for (std::size_t c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) m[r][c] = images[c].coeff(r);
  std::vector<Polynomial> out;
  for (auto& v : nullspace(std::move(m), cols)) out.push_back(Polynomial(std::move(v)));
  return out;
}

bool term_less(const HypergeometricTerm& x, const HypergeometricTerm& y) {
  const auto& a = x.ratio;
  const auto& b = y.ratio;
  if (a.num().degree() != b.num().degree()) return a.num().degree() < b.num().degree();
  if (a.den().degree() != b.den().degree()) return a.den().degree() < b.den().degree();
  if (a.num().leading() != b.num().leading()) return a.num().leading() < b.num().leading();
  return a.render() < b.render();
}

}  // namespace

std::vector<HypergeometricTerm> hyper_solve(const Recurrence2& rec) {
  if (rec.p2.is_zero() || rec.p0.is_zero())
    throw DomainError("recurrence must have nonzero leading and trailing coefficients");
  std::vector<Polynomial> As = monic_divisors(rec.p0);
  std::vector<Polynomial> Bs = monic_divisors(rec.p2.shift(-1));
  std::vector<HypergeometricTerm> found;
  for (const auto& A : As) {
    Polynomial P0base = exact_div(rec.p0, A);
    for (const auto& B : Bs) {
      Polynomial P2 = exact_div(rec.p2 * A.shift(1), B.shift(1));
      const Polynomial& P1 = rec.p1;
      Polynomial P0 = P0base * B;
      int d = std::max({P2.degree(), P1.degree(), P0.degree()});
      for (const Rational& Z : rational_quadratic_roots(P2.coeff(d), P1.coeff(d), P0.coeff(d))) {
        Polynomial Q2 = Polynomial(Z * Z) * P2, Q1 = Polynomial(Z) * P1;
        for (const auto& c : polynomial_solutions(Q2, Q1, P0)) {
          if (c.is_zero()) continue;
          RationalFunction ratio(Polynomial(Z) * A * c.shift(1), B * c);
          if (ratio.is_zero()) continue;
          bool dup = false;
          for (const auto& t : found)
            if (t.ratio == ratio) dup = true;
          if (dup) continue;
          HypergeometricTerm term = make_term(ratio, 1);
          if (certify(rec, term)) found.push_back(std::move(term));
        }
      }
    }
  }
  std::sort(found.begin(), found.end(), term_less);
  return found;
}

bool certify(const Recurrence2& rec, const HypergeometricTerm& term) {
  const RationalFunction& R = term.ratio;
  if (R.is_zero()) return false;
  RationalFunction lhs = RationalFunction(rec.p2) * R.shift(1) * R + RationalFunction(rec.p1) * R +
                         RationalFunction(rec.p0);
  return lhs.is_zero();
}

Rational term_value(const HypergeometricTerm& term, long n) {
  if (n < term.first_valid_index)
    throw DomainError("index " + std::to_string(n) + " below the first valid index");
  Rational y = term.y0;
  for (long k = term.first_valid_index; k < n; ++k) y *= term.ratio.eval(k);
  return y;
}

}  // namespace cflab
