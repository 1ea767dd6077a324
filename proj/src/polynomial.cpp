#include "cflab/polynomial.hpp"

#include <algorithm>
#include <map>

#include "cflab/errors.hpp"

namespace cflab {

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) c_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

void Polynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::variable() { return monomial(1, 1); }

Polynomial Polynomial::monomial(const Rational& c, int k) {
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v[k] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(const std::vector<Rational>& roots) {
  Polynomial p(1);
  for (const auto& r : roots) p *= Polynomial(std::vector<Rational>{-r, 1});
  return p;
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

Rational Polynomial::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

Rational Polynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::shift(const Rational& j) const {
  // Horner in the polynomial ring: acc = acc*(n+j) + c_i.
  Polynomial lin(std::vector<Rational>{j, 1});
  Polynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= lin;
    acc += Polynomial(*it);
  }
  return acc;
}

Polynomial Polynomial::forward_difference() const { return shift(1) - *this; }

Polynomial Polynomial::monic() const {
  if (c_.empty()) return *this;
  Polynomial r = *this;
  Rational lc = c_.back();
  for (auto& c : r.c_) c /= lc;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

std::pair<std::vector<Integer>, Integer> Polynomial::integer_form() const {
  Integer l = 1;
  for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(Integer(c.get_num() * (l / c.get_den())));
  return {out, l};
}

std::vector<Integer> Polynomial::primitive_integer_form() const {
  auto [v, d] = integer_form();
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

std::string Polynomial::render() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (i == 0 || mag != 1) out += to_string(mag);
    if (i >= 1) out += "n";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  normalize();
  return *this;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db) + 1);
  Rational lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    Rational f = rem[i] / lb;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs()[j];
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("polynomial does not divide exactly");
  return q;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  Polynomial x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Rational resultant(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  Rational sign_acc = 1;
  Polynomial x = a, y = b;
  while (true) {
    int dx = x.degree(), dy = y.degree();
    if (dy == 0) {
      Rational r = 1;
      for (int i = 0; i < dx; ++i) r *= y.leading();
      return sign_acc * r;
    }
    Polynomial r = divmod(x, y).second;
    if (r.is_zero()) return 0;
    if ((dx % 2 == 1) && (dy % 2 == 1)) sign_acc = -sign_acc;
    for (int i = 0; i < dx - r.degree(); ++i) sign_acc *= y.leading();
    x = std::move(y);
    y = std::move(r);
  }
}

LinearFactorization linear_factorization(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("linear_factorization of zero polynomial");
  LinearFactorization out;
  out.unit = p.leading();
  Polynomial rest = p.monic();
  // Roots at zero first, so the constant term of the integer form is nonzero.
  while (rest.degree() > 0 && rest.coeff(0) == 0) {
    out.roots.push_back(0);
    rest = exact_div(rest, Polynomial::variable());
  }
  if (rest.degree() > 0) {
    std::vector<Integer> prim = rest.primitive_integer_form();
    std::vector<Integer> ps = positive_divisors(prim.front());
    std::vector<Integer> qs = positive_divisors(prim.back());
    std::vector<Rational> cands;
    for (const auto& pp : ps)
      for (const auto& qq : qs) {
        cands.push_back(make_rational(pp, qq));
        cands.push_back(make_rational(-pp, qq));
      }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (const auto& c : cands) {
      while (rest.degree() > 0 && rest.eval(c) == 0) {
        out.roots.push_back(c);
        rest = exact_div(rest, Polynomial(std::vector<Rational>{-c, 1}));
      }
      if (rest.degree() <= 0) break;
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.remainder = rest;
  return out;
}

bool poly_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != y[i]) return x[i] < y[i];
  return false;
}

std::vector<Polynomial> monic_divisors(const Polynomial& p) {
  LinearFactorization f = linear_factorization(p);
  std::map<Rational, int> mult;
  for (const auto& r : f.roots) mult[r]++;
  std::vector<Polynomial> divs{Polynomial(1)};
  for (const auto& [root, m] : mult) {
    Polynomial lin(std::vector<Rational>{-root, 1});
    std::size_t count = divs.size();
    Polynomial pk(1);
    for (int e = 1; e <= m; ++e) {
      pk *= lin;
      for (std::size_t j = 0; j < count; ++j) divs.push_back(divs[j] * pk);
    }
  }
  if (f.remainder.degree() > 0) {
    std::size_t count = divs.size();
    for (std::size_t j = 0; j < count; ++j) divs.push_back(divs[j] * f.remainder);
  }
  std::sort(divs.begin(), divs.end(), poly_less);
  return divs;
}

}  // namespace cflab
