#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cflab/rational.hpp"

namespace cflab {

/// Univariate polynomial in n over Q. Coefficients are stored from the
/// constant term upward with no trailing zeros, so the zero polynomial has an
/// empty coefficient list and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT: implicit by design
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  explicit Polynomial(std::vector<Rational> coeffs);

  /// The polynomial n.
  static Polynomial variable();
  /// c * n^k.
  static Polynomial monomial(const Rational& c, int k);
  /// Product of (n - r) over the given roots.
  static Polynomial from_roots(const std::vector<Rational>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  Rational leading() const;

  Rational eval(const Rational& x) const;
  Rational eval(long x) const { return eval(Rational(x)); }

  /// n -> p(n + j).
  Polynomial shift(const Rational& j) const;
  /// p(n + 1) - p(n).
  Polynomial forward_difference() const;
  Polynomial monic() const;
  Polynomial pow(unsigned e) const;
  /// Multiplies through by the least common denominator and divides by the
  /// integer content. The sign of the leading coefficient is preserved.
  std::vector<Integer> primitive_integer_form() const;
  /// Integer coefficients P and a positive integer d with p = P / d.
  std::pair<std::vector<Integer>, Integer> integer_form() const;

  /// Expanded form in descending powers, e.g. "3n^2+3n+1".
  std::string render() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void normalize();
  std::vector<Rational> c_;
};

/// Euclidean division a = q*b + r with deg r < deg b. Throws on b == 0.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Exact division; throws DomainError if b does not divide a.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

/// Monic gcd. Throws DomainError when both inputs are zero.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// Resultant of a and b over Q (zero if either is zero).
Rational resultant(const Polynomial& a, const Polynomial& b);

struct LinearFactorization {
  Rational unit;
  std::vector<Rational> roots;  // ascending, with multiplicity
  Polynomial remainder;         // monic, no rational roots
};

/// p = unit * prod(n - root) * remainder. Throws DomainError on zero input.
LinearFactorization linear_factorization(const Polynomial& p);

/// Monic divisors built from the rational roots and the atomic remainder,
/// sorted by degree and then by coefficients.
std::vector<Polynomial> monic_divisors(const Polynomial& p);

/// Strict weak order used for canonical sorting.
bool poly_less(const Polynomial& a, const Polynomial& b);

}  // namespace cflab
