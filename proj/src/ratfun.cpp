#include "cflab/ratfun.hpp"

#include "cflab/errors.hpp"

namespace cflab {

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Polynomial();
    den_ = Polynomial(1);
    return;
  }
  Polynomial g = poly_gcd(num, den);
  Polynomial n = exact_div(num, g), d = exact_div(den, g);
  Rational lc = d.leading();
  num_ = n * Polynomial(1 / lc);
  den_ = d * Polynomial(1 / lc);
}

Rational RationalFunction::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d == 0) throw DomainError("rational function evaluated at a pole " + to_string(x));
  return num_.eval(x) / d;
}

RationalFunction RationalFunction::shift(const Rational& j) const {
  RationalFunction r;
  r.num_ = num_.shift(j);
  r.den_ = den_.shift(j);
  return r;
}

std::string RationalFunction::render() const {
  if (den_ == Polynomial(1)) return num_.render();
  return "(" + num_.render() + ")/(" + den_.render() + ")";
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DomainError("division by zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

}  // namespace cflab
