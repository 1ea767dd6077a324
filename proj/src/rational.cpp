#include "cflab/rational.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "cflab/errors.hpp"

namespace cflab {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

std::size_t parse_integer(std::string_view text, std::size_t pos, Integer& out) {
  std::size_t start = pos;
  bool neg = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    neg = text[pos] == '-';
    ++pos;
  }
  std::size_t digits_start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits_start) throw ParseError("expected digits", start);
  out = Integer(std::string(text.substr(digits_start, pos - digits_start)), 10);
  if (neg) out = -out;
  return pos;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  Integer num, den = 1;
  pos = parse_integer(text, pos, num);
  if (pos < text.size() && text[pos] == '/') {
    std::size_t slash = pos;
    pos = parse_integer(text, pos + 1, den);
    if (den == 0) throw ParseError("zero denominator", slash + 1);
  }
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw ParseError("trailing characters in rational", pos);
  return make_rational(num, den);
}

std::string to_string(const Integer& x) { return x.get_str(10); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str(10);
  return x.get_num().get_str(10) + "/" + x.get_den().get_str(10);
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

bool is_nonpositive_integer(const Rational& x) { return x.get_den() == 1 && x <= 0; }

Rational pochhammer(const Rational& a, long k) {
  if (k < 0) throw DomainError("pochhammer: negative length");
  Rational r = 1;
  Rational x = a;
  for (long i = 0; i < k; ++i) {
    r *= x;
    x += 1;
  }
  return r;
}

Rational double_factorial(long k) {
  if (k < -3) throw DomainError("double_factorial: argument below -3");
  if (k == -3) return Rational(-1);
  if (k == -1 || k == 0) return Rational(1);
  Integer r = 1;
  for (long i = k; i > 1; i -= 2) r *= i;
  return Rational(r);
}

Integer factorial(long n) {
  if (n < 0) throw DomainError("factorial: negative argument");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

namespace {

Integer pollard_rho(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return Integer(2);
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto f = [&](const Integer& v) {
      Integer t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      Integer diff = x - y;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void factor_into(Integer n, std::map<Integer, int>& out) {
  static const unsigned small_primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (unsigned p : small_primes) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out[Integer(p)]++;
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
    out[n]++;
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<Integer, int>> factorize(const Integer& n) {
  if (n == 0) throw DomainError("factorize: zero");
  std::map<Integer, int> acc;
  Integer m = abs(n);
  if (m != 1) factor_into(m, acc);
  return {acc.begin(), acc.end()};
}

std::vector<Integer> positive_divisors(const Integer& n) {
  std::vector<Integer> divs{Integer(1)};
  for (const auto& [p, e] : factorize(n)) {
    std::size_t count = divs.size();
    Integer pk = 1;
    for (int i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < count; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace cflab
