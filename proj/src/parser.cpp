#include "cflab/parser.hpp"

#include <cctype>
#include <string>

#include "cflab/errors.hpp"

namespace cflab {

namespace {

constexpr long kMaxExponent = 64;

class Parser {
 public:
  Parser(std::string_view text, bool allow_poly_division)
      : s_(text), allow_poly_division_(allow_poly_division) {}

  RationalFunction parse() {
    skip_ws();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    RationalFunction r = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return r;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  static bool is_open(char c) { return c == '(' || c == '[' || c == '{'; }
  static char closer(char c) { return c == '(' ? ')' : c == '[' ? ']' : '}'; }

  RationalFunction expr() {
    RationalFunction acc = term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc = acc + term();
      } else if (c == '-') {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction term() {
    RationalFunction acc = unary();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (c == '/') {
        std::size_t at = pos_++;
        RationalFunction d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        if (!allow_poly_division_ && d.num().degree() > 0)
          throw ParseError("division by a non-constant expression", at);
        acc = acc / d;
      } else if (c == 'n' || is_open(c)) {
        acc = acc * unary();
      } else {
        return acc;
      }
    }
  }

  RationalFunction unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  RationalFunction power() {
    RationalFunction base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("exponent must be a nonnegative integer literal", start);
    if (pos_ - start > 3) throw ParseError("exponent exceeds 64", start);
    long e = std::stol(std::string(s_.substr(start, pos_ - start)));
    if (e > kMaxExponent) throw ParseError("exponent exceeds 64", start);
    RationalFunction r(Polynomial(1));
    for (long i = 0; i < e; ++i) r = r * base;
    return r;
  }

  RationalFunction primary() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RationalFunction(Polynomial(Rational(Integer(std::string(s_.substr(start, pos_ - start)), 10))));
    }
    if (c == 'n') {
      ++pos_;
      if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
        throw ParseError("unknown identifier", pos_ - 1);
      return RationalFunction(Polynomial::variable());
    }
    if (is_open(c)) {
      std::size_t open = pos_++;
      RationalFunction inner = expr();
      if (peek() != closer(c)) throw ParseError(std::string("expected '") + closer(c) + "'", pos_ < s_.size() ? pos_ : open);
      ++pos_;
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') throw ParseError("unknown identifier", pos_);
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  bool allow_poly_division_;
};

}  // namespace

Polynomial parse_poly(std::string_view text) {
  RationalFunction r = Parser(text, false).parse();
  return r.num() * Polynomial(1 / r.den().leading());
}

RationalFunction parse_ratfun(std::string_view text) { return Parser(text, true).parse(); }

}  // namespace cflab
