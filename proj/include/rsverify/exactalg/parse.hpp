#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "rsverify/errors.hpp"
#include "rsverify/exactalg/sym_laurent.hpp"

namespace rsv {

namespace detail {

// Recursive-descent reader for expressions such as "q^2(X1+X2)(1+X1X2)".
// Juxtaposition multiplies; '/' divides by a nonzero rational constant;
// negative powers are allowed on monomials only.
class ExprParser {
 public:
  ExprParser(std::string_view text, int nvars) : s_(text), nvars_(nvars) {}

  SymLaurent parse() {
    SymLaurent out = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return out;
  }

 private:
  SymLaurent expr() {
    skip();
    SymLaurent acc(nvars_);
    bool negate = false;
    if (peek() == '+' || peek() == '-') { negate = peek() == '-'; ++pos_; }
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip();
      char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      SymLaurent t = term();
      if (c == '+') acc += t; else acc -= t;
    }
  }

  SymLaurent term() {
    SymLaurent acc = power();
    for (;;) {
      skip();
      char c = peek();
      if (c == '*') { ++pos_; acc *= power(); continue; }
      if (c == '/') {
        ++pos_;
        SymLaurent d = power();
        if (d.size() != 1 || !d.terms().begin()->second.is_constant() ||
            d.terms().begin()->first != Exponents(nvars_, 0))
          fail("division only by a nonzero rational constant");
        Rational r = d.terms().begin()->second.coeff(0);
        acc = VLaurent(Rational(1 / r)) * acc;
        continue;
      }
      if (c == '(' || std::isalnum(static_cast<unsigned char>(c))) { acc *= power(); continue; }
      return acc;
    }
  }

  SymLaurent power() {
    SymLaurent base = primary();
    skip();
    if (peek() != '^') return base;
    ++pos_;
    return base.pow(exponent());
  }

  // After '^': an integer, optionally signed, in parentheses or braces.
  int exponent() {
    skip();
    int sign = 1;
    if (peek() == '-') { sign = -1; ++pos_; }
    else if (peek() == '+') ++pos_;
    char close = 0;
    skip();
    if (peek() == '(' || peek() == '{') {
      close = peek() == '(' ? ')' : '}';
      ++pos_;
      skip();
      if (peek() == '-') { sign = -sign; ++pos_; }
    }
    int k = integer();
    if (close) { skip(); expect(close); }
    return sign * k;
  }

  SymLaurent primary() {
    skip();
    char c = peek();
    if (c == '(') {
      ++pos_;
      SymLaurent inner = expr();
      skip();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return SymLaurent::constant(nvars_, VLaurent(parse_rational(s_.substr(start, pos_ - start))));
    }
    if (c == 'v') { ++pos_; return SymLaurent::constant(nvars_, VLaurent::v_pow(1)); }
    if (c == 'q') { ++pos_; return SymLaurent::constant(nvars_, VLaurent::q_pow(1)); }
    if (c == 'X' || c == 'x') {
      ++pos_;
      // TeX order X^k_i is accepted as well as X_i^k.
      int k = 1;
      if (peek() == '^') { ++pos_; k = exponent(); }
      if (peek() == '_') ++pos_;
      int i = integer();
      if (i < 1 || i > nvars_) fail("variable index out of range");
      return SymLaurent::variable(nvars_, i - 1, k);
    }
    fail("unexpected character");
  }

  int integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  void skip() { while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_; }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw domain_error("parse error at offset " + std::to_string(pos_) + ": " + why + " in \"" + std::string(s_) + "\"");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int nvars_;
};

}  // namespace detail

inline SymLaurent parse_sym(std::string_view text, int nvars) {
  return detail::ExprParser(text, nvars).parse();
}

inline VLaurent parse_vlaurent(std::string_view text) {
  SymLaurent s = parse_sym(text, 0);
  return s.coeff({});
}

}  // namespace rsv
