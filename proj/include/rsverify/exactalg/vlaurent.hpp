#pragma once

#include <map>
#include <sstream>
#include <string>

#include "rsverify/errors.hpp"
#include "rsverify/exactalg/rational.hpp"

namespace rsv {

// Laurent polynomial in v over Q.  q = v^2.
class VLaurent {
 public:
  using Terms = std::map<int, Rational>;

  VLaurent() = default;
  VLaurent(const Rational& c) { if (!rsv::is_zero(c)) terms_.emplace(0, c); }
  VLaurent(long c) : VLaurent(Rational(c)) {}
  VLaurent(int c) : VLaurent(Rational(c)) {}

  static VLaurent monomial(int exponent, const Rational& c = 1) {
    VLaurent out;
    if (!rsv::is_zero(c)) out.terms_.emplace(exponent, c);
    return out;
  }
  static VLaurent v_pow(int e) { return monomial(e); }
  static VLaurent q_pow(int e) { return monomial(2 * e); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  int min_exponent() const {
    if (is_zero()) throw domain_error("min_exponent of zero");
    return terms_.begin()->first;
  }
  int max_exponent() const {
    if (is_zero()) throw domain_error("max_exponent of zero");
    return terms_.rbegin()->first;
  }
  bool is_constant() const { return is_zero() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1; }

  void add_term(int e, const Rational& c) {
    if (rsv::is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (rsv::is_zero(it->second)) terms_.erase(it);
    }
  }

  VLaurent& operator+=(const VLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  VLaurent& operator-=(const VLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  VLaurent operator-() const {
    VLaurent out(*this);
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }
  friend VLaurent operator+(VLaurent a, const VLaurent& b) { return a += b; }
  friend VLaurent operator-(VLaurent a, const VLaurent& b) { return a -= b; }
  friend VLaurent operator*(const VLaurent& a, const VLaurent& b) {
    VLaurent out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
  }
  VLaurent& operator*=(const VLaurent& o) { return *this = *this * o; }
  friend bool operator==(const VLaurent& a, const VLaurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const VLaurent& a, const VLaurent& b) { return !(a == b); }

  VLaurent pow(int k) const {
    if (k < 0) {
      if (terms_.size() != 1) throw domain_error("negative power of a non-monomial");
      auto [e, c] = *terms_.begin();
      return monomial(e * k, rational_pow(c, k));
    }
    VLaurent out(1), base(*this);
    while (k > 0) {
      if (k & 1) out *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return out;
  }

  Rational evaluate(const Rational& v) const {
    if (rsv::is_zero(v) && !is_zero() && min_exponent() < 0)
      throw domain_error("v = 0 substituted into a negative power");
    Rational out = 0;
    for (const auto& [e, c] : terms_) out += c * rational_pow(v, e);
    return out;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      Rational c = it->second;
      int e = it->first;
      if (!first) os << (sgn(c) < 0 ? " - " : " + ");
      else if (sgn(c) < 0) os << "-";
      first = false;
      Rational a = abs(c);
      if (e == 0) { os << a.get_str(); continue; }
      if (a != 1) os << a.get_str() << "*";
      os << "v";
      if (e != 1) os << "^" << e;
    }
    return os.str();
  }

 private:
  Terms terms_;
};

inline bool is_zero(const VLaurent& x) { return x.is_zero(); }

// Exact quotient a/b; throws internal_error when b does not divide a.
inline VLaurent divide_exact(const VLaurent& a, const VLaurent& b) {
  if (b.is_zero()) throw domain_error("division by zero VLaurent");
  if (a.is_zero()) return {};
  if (b.size() == 1) {
    auto [eb, cb] = *b.terms().begin();
    VLaurent out;
    for (const auto& [e, c] : a.terms()) out.add_term(e - eb, c / cb);
    return out;
  }
  const int lo = a.min_exponent() - b.min_exponent();
  VLaurent rem = a, quot;
  const int eb = b.max_exponent();
  const Rational cb = b.terms().rbegin()->second;
  while (!rem.is_zero()) {
    int e = rem.max_exponent() - eb;
    if (e < lo) throw internal_error("inexact VLaurent division");
    VLaurent t = VLaurent::monomial(e, rem.terms().rbegin()->second / cb);
    quot += t;
    rem -= t * b;
  }
  return quot;
}

}  // namespace rsv
