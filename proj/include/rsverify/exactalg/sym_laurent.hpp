#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "rsverify/errors.hpp"
#include "rsverify/exactalg/vlaurent.hpp"

namespace rsv {

using Exponents = std::vector<int>;

// Laurent polynomial in X1..Xr with VLaurent coefficients.  Terms are kept in
// lexicographic order of exponent tuples; zero coefficients are never stored.
class SymLaurent {
 public:
  using Terms = std::map<Exponents, VLaurent>;

  explicit SymLaurent(int nvars = 0) : nvars_(nvars) {
    if (nvars < 0) throw structural_error("negative variable count");
  }

  static SymLaurent constant(int nvars, const VLaurent& c) {
    SymLaurent out(nvars);
    out.add_term(Exponents(nvars, 0), c);
    return out;
  }
  static SymLaurent monomial(const Exponents& e, const VLaurent& c = VLaurent(1)) {
    SymLaurent out(static_cast<int>(e.size()));
    out.add_term(e, c);
    return out;
  }
  // X_{i+1}; i is zero-based.
  static SymLaurent variable(int nvars, int i, int power = 1) {
    if (i < 0 || i >= nvars) throw structural_error("variable index out of range");
    Exponents e(nvars, 0);
    e[i] = power;
    return monomial(e);
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  VLaurent coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? VLaurent() : it->second;
  }

  void add_term(const Exponents& e, const VLaurent& c) {
    if (static_cast<int>(e.size()) != nvars_) throw structural_error("exponent length mismatch");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  SymLaurent& operator+=(const SymLaurent& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SymLaurent& operator-=(const SymLaurent& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  SymLaurent operator-() const {
    SymLaurent out(*this);
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }
  friend SymLaurent operator+(SymLaurent a, const SymLaurent& b) { return a += b; }
  friend SymLaurent operator-(SymLaurent a, const SymLaurent& b) { return a -= b; }
  friend SymLaurent operator*(const SymLaurent& a, const SymLaurent& b) {
    a.check(b);
    SymLaurent out(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  SymLaurent& operator*=(const SymLaurent& o) { return *this = *this * o; }
  friend SymLaurent operator*(const VLaurent& c, const SymLaurent& a) {
    SymLaurent out(a.nvars_);
    if (c.is_zero()) return out;
    for (const auto& [e, x] : a.terms_) out.add_term(e, c * x);
    return out;
  }
  friend SymLaurent operator*(const SymLaurent& a, const VLaurent& c) { return c * a; }
  friend bool operator==(const SymLaurent& a, const SymLaurent& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const SymLaurent& a, const SymLaurent& b) { return !(a == b); }

  SymLaurent pow(int k) const {
    if (k < 0) {
      if (terms_.size() != 1) throw domain_error("negative power of a non-monomial");
      const auto& [e, c] = *terms_.begin();
      Exponents f(e);
      for (int& x : f) x *= k;
      return monomial(f, c.pow(k));
    }
    SymLaurent out = constant(nvars_, 1), base(*this);
    while (k > 0) {
      if (k & 1) out *= base;
      k >>= 1;
      if (k) base *= base;
    }
    return out;
  }

  // Apply an exponent map term by term (used for permutations and inversions).
  template <class F>
  SymLaurent transform_exponents(F&& f) const {
    SymLaurent out(nvars_);
    for (const auto& [e, c] : terms_) out.add_term(f(e), c);
    return out;
  }

  SymLaurent swap_vars(int i, int j) const {
    return transform_exponents([&](Exponents e) { std::swap(e[i], e[j]); return e; });
  }
  SymLaurent invert_vars(const std::vector<int>& which) const {
    return transform_exponents([&](Exponents e) { for (int i : which) e[i] = -e[i]; return e; });
  }
  SymLaurent invert_all() const {
    return transform_exponents([](Exponents e) { for (int& x : e) x = -x; return e; });
  }

  bool is_symmetric() const {
    for (int i = 0; i + 1 < nvars_; ++i)
      if (swap_vars(i, i + 1) != *this) return false;
    return true;
  }

  bool is_in_S0() const {
    if (!is_symmetric()) return false;
    if (nvars_ >= 2 && invert_vars({nvars_ - 2, nvars_ - 1}) != *this) return false;
    return true;
  }

  // Substitution X_i -> c X_i for all i.
  SymLaurent scale_vars(const VLaurent& c) const {
    SymLaurent out(nvars_);
    for (const auto& [e, x] : terms_) {
      int d = 0;
      for (int k : e) d += k;
      out.add_term(e, x * c.pow(d));
    }
    return out;
  }

  bool is_homogeneous(int degree) const {
    for (const auto& [e, c] : terms_) {
      int d = 0;
      for (int k : e) d += k;
      if (d != degree) return false;
    }
    return true;
  }

  int min_exponent(int var) const {
    if (is_zero()) throw domain_error("min_exponent of zero");
    int m = terms_.begin()->first[var];
    for (const auto& [e, c] : terms_) m = std::min(m, e[var]);
    return m;
  }
  int max_exponent(int var) const {
    if (is_zero()) throw domain_error("max_exponent of zero");
    int m = terms_.begin()->first[var];
    for (const auto& [e, c] : terms_) m = std::max(m, e[var]);
    return m;
  }
  int min_total_degree() const {
    if (is_zero()) throw domain_error("min_total_degree of zero");
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      int d = 0;
      for (int k : e) d += k;
      m = first ? d : std::min(m, d);
      first = false;
    }
    return m;
  }

  // Keep only terms with X_r-exponent 0, dropping the last variable.
  SymLaurent specialize_last_zero() const {
    if (nvars_ == 0) throw structural_error("no variable to specialize");
    SymLaurent out(nvars_ - 1);
    for (const auto& [e, c] : terms_) {
      if (e.back() < 0) throw domain_error("negative exponent in the specialized variable");
      if (e.back() == 0) out.add_term(Exponents(e.begin(), e.end() - 1), c);
    }
    return out;
  }

  // Coefficient of X_r^k as a polynomial in the first r-1 variables.
  SymLaurent slice_last(int k) const {
    if (nvars_ == 0) throw structural_error("no variable to slice");
    SymLaurent out(nvars_ - 1);
    for (const auto& [e, c] : terms_)
      if (e.back() == k) out.add_term(Exponents(e.begin(), e.end() - 1), c);
    return out;
  }

  Rational evaluate(const std::vector<Rational>& point, const Rational& v) const {
    if (static_cast<int>(point.size()) != nvars_) throw structural_error("evaluation point has wrong length");
    std::vector<std::map<int, Rational>> powers(nvars_);
    auto power = [&](int i, int e) -> const Rational& {
      auto it = powers[i].find(e);
      if (it != powers[i].end()) return it->second;
      if (rsv::is_zero(point[i]) && e < 0) throw domain_error("zero substituted into a negative power");
      return powers[i].emplace(e, rational_pow(point[i], e)).first->second;
    };
    Rational out = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c.evaluate(v);
      for (int i = 0; i < nvars_ && !rsv::is_zero(t); ++i) t *= power(i, e[i]);
      out += t;
    }
    return out;
  }

  // Substitute numbers for the X's only, leaving v symbolic.
  VLaurent evaluate_x(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw structural_error("evaluation point has wrong length");
    VLaurent out;
    for (const auto& [e, c] : terms_) {
      Rational t = 1;
      for (int i = 0; i < nvars_; ++i) {
        if (rsv::is_zero(point[i]) && e[i] < 0) throw domain_error("zero substituted into a negative power");
        t *= rational_pow(point[i], e[i]);
      }
      out += VLaurent(t) * c;
    }
    return out;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      const auto& [e, c] = *it;
      bool unit = c.is_one();
      bool plain = true;
      for (int k : e) plain = plain && k == 0;
      if (!unit || plain) os << (c.size() > 1 ? "(" + c.to_string() + ")" : c.to_string());
      bool need_star = !unit || plain;
      for (int i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (need_star) os << "*";
        need_star = true;
        os << "X" << i + 1;
        if (e[i] != 1) os << "^" << e[i];
      }
    }
    return os.str();
  }

 private:
  void check(const SymLaurent& o) const {
    if (nvars_ != o.nvars_) throw structural_error("variable-count mismatch");
  }

  int nvars_;
  Terms terms_;
};

inline bool is_zero(const SymLaurent& x) { return x.is_zero(); }

// Exact quotient a/b by lex leading terms.  The quotient of an exact Laurent
// division lives in the per-variable box [min a - min b, max a - max b], which
// bounds the loop; leaving it means b does not divide a.
inline SymLaurent divide_exact(const SymLaurent& a, const SymLaurent& b) {
  if (a.nvars() != b.nvars()) throw structural_error("variable-count mismatch");
  if (b.is_zero()) throw domain_error("division by zero");
  SymLaurent quot(a.nvars());
  if (a.is_zero()) return quot;
  const int r = a.nvars();
  std::vector<int> lo(r), hi(r);
  for (int i = 0; i < r; ++i) {
    lo[i] = a.min_exponent(i) - b.min_exponent(i);
    hi[i] = a.max_exponent(i) - b.max_exponent(i);
  }
  const auto& [eb, cb] = *b.terms().rbegin();
  SymLaurent rem = a;
  Exponents e(r);
  while (!rem.is_zero()) {
    const auto& [er, cr] = *rem.terms().rbegin();
    for (int i = 0; i < r; ++i) {
      e[i] = er[i] - eb[i];
      if (e[i] < lo[i] || e[i] > hi[i]) throw internal_error("inexact SymLaurent division");
    }
    SymLaurent t = SymLaurent::monomial(e, divide_exact(cr, cb));
    quot += t;
    rem -= t * b;
  }
  return quot;
}

inline SymLaurent sym_add(const SymLaurent& a, const SymLaurent& b) { return a + b; }
inline SymLaurent sym_mul(const SymLaurent& a, const SymLaurent& b) { return a * b; }

}  // namespace rsv
