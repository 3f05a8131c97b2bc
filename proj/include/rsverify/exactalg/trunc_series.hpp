#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <string>

#include "rsverify/errors.hpp"
#include "rsverify/exactalg/rational.hpp"
#include "rsverify/exactalg/sym_laurent.hpp"
#include "rsverify/exactalg/vlaurent.hpp"

namespace rsv {

// Order value for series that are exact polynomials in Y.
inline constexpr int kExactOrder = INT_MAX;

inline Rational one_like(const Rational&) { return 1; }
inline VLaurent one_like(const VLaurent&) { return VLaurent(1); }
inline SymLaurent one_like(const SymLaurent& z) { return SymLaurent::constant(z.nvars(), 1); }

/// Power series in Y with coefficients in C, known through Y^order.
/// Coefficients below `low` are zero by construction.
template <class C>
class TruncSeries {
 public:
  TruncSeries(C zero, int order, int low = 0) : zero_(std::move(zero)), low_(low), order_(order) {
    if (order != kExactOrder && order < low - 1) throw domain_error("truncation order below lower bound");
  }

  static TruncSeries constant(const C& c, int order = kExactOrder) {
    TruncSeries s(zero_of(c), order);
    s.set(0, c);
    return s;
  }

  bool exact() const { return order_ == kExactOrder; }
  int order() const { return order_; }
  int low() const { return low_; }
  const C& zero() const { return zero_; }
  const std::map<int, C>& terms() const { return terms_; }

  const C& coeff(int l) const {
    if (l > order_) throw domain_error("coefficient beyond truncation order");
    auto it = terms_.find(l);
    return it == terms_.end() ? zero_ : it->second;
  }

  void set(int l, C c) {
    if (l < low_) throw domain_error("coefficient below the lower bound");
    if (l > order_) return;
    if (is_zero(c)) terms_.erase(l);
    else terms_[l] = std::move(c);
  }
  void add(int l, const C& c) {
    if (l < low_) throw domain_error("coefficient below the lower bound");
    if (l > order_ || is_zero(c)) return;
    auto it = terms_.find(l);
    if (it == terms_.end()) { terms_.emplace(l, c); return; }
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
  }

  // Highest degree carrying a nonzero coefficient; low-1 when all vanish.
  int max_degree() const { return terms_.empty() ? low_ - 1 : terms_.rbegin()->first; }

  TruncSeries truncated(int order) const {
    TruncSeries out(zero_, std::min(order, order_), low_);
    for (const auto& [l, c] : terms_) out.set(l, c);
    return out;
  }

  // Multiply by Y^k.
  TruncSeries shifted(int k) const {
    TruncSeries out(zero_, exact() ? kExactOrder : order_ + k, low_ + k);
    for (const auto& [l, c] : terms_) out.set(l + k, c);
    return out;
  }

  TruncSeries scaled(const C& c) const {
    TruncSeries out(zero_, order_, low_);
    for (const auto& [l, x] : terms_) out.set(l, c * x);
    return out;
  }

  TruncSeries operator-() const { return scaled(-one_like(zero_)); }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries out(a.zero_, std::min(a.order_, b.order_), std::min(a.low_, b.low_));
    for (const auto& [l, c] : a.terms_) out.add(l, c);
    for (const auto& [l, c] : b.terms_) out.add(l, c);
    return out;
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    int order = kExactOrder;
    if (!a.exact()) order = std::min(order, a.order_ + b.low_);
    if (!b.exact()) order = std::min(order, b.order_ + a.low_);
    TruncSeries out(a.zero_, order, a.low_ + b.low_);
    for (const auto& [la, ca] : a.terms_)
      for (const auto& [lb, cb] : b.terms_)
        if (la + lb <= order) out.add(la + lb, ca * cb);
    return out;
  }

  // Equality through the common known range.
  friend bool agree(const TruncSeries& a, const TruncSeries& b) { return first_difference(a, b) == INT_MIN; }

  // Smallest degree where a and b differ within their common range, or INT_MIN.
  friend int first_difference(const TruncSeries& a, const TruncSeries& b) {
    int order = std::min(a.order_, b.order_);
    int lo = std::min(a.low_, b.low_);
    std::map<int, bool> degrees;
    for (const auto& [l, c] : a.terms_) if (l <= order) degrees[l] = true;
    for (const auto& [l, c] : b.terms_) if (l <= order) degrees[l] = true;
    for (const auto& [l, unused] : degrees)
      if (l >= lo && !(a.coeff(l) == b.coeff(l))) return l;
    return INT_MIN;
  }

  // Y = 1 collapse.  Only meaningful for polynomials; callers establish that.
  C sum_coefficients() const {
    C out = zero_;
    for (const auto& [l, c] : terms_) out += c;
    return out;
  }

  template <class F>
  auto map_coefficients(F&& f) const {
    using D = decltype(f(zero_));
    TruncSeries<D> out(f(zero_), order_, low_);
    for (const auto& [l, c] : terms_) out.set(l, f(c));
    return out;
  }

 private:
  static C zero_of(const C& c) {
    if constexpr (std::is_same_v<C, SymLaurent>) return SymLaurent(c.nvars());
    else return C();
  }

  C zero_;
  int low_;
  int order_;
  std::map<int, C> terms_;
};

template <class C>
TruncSeries<C> series_mul(const TruncSeries<C>& a, const TruncSeries<C>& b) { return a * b; }

// Inverse through Y^order (capped by the input's own order).
template <class C>
TruncSeries<C> series_invert(const TruncSeries<C>& a, int order) {
  if (a.low() < 0 && !a.terms().empty() && a.terms().begin()->first < 0)
    throw domain_error("series with a Laurent tail has no power-series inverse");
  const C one = one_like(a.zero());
  if (!(a.coeff(0) == one)) throw domain_error("constant coefficient is not 1");
  int T = std::min(order, a.order());
  TruncSeries<C> b(a.zero(), T);
  b.set(0, one);
  for (int k = 1; k <= T; ++k) {
    C acc = a.zero();
    for (const auto& [i, ai] : a.terms()) {
      if (i < 1) continue;
      if (i > k) break;
      const C& bk = b.coeff(k - i);
      if (!is_zero(bk)) acc += ai * bk;
    }
    b.set(k, -acc);
  }
  return b;
}

template <class C>
TruncSeries<C> series_invert(const TruncSeries<C>& a) {
  if (a.exact()) throw domain_error("inverting an exact polynomial needs an explicit order");
  return series_invert(a, a.order());
}

}  // namespace rsv
