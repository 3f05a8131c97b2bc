#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <vector>

#include "rsverify/errors.hpp"

namespace rsv {

struct Coweight {
  std::vector<int> e;

  Coweight() = default;
  explicit Coweight(std::vector<int> entries) : e(std::move(entries)) {}
  Coweight(std::initializer_list<int> entries) : e(entries) {}

  static Coweight zero(int n) { return Coweight(std::vector<int>(n, 0)); }
  // epsilon_i, one-based.
  static Coweight epsilon(int n, int i) {
    Coweight c = zero(n);
    c.e.at(i - 1) = 1;
    return c;
  }
  // mu_n = (1,...,1).
  static Coweight mu(int n) { return Coweight(std::vector<int>(n, 1)); }

  int size() const { return static_cast<int>(e.size()); }
  int operator[](int i) const { return e[i]; }

  friend Coweight operator+(Coweight a, const Coweight& b) {
    if (a.size() != b.size()) throw structural_error("coweight length mismatch");
    for (int i = 0; i < a.size(); ++i) a.e[i] += b.e[i];
    return a;
  }
  friend Coweight operator-(Coweight a, const Coweight& b) {
    if (a.size() != b.size()) throw structural_error("coweight length mismatch");
    for (int i = 0; i < a.size(); ++i) a.e[i] -= b.e[i];
    return a;
  }
  friend Coweight operator*(int k, Coweight a) {
    for (int& x : a.e) x *= k;
    return a;
  }
  friend auto operator<=>(const Coweight&, const Coweight&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (int i = 0; i < size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    return s + ")";
  }
};

enum class Cone { GL, G, H };

inline const char* cone_name(Cone c) {
  switch (c) {
    case Cone::GL: return "GL";
    case Cone::G: return "G";
    case Cone::H: return "H";
  }
  return "?";
}

inline bool in_cone(const Coweight& l, Cone c) {
  const int n = l.size();
  switch (c) {
    case Cone::GL:
      for (int i = 0; i + 1 < n; ++i) if (l[i] < l[i + 1]) return false;
      return true;
    case Cone::G:
      if (!in_cone(l, Cone::GL)) return false;
      return n == 0 || l[n - 1] >= 0;
    case Cone::H:
      for (int i = 0; i + 2 < n; ++i) if (l[i] < l[i + 1]) return false;
      return n < 2 || l[n - 2] >= std::abs(l[n - 1]);
  }
  return false;
}

inline bool is_gl_dominant(const Coweight& l) { return in_cone(l, Cone::GL); }
inline bool is_g_dominant(const Coweight& l) { return in_cone(l, Cone::G); }
inline bool is_h_dominant(const Coweight& l) { return in_cone(l, Cone::H); }

inline int sup_norm(const Coweight& l) {
  int m = 0;
  for (int x : l.e) m = std::max(m, std::abs(x));
  return m;
}

inline int trace(const Coweight& l) {
  int t = 0;
  for (int x : l.e) t += x;
  return t;
}

inline Coweight tilde(Coweight l) {
  if (l.size() > 0) l.e.back() = -l.e.back();
  return l;
}

// Scan of [-b, b]^n, filtered by the cone, in increasing lexicographic order.
inline std::vector<Coweight> enumerate_cone(Cone tag, int n, int norm_bound) {
  if (n < 1) throw domain_error("n must be positive");
  if (norm_bound < 0) throw domain_error("negative norm bound");
  std::vector<Coweight> out;
  std::vector<int> cur(n, -norm_bound);
  for (;;) {
    Coweight c(cur);
    if (in_cone(c, tag)) out.push_back(c);
    int i = n - 1;
    while (i >= 0 && cur[i] == norm_bound) cur[i--] = -norm_bound;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

inline long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline long long dim_formula(int n, int m, int a) {
  if (n < 1) throw domain_error("n must be positive");
  if (m < a) return 0;
  int k = m - a;
  return binomial(n + k / 2, n) + binomial(n + (k + 1) / 2 - 1, n);
}

inline long long basis_cardinality(int n, int m, int a) {
  if (n < 1) throw domain_error("n must be positive");
  if (m < a) return 0;
  int k = m - a;
  if (k % 2 == 0) return static_cast<long long>(enumerate_cone(Cone::H, n, k / 2).size());
  return 2 * static_cast<long long>(enumerate_cone(Cone::G, n, (k - 1) / 2).size());
}

}  // namespace rsv
