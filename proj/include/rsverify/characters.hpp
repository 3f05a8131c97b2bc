#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <vector>

#include "rsverify/coweights.hpp"
#include "rsverify/errors.hpp"
#include "rsverify/exactalg.hpp"

namespace rsv {

// Laplace expansion along the first row; entries may be any commutative ring.
template <class R>
R determinant(const std::vector<std::vector<R>>& m, const R& zero) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return one_like(zero);
  if (n == 1) return m[0][0];
  R out = zero;
  for (int j = 0; j < n; ++j) {
    if (is_zero(m[0][j])) continue;
    std::vector<std::vector<R>> minor;
    minor.reserve(n - 1);
    for (int i = 1; i < n; ++i) {
      std::vector<R> row;
      row.reserve(n - 1);
      for (int k = 0; k < n; ++k) if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    R term = m[0][j] * determinant(minor, zero);
    if (j % 2) out -= term;
    else out += term;
  }
  return out;
}

// h_k of the given Laurent monomials (each a SymLaurent); h_k = 0 for k < 0.
inline SymLaurent complete_homogeneous(int k, const std::vector<SymLaurent>& vars, int nvars) {
  if (k < 0) return SymLaurent(nvars);
  // h[j] = h_j(vars[0..i]) updated one variable at a time.
  std::vector<SymLaurent> h(k + 1, SymLaurent(nvars));
  h[0] = SymLaurent::constant(nvars, 1);
  for (const auto& x : vars) {
    for (int j = 1; j <= k; ++j) h[j] += x * h[j - 1];
  }
  return h[k];
}

inline std::vector<SymLaurent> plain_variables(int r) {
  std::vector<SymLaurent> xs;
  for (int i = 0; i < r; ++i) xs.push_back(SymLaurent::variable(r, i));
  return xs;
}

// Characters depend only on their arguments, so they are cached process-wide.
class CharacterCache {
 public:
  using Key = std::pair<int, std::vector<int>>;

  SymLaurent get_or_compute(const Key& k, const std::function<SymLaurent()>& make) {
    {
      std::lock_guard lock(mu_);
      auto it = cache_.find(k);
      if (it != cache_.end()) return it->second;
    }
    SymLaurent v = make();
    std::lock_guard lock(mu_);
    return cache_.emplace(k, std::move(v)).first->second;
  }

  static CharacterCache& instance(int which) {
    static CharacterCache caches[3];
    return caches[which];
  }

 private:
  std::mutex mu_;
  std::map<Key, SymLaurent> cache_;
};

// Schur polynomial in r variables by Jacobi-Trudi, twisted by the determinant
// when the last entry is negative.
inline SymLaurent schur(const Coweight& lambda, int r) {
  if (lambda.size() != r) throw structural_error("highest weight length differs from r");
  if (!is_gl_dominant(lambda)) throw domain_error("schur: weight is not GL-dominant");
  if (r == 0) return SymLaurent::constant(0, 1);
  return CharacterCache::instance(0).get_or_compute({r, lambda.e}, [&] {
    const int shift = lambda[r - 1];
    std::vector<int> mu(lambda.e);
    for (int& x : mu) x -= shift;
    int len = 0;
    while (len < r && mu[len] > 0) ++len;
    auto xs = plain_variables(r);
    int top = len ? mu[0] + len : 0;
    std::vector<SymLaurent> h;
    for (int k = 0; k <= top; ++k) h.push_back(complete_homogeneous(k, xs, r));
    auto H = [&](int k) { return k < 0 || k > top ? SymLaurent(r) : h[k]; };
    std::vector<std::vector<SymLaurent>> m(len, std::vector<SymLaurent>(len, SymLaurent(r)));
    for (int i = 0; i < len; ++i)
      for (int j = 0; j < len; ++j) m[i][j] = H(mu[i] - i + j);
    SymLaurent s = determinant(m, SymLaurent(r));
    if (shift != 0) s *= SymLaurent::monomial(Exponents(r, shift));
    return s;
  });
}

inline SymLaurent schur(const Coweight& lambda) { return schur(lambda, lambda.size()); }

// Independent check: sum over semistandard tableaux of shape lambda with
// entries in 1..r.
inline SymLaurent schur_oracle(const Coweight& lambda, int r) {
  if (lambda.size() != r) throw structural_error("highest weight length differs from r");
  for (int x : lambda.e) if (x < 0) throw domain_error("schur_oracle needs a partition");
  if (!is_gl_dominant(lambda)) throw domain_error("schur_oracle: not a partition");
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < lambda[i]; ++j) cells.emplace_back(i, j);
  std::vector<std::vector<int>> t(r);
  for (int i = 0; i < r; ++i) t[i].assign(lambda[i], 0);
  SymLaurent out(r);
  Exponents content(r, 0);
  std::function<void(std::size_t)> fill = [&](std::size_t idx) {
    if (idx == cells.size()) { out.add_term(content, 1); return; }
    auto [i, j] = cells[idx];
    int lo = 1;
    if (j > 0) lo = std::max(lo, t[i][j - 1]);
    if (i > 0) lo = std::max(lo, t[i - 1][j] + 1);
    for (int v = lo; v <= r; ++v) {
      t[i][j] = v;
      ++content[v - 1];
      fill(idx + 1);
      --content[v - 1];
    }
  };
  fill(0);
  return out;
}

// Type C Weyl character by the determinant ratio, divided exactly.
inline SymLaurent sp_character(const Coweight& lambda) {
  const int n = lambda.size();
  if (!is_g_dominant(lambda)) throw domain_error("sp_character: weight is not dominant");
  if (n == 0) return SymLaurent::constant(0, 1);
  return CharacterCache::instance(1).get_or_compute({n, lambda.e}, [&] {
    auto alternant = [&](const std::vector<int>& l) {
      std::vector<std::vector<SymLaurent>> m(n, std::vector<SymLaurent>(n, SymLaurent(n)));
      for (int i = 0; i < n; ++i) {
        int p = l[i] + n - i;
        for (int j = 0; j < n; ++j)
          m[i][j] = SymLaurent::variable(n, j, p) - SymLaurent::variable(n, j, -p);
      }
      return determinant(m, SymLaurent(n));
    };
    return divide_exact(alternant(lambda.e), alternant(std::vector<int>(n, 0)));
  });
}

// Independent check (Koike-Terada): sp_lambda = 1/2 det(h_{l_i-i+j} + h_{l_i-i-j+2})
// with h complete homogeneous in x_1^{+-1},...,x_n^{+-1}.
inline SymLaurent sp_character_oracle(const Coweight& lambda) {
  const int n = lambda.size();
  if (!is_g_dominant(lambda)) throw domain_error("sp_character_oracle: weight is not dominant");
  int len = 0;
  while (len < n && lambda[len] > 0) ++len;
  if (len == 0) return SymLaurent::constant(n, 1);
  std::vector<SymLaurent> xs;
  for (int i = 0; i < n; ++i) {
    xs.push_back(SymLaurent::variable(n, i));
    xs.push_back(SymLaurent::variable(n, i, -1));
  }
  int top = lambda[0] + len;
  std::vector<SymLaurent> h;
  for (int k = 0; k <= top; ++k) h.push_back(complete_homogeneous(k, xs, n));
  auto H = [&](int k) { return k < 0 || k > top ? SymLaurent(n) : h[k]; };
  std::vector<std::vector<SymLaurent>> m(len, std::vector<SymLaurent>(len, SymLaurent(n)));
  for (int i = 0; i < len; ++i)
    for (int j = 0; j < len; ++j) {
      int a = lambda[i] - (i + 1) + (j + 1);
      int b = lambda[i] - (i + 1) - (j + 1) + 2;
      m[i][j] = H(a) + H(b);
    }
  return VLaurent(Rational(1, 2)) * determinant(m, SymLaurent(n));
}

// Weyl dimension formula for Sp_2n.
inline Rational sp_dimension(const Coweight& lambda) {
  const int n = lambda.size();
  std::vector<Rational> l(n);
  for (int i = 0; i < n; ++i) l[i] = lambda[i] + n - i;  // lambda + rho
  Rational num = 1, den = 1;
  for (int i = 0; i < n; ++i) {
    num *= l[i];
    den *= n - i;
    for (int j = i + 1; j < n; ++j) {
      num *= (l[i] - l[j]) * (l[i] + l[j]);
      Rational ri = n - i, rj = n - j;
      den *= (ri - rj) * (ri + rj);
    }
  }
  return num / den;
}

inline SymLaurent so4_minuscule_character(const Coweight& lambda) {
  if (lambda == Coweight{1, 0}) return parse_sym("X1 + X2 + X1^-1 + X2^-1", 2);
  if (lambda == Coweight{1, 1}) return parse_sym("X1X2 + 1 + X1^-1X2^-1", 2);
  if (lambda == Coweight{1, -1}) return parse_sym("X1X2^-1 + 1 + X1^-1X2", 2);
  throw unsupported_error("so4_minuscule_character: " + lambda.to_string() + " is not one of e1, e1+e2, e1-e2");
}

// X_r = 0; requires no negative X_r exponents.
inline SymLaurent ginzburg_specialize(const SymLaurent& a) { return a.specialize_last_zero(); }

// Sum of monomials over the orbit of lambda under permutations and even sign changes.
inline SymLaurent orbit_sum(const Coweight& lambda) {
  const int n = lambda.size();
  if (!is_h_dominant(lambda)) throw domain_error("orbit_sum: weight is not H-dominant");
  std::vector<int> base(lambda.e);
  std::sort(base.begin(), base.end());
  std::map<Exponents, bool> seen;
  SymLaurent out(n);
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      if (__builtin_popcount(mask) % 2) continue;
      Exponents e(base);
      for (int i = 0; i < n; ++i) if (mask >> i & 1) e[i] = -e[i];
      if (seen.emplace(e, true).second) out.add_term(e, 1);
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

}  // namespace rsv
