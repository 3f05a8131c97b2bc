#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "rsverify/coweights.hpp"
#include "rsverify/exactalg.hpp"
#include "rsverify/rankin.hpp"
#include "rsverify/whittaker.hpp"

namespace rsv {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based stream: draw k of stream (seed, id) is splitmix64 of a mix of
// all three, so cases can be generated in any order or in parallel.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream) : key_(splitmix64(seed ^ splitmix64(stream + 0x5851f42d4c957f2dULL))) {}

  std::uint64_t next() { return splitmix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

  // Uniform in [lo, hi].
  int uniform(int lo, int hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next() % span);
  }

  // num/den with 1 <= |num| <= 7, 1 <= den <= 7.
  Rational nonzero_rational() {
    int num = uniform(1, 7) * (uniform(0, 1) ? 1 : -1);
    int den = uniform(1, 7);
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  // Distinct nonzero rationals.
  std::vector<Rational> distinct_rationals(int k) {
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < k) {
      Rational r = nonzero_rational();
      bool clash = false;
      for (const auto& s : out) clash = clash || s == r;
      if (!clash) out.push_back(r);
    }
    return out;
  }

  // Satake parameters for SO(2n+1): beta_i != +-1 and the multiset
  // {beta_i, beta_i^-1} has no repeats.
  std::vector<Rational> satake_beta(int n) {
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < n) {
      Rational b = nonzero_rational();
      if (b == 1 || b == -1) continue;
      bool clash = false;
      for (const auto& s : out) clash = clash || s == b || s == 1 / b;
      if (!clash) out.push_back(b);
    }
    return out;
  }

  Coweight g_dominant(int n, int bound) {
    std::vector<int> e(n);
    for (int& x : e) x = uniform(0, bound);
    std::sort(e.rbegin(), e.rend());
    return Coweight(e);
  }

  // Random finitely supported data on P+_G.
  WhittakerData data(int n, int max_support, int bound) {
    WhittakerData d(n);
    int s = uniform(1, max_support);
    for (int i = 0; i < s; ++i) {
      Coweight l = g_dominant(n, bound);
      d.set(l, d.at(l) + VLaurent::monomial(uniform(-3, 3), nonzero_rational()));
    }
    if (d.empty()) d.set(Coweight::zero(n), 1);
    return d;
  }

  EvalPoint point(int r) {
    EvalPoint p;
    p.x = distinct_rationals(r);
    do p.v = nonzero_rational(); while (p.v == 1 || p.v == -1);
    return p;
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace rsv
