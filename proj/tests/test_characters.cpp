#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "rsverify/characters.hpp"
#include "rsverify/whittaker.hpp"
#include "test_helpers.hpp"

using namespace rsv;
using rsvtest::P;

namespace {

// Exact numeric determinant by Gaussian elimination over Q.
Rational numeric_det(std::vector<std::vector<Rational>> m) {
  const int n = static_cast<int>(m.size());
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) { std::swap(m[p], m[c]); det = -det; }
    det *= m[c][c];
    for (int i = c + 1; i < n; ++i) {
      Rational f = m[i][c] / m[c][c];
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

// Bialternant a_{lambda+delta}/a_delta at a point with distinct coordinates.
Rational schur_at(const std::vector<int>& l, const std::vector<Rational>& x) {
  const int r = static_cast<int>(x.size());
  std::vector<std::vector<Rational>> a(r, std::vector<Rational>(r)), d = a;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      a[i][j] = rational_pow(x[j], l[i] + r - 1 - i);
      d[i][j] = rational_pow(x[j], r - 1 - i);
    }
  return numeric_det(a) / numeric_det(d);
}

// Type C ratio at a generic numeric point.
Rational sp_at(const std::vector<int>& l, const std::vector<Rational>& x) {
  const int n = static_cast<int>(x.size());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n)), d = a;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int p = l[i] + n - i, p0 = n - i;
      a[i][j] = rational_pow(x[j], p) - rational_pow(x[j], -p);
      d[i][j] = rational_pow(x[j], p0) - rational_pow(x[j], -p0);
    }
  return numeric_det(a) / numeric_det(d);
}

std::vector<std::vector<int>> partitions(int r, int maxpart) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int top) {
    if (static_cast<int>(cur.size()) == r) { out.push_back(cur); return; }
    for (int x = 0; x <= top; ++x) {
      cur.push_back(x);
      rec(x);
      cur.pop_back();
    }
  };
  rec(maxpart);
  return out;
}

const std::vector<Rational> kPoint = {Rational(2), Rational(-3), Rational(5, 7), Rational(11, 3)};

}  // namespace

TEST(Schur, Examples) {
  EXPECT_EQ(schur(Coweight::zero(3)), SymLaurent::constant(3, 1));
  EXPECT_EQ(schur(Coweight{1, 0}), P("X1 + X2", 2));
  EXPECT_EQ(schur(Coweight::mu(3)), P("X1X2X3", 3));
  EXPECT_EQ(schur(Coweight{2, 1}), P("X1^2X2 + X1X2^2", 2));
  EXPECT_EQ(schur(Coweight{2, 0}), P("X1^2 + X1X2 + X2^2", 2));
  EXPECT_THROW(schur(Coweight{0, 1}), domain_error);
}

TEST(Schur, EqualsTableauOracle) {
  for (int r = 1; r <= 4; ++r)
    for (const auto& l : partitions(r, 3)) {
      Coweight c(l);
      EXPECT_EQ(schur(c, r), schur_oracle(c, r)) << c.to_string();
    }
}

TEST(Schur, EqualsBialternantAtPoints) {
  for (int r = 1; r <= 4; ++r) {
    std::vector<Rational> x(kPoint.begin(), kPoint.begin() + r);
    for (const auto& l : partitions(r, 3))
      EXPECT_EQ(schur(Coweight(l), r).evaluate(x, 1), schur_at(l, x)) << Coweight(l).to_string();
  }
}

TEST(Schur, LaurentExtensionIsDeterminantTwist) {
  for (const auto& l : partitions(3, 3))
    for (int s = -2; s <= 2; ++s) {
      std::vector<int> shifted = l;
      for (int& x : shifted) x -= s;
      SymLaurent det = SymLaurent::monomial(Exponents(3, -s));
      EXPECT_EQ(schur(Coweight(shifted), 3), det * schur(Coweight(l), 3));
    }
}

TEST(Schur, IsSymmetricAndHomogeneous) {
  for (const auto& l : partitions(3, 3)) {
    SymLaurent s = schur(Coweight(l), 3);
    EXPECT_TRUE(s.is_symmetric());
    EXPECT_TRUE(s.is_homogeneous(trace(Coweight(l))));
  }
}

TEST(Symplectic, Examples) {
  EXPECT_EQ(sp_character(Coweight::zero(2)), SymLaurent::constant(2, 1));
  EXPECT_EQ(sp_character(Coweight{1}), P("X1 + X1^-1", 1));
  EXPECT_EQ(sp_character(Coweight{1, 0}).evaluate({1, 1}, 1), 4);
  EXPECT_EQ(sp_character(Coweight{1, 0}).evaluate({2, 3}, 1), Rational(35, 6));
  EXPECT_THROW(sp_character(Coweight{1, -1}), domain_error);
}

TEST(Symplectic, DivisionIsExactAndMatchesKoikeTerada) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& l : partitions(n, n == 3 ? 2 : 3)) {
      Coweight c(l);
      SymLaurent s;
      ASSERT_NO_THROW(s = sp_character(c)) << c.to_string();
      EXPECT_EQ(s, sp_character_oracle(c)) << c.to_string();
      EXPECT_TRUE(s.is_in_S0());
      for (int i = 0; i < n; ++i) EXPECT_EQ(s.invert_vars({i}), s);
    }
}

TEST(Symplectic, WeylDimensionAtAllOnes) {
  for (int n = 1; n <= 3; ++n)
    for (const auto& l : partitions(n, 3)) {
      Coweight c(l);
      EXPECT_EQ(sp_character(c).evaluate(std::vector<Rational>(n, 1), 1), sp_dimension(c)) << c.to_string();
    }
  EXPECT_EQ(sp_dimension(Coweight{1, 0}), 4);
  EXPECT_EQ(sp_dimension(Coweight{1, 1}), 5);
  EXPECT_EQ(sp_dimension(Coweight{2, 0}), 10);
}

TEST(Symplectic, NumericRatioAgrees) {
  for (int n = 1; n <= 3; ++n) {
    std::vector<Rational> x(kPoint.begin(), kPoint.begin() + n);
    for (const auto& l : partitions(n, 3)) {
      EXPECT_EQ(sp_character(Coweight(l)).evaluate(x, 1), sp_at(l, x));
      EXPECT_EQ(sp_character_at(Coweight(l), x), sp_at(l, x));
    }
  }
  // Singular point: the numeric ratio degenerates and the symbolic value is used.
  EXPECT_EQ(sp_character_at(Coweight{1, 0}, {1, 1}), 4);
}

TEST(Minuscule, So4Characters) {
  EXPECT_EQ(so4_minuscule_character(Coweight{1, 0}), P("X1 + X2 + X1^-1 + X2^-1", 2));
  EXPECT_EQ(so4_minuscule_character(Coweight{1, 1}), P("X1X2 + 1 + X1^-1X2^-1", 2));
  EXPECT_EQ(so4_minuscule_character(Coweight{1, -1}), P("X1X2^-1 + 1 + X1^-1X2", 2));
  EXPECT_THROW(so4_minuscule_character(Coweight{2, 0}), unsupported_error);
  for (const auto& l : {Coweight{1, 0}, Coweight{1, 1}, Coweight{1, -1}})
    EXPECT_TRUE(so4_minuscule_character(l).is_in_S0()) << l.to_string();
  EXPECT_FALSE(P("X1 + X2", 2).is_in_S0());
}

TEST(Minuscule, SymmetrizedPolynomialsAreInS0) {
  Rng rng(7, 0);
  for (int t = 0; t < 20; ++t) {
    SymLaurent f = rsvtest::random_sym(rng, 3, 3, 2);
    // Sum over permutations and even sign changes, built by hand.
    SymLaurent s(3);
    std::vector<int> perm = {0, 1, 2};
    do {
      SymLaurent g = f.transform_exponents([&](const Exponents& e) {
        return Exponents{e[perm[0]], e[perm[1]], e[perm[2]]};
      });
      s += g + g.invert_vars({0, 1}) + g.invert_vars({0, 2}) + g.invert_vars({1, 2});
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_TRUE(s.is_in_S0());
  }
}

TEST(Ginzburg, Specialization) {
  EXPECT_EQ(ginzburg_specialize(schur(Coweight{1, 0, 0})), P("X1 + X2", 2));
  EXPECT_TRUE(ginzburg_specialize(schur(Coweight{1, 1, 1})).is_zero());
  EXPECT_EQ(ginzburg_specialize(SymLaurent::constant(2, 1)), SymLaurent::constant(1, 1));
  EXPECT_THROW(ginzburg_specialize(P("X2^-1", 2)), domain_error);
}

TEST(Ginzburg, SchurBranching) {
  for (int r = 2; r <= 4; ++r)
    for (const auto& l : partitions(r, 3)) {
      SymLaurent got = ginzburg_specialize(schur(Coweight(l), r));
      if (l.back() > 0) {
        EXPECT_TRUE(got.is_zero());
      } else {
        std::vector<int> head(l.begin(), l.end() - 1);
        EXPECT_EQ(got, schur(Coweight(head), r - 1));
      }
    }
}

TEST(OrbitSum, Examples) {
  EXPECT_EQ(orbit_sum(Coweight::zero(2)), SymLaurent::constant(2, 1));
  EXPECT_EQ(orbit_sum(Coweight{1, 0}), P("X1 + X2 + X1^-1 + X2^-1", 2));
  // W(D_2) has no single sign changes: (1,1) and (1,-1) lie in different orbits.
  EXPECT_EQ(orbit_sum(Coweight{1, 1}), P("X1X2 + X1^-1X2^-1", 2));
  EXPECT_EQ(orbit_sum(Coweight{1, -1}), P("X1X2^-1 + X1^-1X2", 2));
  EXPECT_THROW(orbit_sum(Coweight{0, 1}), domain_error);
}

TEST(OrbitSum, MatchesClosureUnderGenerators) {
  for (int n = 2; n <= 3; ++n)
    for (const auto& l : enumerate_cone(Cone::H, n, 2)) {
      // Closure of {lambda} under adjacent swaps and the flip of the last two signs.
      std::set<Exponents> orbit = {l.e};
      std::vector<Exponents> todo = {l.e};
      while (!todo.empty()) {
        Exponents e = todo.back();
        todo.pop_back();
        std::vector<Exponents> next;
        for (int i = 0; i + 1 < n; ++i) {
          Exponents f = e;
          std::swap(f[i], f[i + 1]);
          next.push_back(f);
        }
        Exponents f = e;
        f[n - 1] = -f[n - 1];
        f[n - 2] = -f[n - 2];
        next.push_back(f);
        for (auto& g : next)
          if (orbit.insert(g).second) todo.push_back(g);
      }
      SymLaurent expect(n);
      for (const auto& e : orbit) expect.add_term(e, 1);
      EXPECT_EQ(orbit_sum(l), expect) << l.to_string();
      EXPECT_TRUE(orbit_sum(l).is_in_S0());
    }
}
