#include <gtest/gtest.h>

#include <set>

#include "rsverify/coweights.hpp"

using namespace rsv;

TEST(Coweight, NormAndTrace) {
  EXPECT_EQ(sup_norm(Coweight::zero(3)), 0);
  EXPECT_EQ(sup_norm(Coweight{2, 1, -1}), 2);
  EXPECT_EQ(sup_norm(Coweight::epsilon(2, 1) + Coweight::epsilon(2, 2)), 1);
  EXPECT_EQ(trace(Coweight::mu(4)), 4);
  EXPECT_EQ(trace(Coweight{2, 1, -1}), 2);
  EXPECT_EQ(trace(Coweight::zero(2)), 0);
  EXPECT_THROW(Coweight({1, 0}) + Coweight({1}), structural_error);
}

TEST(Coweight, Tilde) {
  EXPECT_EQ(tilde(Coweight{1, 1}), (Coweight{1, -1}));
  EXPECT_EQ(tilde(Coweight{3, 0}), (Coweight{3, 0}));
  EXPECT_EQ(tilde(tilde(Coweight{2, 1, -1})), (Coweight{2, 1, -1}));
}

TEST(Cone, Membership) {
  EXPECT_TRUE(is_gl_dominant(Coweight{1, 0, -2}));
  EXPECT_FALSE(is_g_dominant(Coweight{1, 0, -2}));
  EXPECT_TRUE(is_h_dominant(Coweight{2, 1, -1}));
  EXPECT_FALSE(is_h_dominant(Coweight{2, 1, -2}));
  EXPECT_FALSE(is_gl_dominant(Coweight{0, 1}));
  // n = 1: H-cone has no constraint.
  EXPECT_TRUE(is_h_dominant(Coweight{-3}));
  EXPECT_FALSE(is_g_dominant(Coweight{-3}));
}

TEST(Cone, EnumerationExamples) {
  auto h = enumerate_cone(Cone::H, 2, 1);
  std::set<Coweight> hs(h.begin(), h.end());
  EXPECT_EQ(hs, (std::set<Coweight>{{0, 0}, {1, 0}, {1, 1}, {1, -1}}));
  auto g = enumerate_cone(Cone::G, 2, 1);
  std::set<Coweight> gs(g.begin(), g.end());
  EXPECT_EQ(gs, (std::set<Coweight>{{0, 0}, {1, 0}, {1, 1}}));
  for (Cone c : {Cone::GL, Cone::G, Cone::H})
    EXPECT_EQ(enumerate_cone(c, 3, 0), std::vector<Coweight>{Coweight::zero(3)});
  EXPECT_THROW(enumerate_cone(Cone::G, 0, 1), domain_error);
  EXPECT_THROW(enumerate_cone(Cone::G, 2, -1), domain_error);
}

// Independent enumeration: recursive descent over weakly decreasing tuples.
static void descend(std::vector<int>& cur, int n, int lo, int hi, std::vector<Coweight>& out) {
  if (static_cast<int>(cur.size()) == n) { out.emplace_back(cur); return; }
  int top = cur.empty() ? hi : cur.back();
  for (int x = lo; x <= top; ++x) {
    cur.push_back(x);
    descend(cur, n, lo, hi, out);
    cur.pop_back();
  }
}

TEST(Cone, EnumerationMatchesRecursiveOracle) {
  for (int n = 1; n <= 4; ++n)
    for (int b = 0; b <= 3; ++b) {
      std::vector<Coweight> gl, g, hcone;
      std::vector<int> cur;
      descend(cur, n, -b, b, gl);
      descend(cur, n, 0, b, g);
      // H: decreasing first n-1 entries, last entry bounded by the previous.
      for (int last = -b; last <= b; ++last) {
        std::vector<Coweight> heads;
        if (n == 1) {
          hcone.push_back(Coweight{last});
          continue;
        }
        descend(cur, n - 1, -b, b, heads);
        for (auto hd : heads)
          if (hd.e.back() >= std::abs(last)) {
            hd.e.push_back(last);
            hcone.push_back(hd);
          }
      }
      auto as_set = [](const std::vector<Coweight>& v) { return std::set<Coweight>(v.begin(), v.end()); };
      EXPECT_EQ(as_set(enumerate_cone(Cone::GL, n, b)), as_set(gl)) << n << " " << b;
      EXPECT_EQ(as_set(enumerate_cone(Cone::G, n, b)), as_set(g)) << n << " " << b;
      EXPECT_EQ(as_set(enumerate_cone(Cone::H, n, b)), as_set(hcone)) << n << " " << b;
      auto e = enumerate_cone(Cone::G, n, b);
      EXPECT_TRUE(std::is_sorted(e.begin(), e.end()));
    }
}

TEST(Cone, Inclusions) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& l : enumerate_cone(Cone::GL, n, 2)) {
      if (is_g_dominant(l)) EXPECT_TRUE(is_h_dominant(l)) << l.to_string();
      if (n >= 2 && is_h_dominant(l)) {
        EXPECT_TRUE(is_h_dominant(tilde(l)));
      }
    }
  // G-cone is closed under tilde exactly when the last entry is 0.
  for (const auto& l : enumerate_cone(Cone::G, 3, 2))
    EXPECT_EQ(is_g_dominant(tilde(l)), l[2] == 0);
}

TEST(Dimension, FormulaExamples) {
  EXPECT_EQ(dim_formula(2, 0, 0), 1);
  EXPECT_EQ(dim_formula(2, 2, 0), 4);
  EXPECT_EQ(dim_formula(1, 1, 0), 2);
  EXPECT_EQ(dim_formula(2, 5, 7), 0);
  EXPECT_EQ(basis_cardinality(2, 2, 0), 4);
  EXPECT_EQ(basis_cardinality(2, 1, 0), 2);
  EXPECT_EQ(basis_cardinality(3, 0, 0), 1);
  EXPECT_EQ(basis_cardinality(3, 1, 4), 0);
}

TEST(Dimension, ThirtySixEqualities) {
  int count = 0;
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 8; ++k) {
      EXPECT_EQ(dim_formula(n, k + 3, 3), basis_cardinality(n, k + 3, 3)) << n << " " << k;
      ++count;
    }
  EXPECT_EQ(count, 36);
}

TEST(Dimension, PascalOracle) {
  // Binomials via Pascal's triangle.
  std::vector<std::vector<long long>> C(20, std::vector<long long>(20, 0));
  for (int i = 0; i < 20; ++i) {
    C[i][0] = 1;
    for (int j = 1; j <= i; ++j) C[i][j] = C[i - 1][j - 1] + C[i - 1][j];
  }
  for (int a = 0; a < 20; ++a)
    for (int b = 0; b < 20; ++b) EXPECT_EQ(binomial(a, b), C[a][b]);
}
