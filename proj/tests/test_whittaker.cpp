#include <gtest/gtest.h>

#include "rsverify/harness/rng.hpp"
#include "rsverify/whittaker.hpp"
#include "test_helpers.hpp"

using namespace rsv;
using rsvtest::P;

TEST(GlWhittaker, Examples) {
  EXPECT_EQ(gl_whittaker(Coweight{0, 0}, 2), SymLaurent::constant(2, 1));
  EXPECT_EQ(gl_whittaker(Coweight{1, 0}, 2), VLaurent::v_pow(-1) * P("X1 + X2", 2));
  EXPECT_TRUE(gl_whittaker(Coweight{0, 1}, 2).is_zero());
  EXPECT_THROW(gl_whittaker(Coweight{1, 0}, 3), structural_error);
}

// q^{-(l1-l2)/2} (a1^{l1+1} a2^{l2} - a1^{l2} a2^{l1+1}) / (a1 - a2).
TEST(GlWhittaker, Gl2ClosedForm) {
  const std::vector<std::pair<Rational, Rational>> points = {{2, 3}, {Rational(-1, 2), 5}, {Rational(7, 3), Rational(2, 9)}};
  const Rational v(3, 2);
  for (int l2 = -3; l2 <= 3; ++l2)
    for (int l1 = l2; l1 - l2 <= 6; ++l1)
      for (const auto& [a1, a2] : points) {
        Rational closed = rational_pow(v, -(l1 - l2)) *
                          (rational_pow(a1, l1 + 1) * rational_pow(a2, l2) - rational_pow(a1, l2) * rational_pow(a2, l1 + 1)) /
                          (a1 - a2);
        EXPECT_EQ(gl_whittaker(Coweight{l1, l2}, 2).evaluate({a1, a2}, v), closed) << l1 << "," << l2;
      }
}

TEST(GlWhittaker, Homogeneity) {
  EXPECT_TRUE(homogeneity_check(Coweight{1, 0}, 2));
  EXPECT_TRUE(homogeneity_check(Coweight{0, 0}, 2));
  EXPECT_TRUE(homogeneity_check(Coweight{2, 1, 1}, 3));
  for (int r = 1; r <= 3; ++r)
    for (const auto& l : enumerate_cone(Cone::GL, r, 2)) EXPECT_TRUE(homogeneity_check(l, r)) << l.to_string();
}

TEST(WhittakerData, Construction) {
  WhittakerData d(2);
  EXPECT_THROW(d.set(Coweight{0, 1}, 1), domain_error);
  EXPECT_THROW(d.set(Coweight{1, 0, 0}, 1), structural_error);
  EXPECT_THROW(WhittakerData(0), domain_error);
  d.set(Coweight{1, 0}, 3);
  d.add(Coweight{1, 0}, -3);
  EXPECT_TRUE(d.empty());
}

TEST(SphericalSO, Examples) {
  SatakeParamsSO b1({Rational(5, 2)});
  WhittakerData d1 = spherical_so_data(b1, 1, 3);
  EXPECT_EQ(d1.at(Coweight{0}), VLaurent(1));
  EXPECT_EQ(d1.at(Coweight{1}), VLaurent::monomial(-1, Rational(5, 2) + Rational(2, 5)));
  SatakeParamsSO b2({2, 3});
  WhittakerData d2 = spherical_so_data(b2, 2, 2);
  EXPECT_EQ(d2.at(Coweight{1, 0}), VLaurent::monomial(-3, Rational(35, 6)));
  EXPECT_EQ(d2.at(Coweight{0, 0}), VLaurent(1));
  EXPECT_THROW(SatakeParamsSO({0, 1}), domain_error);
  EXPECT_THROW(spherical_so_data(b2, 3, 1), structural_error);
}

TEST(SphericalSO, WeylInvariance) {
  Rng rng(11, 0);
  for (int t = 0; t < 10; ++t) {
    auto beta = rng.satake_beta(3);
    WhittakerData base = spherical_so_data(SatakeParamsSO(beta), 3, 2);
    auto b2 = beta;
    b2[1] = 1 / b2[1];
    std::swap(b2[0], b2[2]);
    EXPECT_EQ(spherical_so_data(SatakeParamsSO(b2), 3, 2), base);
  }
}

TEST(RaisingData, Eta) {
  WhittakerData d = WhittakerData::delta(3, Coweight::zero(3));
  EXPECT_EQ(eta_data(d), WhittakerData::delta(3, Coweight::mu(3)));
  EXPECT_EQ(eta_data(eta_data(d)), WhittakerData::delta(3, 2 * Coweight::mu(3)));
}

TEST(RaisingData, Theta) {
  WhittakerData t = theta_data(WhittakerData::delta(2, Coweight{0, 0}));
  EXPECT_EQ(t.at(Coweight{1, 0}), VLaurent(1));
  EXPECT_TRUE(t.at(Coweight{1, 1}).is_zero());
  EXPECT_EQ(t.entries().size(), 1u);
  EXPECT_TRUE(theta_data(WhittakerData(2)).empty());
  EXPECT_THROW(theta_data(WhittakerData(3)), unsupported_error);
}

TEST(RaisingData, ThetaPrime) {
  WhittakerData t = theta_prime_data(WhittakerData::delta(2, Coweight{0, 0}));
  EXPECT_EQ(t.at(Coweight{1, 1}), VLaurent(1));
  EXPECT_EQ(t.at(Coweight{0, 0}), VLaurent::q_pow(1));
  EXPECT_TRUE(theta_prime_data(WhittakerData(2)).empty());
  EXPECT_THROW(theta_prime_data(WhittakerData(1)), unsupported_error);
}

// Pointwise oracle for the two rules on random data.
TEST(RaisingData, RulesPointwise) {
  Rng rng(5, 0);
  const VLaurent q = VLaurent::q_pow(1);
  for (int t = 0; t < 20; ++t) {
    WhittakerData d = rng.data(2, 5, 3);
    WhittakerData th = theta_data(d), tp = theta_prime_data(d);
    for (const auto& l : enumerate_cone(Cone::G, 2, 5)) {
      auto at = [&](Coweight c) { return is_g_dominant(c) ? d.at(c) : VLaurent(); };
      EXPECT_EQ(th.at(l), at(l - Coweight{1, 0}) + q * at(l - Coweight{0, 1}));
      EXPECT_EQ(tp.at(l), at(l - Coweight{1, 1}) + q * at(l));
    }
  }
}

TEST(WhittakerData, JsonRoundTrip) {
  Rng rng(9, 0);
  for (int t = 0; t < 10; ++t) {
    WhittakerData d = rng.data(3, 6, 3);
    Json j = to_json(d);
    EXPECT_EQ(whittaker_from_json(j), d);
    EXPECT_EQ(whittaker_from_json(Json::parse(j.dump())), d);
  }
}

TEST(WhittakerData, LinearOperations) {
  Rng rng(13, 0);
  WhittakerData a = rng.data(2, 4, 2), b = rng.data(2, 4, 2);
  EXPECT_EQ(a + b - b, a);
  EXPECT_TRUE((a - a).empty());
  EXPECT_EQ(theta_data(a + b), theta_data(a) + theta_data(b));
  EXPECT_EQ(eta_data(a.scaled(VLaurent::q_pow(2))), eta_data(a).scaled(VLaurent::q_pow(2)));
}
