#include "raviolo/config/config.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace rav;
using namespace rav::testing;

namespace {

CForm U(std::vector<int> s) { return u_perm(s); }
RatFrac inv(int i, int j, int e = 1) { return RatFrac::inv_difference(i, j, e); }

}  // namespace

TEST(Config, Iota2OfU12) {
  CForm got = iota_embed({1, 2}, U({1, 2}), 3);
  EXPECT_EQ(got, U({1, 2, 3}) + U({1, 3, 2}) + U({3, 1, 2}));
  EXPECT_EQ(iota_embed({1, 2}, U({2, 1}), 3), U({2, 1, 3}) + U({2, 3, 1}) + U({3, 2, 1}));
}

TEST(Config, MembershipExamplesInA2) {
  CForm good = (U({1, 2}) * U({2, 1})).scaled(inv(0, 1));
  EXPECT_TRUE(in_A_N(good, 2).member);
  CForm bad = U({1, 2}).scaled(inv(0, 1));
  MembershipReport r = in_A_N(bad, 2);
  EXPECT_FALSE(r.member);
  ASSERT_EQ(r.violations.size(), 1u);
  // Pair (2,1) zeroes u(21), leaving u(12) = 1 over the pole.
  EXPECT_EQ(r.violations[0], std::make_pair(2, 1));
  CForm image = iota_embed({1, 2}, good, 3);
  CForm displayed = ((U({1, 2, 3}) + U({1, 3, 2}) + U({3, 1, 2})) * (U({2, 1, 3}) + U({2, 3, 1}) + U({3, 2, 1}))).scaled(inv(0, 1));
  EXPECT_EQ(image, displayed);
  EXPECT_TRUE(in_A_N(image, 3).member);
  EXPECT_THROW(iota_embed({1, 2}, bad, 3), std::invalid_argument);
}

TEST(Config, PolynomialFormsAreMembers) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) EXPECT_TRUE(in_A_N(random_poly_form(rng, 3, 3, 2), 3).member);
}

TEST(Config, NonMembersNearKernelElement) {
  for (CForm f : {U({1, 2, 3}).scaled(inv(2, 1)), du_perm({1, 2, 3}).scaled(inv(2, 1))}) {
    MembershipReport r = in_A_N(f, 3);
    ASSERT_FALSE(r.member);
    ASSERT_EQ(r.violations.size(), 1u);
    EXPECT_EQ(r.violations[0], std::make_pair(3, 2));
    std::vector<int> face;
    for (const auto& s : std::vector<std::vector<int>>{{3, 2, 1}, {3, 1, 2}, {1, 3, 2}}) face.push_back(perm_index(s));
    std::sort(face.begin(), face.end());
    auto got = r.faces[0];
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, face);
  }
}

TEST(Config, KernelElementExpandsToZero) {
  CForm k = kernel_element();
  EXPECT_TRUE(in_A_N(k, 3).member);
  EXPECT_TRUE(k.generators().size() > 0);
  EXPECT_TRUE(expand_at(k, 1, 2, 5).is_zero());
  EXPECT_TRUE(expand_at(k, 2, 2, 5).is_zero());
}

TEST(Config, Omega12) {
  CForm om = omega12();
  EXPECT_TRUE(om.d().is_zero());
  EXPECT_TRUE(in_A_N(om, 3).member);
  for (const auto& [key, c] : om.terms()) EXPECT_TRUE(c.vanishes_at_infinity_in(2));
  for (int s = 1; s <= 2; ++s) {
    RavLocal e = expand_at(om, s, 2, 4);
    EXPECT_FALSE(e.is_zero());
    EXPECT_GE(e.min_degree(), 0);
  }
  // Singular part at site 1: dv31/(w-z1) ^ (dv32/(w-z2) - dv12/(z1-z2)) pulls back to zero.
  CForm sing = v_ij(3, 3, 1).d() * (v_ij(3, 3, 2).d().scaled(inv(2, 1)) - v_ij(3, 1, 2).d().scaled(inv(0, 1)));
  EXPECT_TRUE(expand_at_raw(sing, 1, 2, 0).is_zero());
}

TEST(Config, PullbackIdentities) {
  CForm v = v_form();
  EXPECT_EQ(p_pullback(1, v_ij(3, 1, 2), 2), U({1, 2}));
  EXPECT_EQ(p_pullback(1, v_ij(3, 1, 3), 2), v);
  EXPECT_EQ(p_pullback(1, v_ij(3, 2, 3), 2), U({2, 1}));
  EXPECT_EQ(v_ij(3, 1, 3), U({1, 2, 3}) + U({2, 1, 3}) + U({1, 3, 2}));
  CForm all;
  for (size_t l = 0; l < permutations(3).size(); ++l) all += simplex_u<RatFrac>(fam_perm(3), static_cast<int>(l));
  EXPECT_EQ(p_pullback(2, all - CForm(1), 2), CForm());
}

TEST(Config, QStarOfV) {
  for (int n = 1; n <= 3; ++n)
    for (int s = 1; s <= n; ++s) {
      EXPECT_EQ(q_pullback(s, v_form(), n), precedence_sum(n + 1, s, n + 1));
      EXPECT_EQ(p_pullback(s, q_pullback(s, v_form(), n), n), v_form());
    }
}

TEST(Config, PQIsIdentityOnRandomForms) {
  std::mt19937_64 rng(17);
  CForm v = v_form();
  for (int t = 0; t < 100; ++t) {
    int n = 2 + static_cast<int>(t % 2), s = 1 + static_cast<int>(rng() % n);
    CForm f = random_poly_form(rng, n, n + 1) * (rng() % 2 ? v : v.d()) + random_poly_form(rng, n, n + 1);
    EXPECT_EQ(p_pullback(s, q_pullback(s, f, n), n), f);
  }
}

TEST(Config, IotaIsDgAlgebraMap) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 15; ++t) {
    CForm a = random_member(rng, 2, 2), b = random_member(rng, 2, 2);
    std::vector<int> J = (t % 3 == 0) ? std::vector<int>{1, 3} : (t % 3 == 1) ? std::vector<int>{2, 3} : std::vector<int>{1, 2};
    CForm ia = iota_embed(J, a, 3), ib = iota_embed(J, b, 3);
    EXPECT_EQ(iota_embed(J, a * b, 3), ia * ib);
    EXPECT_EQ(iota_embed(J, a.d(), 3), ia.d());
    EXPECT_TRUE(in_A_N(ia, 3).member);
  }
}

TEST(Config, SubalgebraClosure) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    int n = 2 + t % 2;
    CForm a = random_member(rng, n, n), b = random_member(rng, n, n);
    ASSERT_TRUE(in_A_N(a, n).member);
    EXPECT_TRUE(in_A_N(a * b, n).member);
    EXPECT_TRUE(in_A_N(a.d(), n).member);
  }
}

TEST(Config, ParallelMatchesSerial) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    CForm a = random_poly_form(rng, 3, 3);
    if (t % 2) a = a.scaled(inv(static_cast<int>(rng() % 2), 2));
    MembershipReport p = in_A_N(a, 3), s = in_A_N_serial(a, 3);
    EXPECT_EQ(p.member, s.member);
    EXPECT_EQ(p.violations, s.violations);
    EXPECT_EQ(p.faces, s.faces);
  }
}

TEST(Config, ExpandIsMultiplicative) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 10; ++t) {
    CForm a = random_member(rng, 3, 3), b = random_member(rng, 3, 3);
    int s = 1 + static_cast<int>(rng() % 2);
    RavLocal ea = expand_at(a, s, 2, 4), eb = expand_at(b, s, 2, 4);
    EXPECT_TRUE(expand_at(a * b, s, 2, 4).agrees_with(ea * eb, 2));
    RavLocal dd = ea.map_coeffs([](const CForm& c) { return c.d(); });
    EXPECT_TRUE(expand_at(a.d(), s, 2, 4).agrees_with(dd, 4));
  }
}

TEST(Config, RoundTripGlobalBuild) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    int n = 1 + t % 3, k = 1 + static_cast<int>(rng() % n);
    if (n == 1) n = 2;
    k = std::min(k, n);
    RavLocal x = random_rav_minus(rng, n);
    ASSERT_TRUE(check_rav_local(x, n).ok);
    CForm g = g_build(k, x, n);
    ASSERT_TRUE(in_A_N(g, n + 1).member);
    for (const auto& [key, c] : g.terms()) EXPECT_TRUE(c.vanishes_at_infinity_in(n));
    RavLocal back = expand_at(g, k, n, 0);
    EXPECT_TRUE(back.agrees_with(x, 0)) << rav_local_string(back, k) << " vs " << rav_local_string(x, k);
    for (int s = 1; s <= n; ++s)
      if (s != k) EXPECT_GE(expand_at(g, s, n, 0).min_degree(), 0);
  }
}

TEST(Config, GBuildIsMultiplicative) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 10; ++t) {
    RavLocal x = random_rav_minus(rng, 2, 1), y = random_rav_minus(rng, 2, 0);
    EXPECT_EQ(g_build(2, x * y, 2), g_build(2, x, 2) * g_build(2, y, 2));
  }
  EXPECT_TRUE(g_build(1, RavLocal(), 2).is_zero());
  EXPECT_THROW(g_build(1, RavLocal(CForm(1)), 2), std::invalid_argument);
}

TEST(Config, GOfDvFormFactor) {
  RavLocal x;
  x.add_term(-1, v_form().d());
  EXPECT_EQ(g_build(3, x, 3), precedence_sum(4, 3, 4).d().scaled(inv(3, 2)));
}

TEST(Config, DecomposeGlobal) {
  std::mt19937_64 rng(41);
  RavLocal plus(3);
  plus.add_term(0, random_poly_form(rng, 2, 2));
  auto d0 = decompose_global({plus, plus}, 2, 3);
  EXPECT_TRUE(d0.global.is_zero());
  EXPECT_EQ(d0.plus_remainder[0], plus);
  RavLocal x = random_rav_minus(rng, 2);
  RavLocal xk(3);
  xk += x;
  auto d1 = decompose_global({xk, RavLocal(3)}, 2, 3);
  EXPECT_TRUE(d1.plus_remainder[0].is_zero());
  EXPECT_GE(d1.plus_remainder[1].min_degree(), 0);
}

TEST(Config, FarSitePullbacksCommute) {
  // N = 3, far site i = 1: collapse 4 onto 1 then 3 onto 2, against 3 onto 2 then (new) 3 onto 1.
  CForm x = precedence_sum(4, 3, 4);
  CForm a = p_pullback_general(3, 2, p_pullback_general(4, 1, x, 4, kFamV), 3, kFamU);
  CForm b = p_pullback_general(3, 1, p_pullback_general(3, 2, x, 4, kFamU), 3, kFamV);
  EXPECT_EQ(a, b);
  std::mt19937_64 rng(43);
  for (int t = 0; t < 10; ++t) {
    CForm f = random_poly_form(rng, 4, 0, 2);
    EXPECT_EQ(p_pullback_general(3, 2, p_pullback_general(4, 1, f, 4, kFamV), 3, kFamU),
              p_pullback_general(3, 1, p_pullback_general(3, 2, f, 4, kFamU), 3, kFamV));
  }
  EXPECT_EQ(p_pullback_general(3, 2, precedence_sum(3, 3, 2), 3, kFamU), CForm(1) - CForm::gen(make_gen(kFamU, 0)));
}
