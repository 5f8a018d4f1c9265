#include "raviolo/coinv/coinv.hpp"
#include "raviolo/coinv/pools.hpp"
#include "raviolo/coinv/worked.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace rav;

namespace {

const LieData& sl2() {
  static const LieData g = LieData::sl2();
  return g;
}

SiteVec vac(const Monomial& m = {}) { return SiteVec{0, m}; }
SiteVec far(int b) { return SiteVec{b, {}}; }

Monomial sorted_word(LoopEngine& eng, const std::vector<LoopGen>& w) {
  State s = eng.apply_word(w);
  return s.terms().begin()->first;
}

// Single PBW monomials from the theorem pool (the first term of each pool state).
Monomial random_monomial(LoopEngine& eng, std::mt19937_64& rng, int max_index = 12) {
  const auto& pool = theorem_pool();
  for (;;) {
    State s = pool_state(eng, pool[rng() % std::min<size_t>(max_index, pool.size())]);
    if (!s.is_zero()) return s.terms().begin()->first;
  }
}

CForm random_coefficient(std::mt19937_64& rng, int n) {
  const auto& perms = permutations(n);
  CForm c(RatFrac(rav::testing::random_rational(rng)));
  for (int t = 0; t < 2; ++t) {
    int l = static_cast<int>(rng() % perms.size());
    RatFrac r = RatFrac(rav::testing::random_poly(rng, n, 2, 1));
    if (rng() % 2) r = r * RatFrac::inv_difference(n - 1, n - 2);
    CForm piece = rng() % 2 ? u_perm(perms[l]) : du_perm(perms[l]);
    c += piece.scaled(r);
  }
  return c;
}

int koszul(int a, int b) { return (a * b) % 2 ? -1 : 1; }

}  // namespace

TEST(Coinv, SiteSpecValidation) {
  SiteSpec ad = SiteSpec::adjoint(sl2());
  EXPECT_EQ(ad.dim(), 3);
  std::vector<RMatrix> bad = ad.mats;
  bad[kE][0][0] += Rational(1);
  EXPECT_THROW(SiteSpec::finite_dim(sl2(), bad), std::invalid_argument);
  EXPECT_THROW(SiteSpec::finite_dim(sl2(), {ad.mats[0]}), std::invalid_argument);
  EXPECT_EQ(SiteSpec::trivial().dim(), 1);
}

TEST(Coinv, FarSiteCharacter) {
  LoopEngine eng(sl2());
  Coinvariants ctx(eng, {SiteSpec::adjoint(sl2()), SiteSpec::vacuum()});
  TensorState f = ctx.basis_state({far(kF), vac()});
  // (e (x) 1) . f = [e, f] = h
  TensorState hf;
  hf.add_term({far(kH), vac()}, CForm(1));
  EXPECT_EQ(ctx.act_at_site(1, CForm(1), LoopGen::plus0(kE, 0, 0), f), hf);
  // maximal ideal, v and dv all act by zero
  EXPECT_TRUE(ctx.act_at_site(1, CForm(1), LoopGen::plus0(kE, 1, 0), f).is_zero());
  EXPECT_TRUE(ctx.act_at_site(1, CForm(1), LoopGen::plus0(kE, 0, 1), f).is_zero());
  EXPECT_TRUE(ctx.act_at_site(1, CForm(1), LoopGen::plus1(kE, 0, 0), f).is_zero());
  // evaluating at v = 1 instead lets (e (x) v) act like e
  SiteSpec at1 = SiteSpec::adjoint(sl2());
  at1.eps_v = 1;
  Coinvariants ctx1(eng, {at1, SiteSpec::vacuum()});
  EXPECT_EQ(ctx1.act_at_site(1, CForm(1), LoopGen::plus0(kE, 0, 1), f), hf);
  Coinvariants triv(eng, {SiteSpec::trivial(), SiteSpec::vacuum()});
  EXPECT_TRUE(triv.act_at_site(1, CForm(1), LoopGen::plus0(kE, 0, 0), triv.basis_state({far(0), vac()})).is_zero());
}

TEST(Coinv, KeyValidation) {
  LoopEngine eng(sl2());
  Coinvariants ctx(eng, {SiteSpec::adjoint(sl2()), SiteSpec::vacuum()});
  EXPECT_THROW(ctx.check_key({far(3), vac()}), std::invalid_argument);
  EXPECT_THROW(ctx.check_key({far(0)}), std::invalid_argument);
  EXPECT_THROW(ctx.check_key({far(0), vac({LoopGen::plus0(kE, 0)})}), std::invalid_argument);
  Monomial m = sorted_word(eng, {LoopGen::minus1(kF, 1, 0), LoopGen::minus0(kE, 2, 0)});
  ASSERT_EQ(m.size(), 2u);
  std::swap(m[0], m[1]);
  EXPECT_THROW(ctx.check_key({far(0), vac(m)}), std::invalid_argument);
  EXPECT_NO_THROW(ctx.check_key({far(2), vac({LoopGen::minus1(kE, 1, 0)})}));
}

TEST(Coinv, SwapRoutesAgree) {
  LoopEngine eng(sl2());
  std::vector<SiteSpec> sites{SiteSpec::adjoint(sl2()), SiteSpec::vacuum(), SiteSpec::vacuum()};
  Coinvariants closed(eng, sites, false, SwapRoute::Closed);
  Coinvariants global(eng, sites, false, SwapRoute::Global);
  auto to_state = [&](const std::vector<PlusTerm>& terms) {
    TensorState s;
    for (const auto& pt : terms)
      for (const auto& [g, r] : pt.gens) s.add_term({far(0), vac({g}), vac()}, pt.coeff.scaled(RatFrac(r)));
    return s;
  };
  for (const auto& x : explicit_generator_pool())
    for (int s = 1; s <= 3; ++s)
      for (int t = 1; t <= 3; ++t)
        if (s != t)
          EXPECT_EQ(to_state(closed.swap_expansion(s, t, x, 3)), to_state(global.swap_expansion(s, t, x, 3)))
              << s << " " << t;
  Coinvariants cc(eng, sites, true, SwapRoute::Closed), cg(eng, sites, true, SwapRoute::Global);
  for (int l = 1; l <= 3; ++l)
    EXPECT_EQ(to_state(cc.swap_expansion(3, 1, LoopGen::classical(kH, -l), 4)),
              to_state(cg.swap_expansion(3, 1, LoopGen::classical(kH, -l), 4)));

  std::mt19937_64 rng(11);
  for (int c = 0; c < 10; ++c) {
    TensorState st = closed.basis_state({far(static_cast<int>(rng() % 3)), vac(random_monomial(eng, rng)),
                                         vac(random_monomial(eng, rng))});
    EXPECT_EQ(closed.reduce(st), global.reduce(st));
  }
}

TEST(Coinv, SwapSoundness) {
  // Swapping X at site s removes the action of the single global element g_s(X): with st' the state
  // without X, g_s(X) . st' = eps (st - swap(st)).
  LoopEngine eng(sl2());
  std::vector<SiteSpec> sites{SiteSpec::adjoint(sl2()), SiteSpec::vacuum(), SiteSpec::vacuum()};
  Coinvariants ctx(eng, sites);
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int c = 0; c < 30; ++c) {
    int s = 2 + static_cast<int>(rng() % 2);
    TensorKey k{far(static_cast<int>(rng() % 3)), vac(random_monomial(eng, rng)), vac(random_monomial(eng, rng))};
    if (k[s - 1].mono.empty()) continue;
    CForm coef = random_coefficient(rng, 3);
    LoopGen x = k[s - 1].mono.front();
    TensorKey rk = k;
    rk[s - 1].mono.erase(rk[s - 1].mono.begin());
    CForm g = g_build(s, RavLocal::monomial(-x.pole(), x.vform().map_coeffs([](const Rational& q) { return RatFrac(q); })), 3);
    TensorState lhs, expect;
    for (int p = 0; p < 2; ++p) {
      CForm part;
      for (int d = p; d <= 6; d += 2) part += coef.degree_part(d);
      if (part.is_zero()) continue;
      TensorState st = ctx.basis_state(k, part);
      lhs += ctx.act_global(GlobalElement{x.lie, g}, ctx.basis_state(rk, part));
      TensorState diff = st - ctx.swap_at_site(st, s, x);
      expect += ctx.swap_sign(k, s, p) > 0 ? diff : -diff;
    }
    EXPECT_EQ(lhs, expect) << c;
    ++checked;
  }
  EXPECT_GE(checked, 15);
}

TEST(Coinv, SwapRequiresOutermostGenerator) {
  LoopEngine eng(sl2());
  Coinvariants ctx(eng, {SiteSpec::trivial(), SiteSpec::vacuum(), SiteSpec::vacuum()});
  Monomial m = sorted_word(eng, {LoopGen::minus1(kE, 1, 0), LoopGen::minus0(kH, 1, 0)});
  TensorState st = ctx.basis_state({far(0), vac(), vac(m)});
  EXPECT_THROW(ctx.swap_at_site(st, 3, m.back()), std::invalid_argument);
  EXPECT_NO_THROW(ctx.swap_at_site(st, 3, m.front()));
  EXPECT_THROW(ctx.swap_at_site(st, 2, m.front()), std::invalid_argument);
  // A = |0>: nothing to swap, the state is unchanged
  TensorState bare = ctx.basis_state({far(0), vac(m), vac()});
  EXPECT_EQ(ctx.swap_at_site(bare, 3), bare);
}

TEST(Coinv, ReduceBasics) {
  LoopEngine eng(sl2());
  Coinvariants ctx(eng, {SiteSpec::adjoint(sl2()), SiteSpec::vacuum(), SiteSpec::vacuum()});
  TensorState vacua = ctx.basis_state({far(1), vac(), vac()}, du_perm({2, 1, 3}));
  EXPECT_EQ(ctx.reduce(vacua), vacua);
  std::mt19937_64 rng(3);
  for (int c = 0; c < 15; ++c) {
    TensorState st = ctx.basis_state({far(static_cast<int>(rng() % 3)), vac(random_monomial(eng, rng)),
                                      vac(random_monomial(eng, rng))},
                                     random_coefficient(rng, 3));
    TensorState r = ctx.reduce(st);
    for (const auto& [k, w] : r.terms()) {
      EXPECT_TRUE(k[1].mono.empty());
      EXPECT_TRUE(k[2].mono.empty());
    }
    EXPECT_EQ(ctx.reduce(r), r);
    EXPECT_EQ(ctx.reduce(st), r);
  }
}

TEST(Coinv, ReduceIsGradedLinear) {
  LoopEngine eng(sl2());
  Coinvariants ctx(eng, {SiteSpec::adjoint(sl2()), SiteSpec::vacuum(), SiteSpec::vacuum()});
  std::mt19937_64 rng(8);
  for (int c = 0; c < 10; ++c) {
    TensorKey k{far(static_cast<int>(rng() % 3)), vac(random_monomial(eng, rng)), vac(random_monomial(eng, rng))};
    CForm w = random_coefficient(rng, 3);
    EXPECT_EQ(ctx.reduce(ctx.basis_state(k, w)), ctx.reduce(ctx.basis_state(k)).left_multiplied(w));
  }
}

TEST(Coinv, TrivialFarSiteLeavesCoefficientOnly) {
  LoopEngine eng(sl2());
  Coinvariants ctx(eng, {SiteSpec::trivial(), SiteSpec::vacuum(), SiteSpec::vacuum()});
  TensorState st = ctx.basis_state({far(0), vac(), vac({LoopGen::minus1(kE, 1, 0)})});
  TensorState sw = ctx.swap_at_site(st, 3);
  // far actions vanish; the only terms sit at site 2 and carry plus modes acting on |0>, hence zero
  EXPECT_TRUE(sw.is_zero());
  EXPECT_TRUE(ctx.reduce(st).is_zero());
}

TEST(Coinv, WorkedExample) {
  LoopEngine eng(sl2());
  for (bool adjoint : {false, true}) {
    SiteSpec f = adjoint ? SiteSpec::adjoint(sl2()) : SiteSpec::trivial();
    for (int basis = 0; basis < f.dim(); ++basis) {
      for (int bi : {0, 2, 3, 6, 7}) {
        WorkedExample ex = worked_example(eng, f, basis, kE, pool_state(eng, theorem_pool()[bi]), 5);
        EXPECT_TRUE(ex.swap_matches) << adjoint << basis << bi;
        EXPECT_TRUE(ex.display_matches_y) << adjoint << basis << bi;
        EXPECT_TRUE(ex.reduced_match) << adjoint << basis << bi;
        EXPECT_TRUE(ex.near_pullback_ok);
        EXPECT_EQ(ex.lhs.precision(), 5);
      }
    }
  }
  // adjoint far vector f, B = |0>: [e, f] = h with the far-site factor d v_{12}-type coefficients
  SiteSpec ad = SiteSpec::adjoint(sl2());
  WorkedExample ex = worked_example(eng, ad, kF, kE, State::vacuum(1), 5);
  ASSERT_EQ(ex.lhs.terms().size(), 1u);
  const auto& [key, ser] = *ex.lhs.terms().begin();
  EXPECT_EQ(key[0].basis, kH);
  EXPECT_EQ(ser.coeffs().size(), 5u);
  EXPECT_EQ(ser.coeffs().begin()->first, 0);
}

TEST(Coinv, PropagationOfVacua) {
  LoopEngine eng(sl2());
  Coinvariants ctx(eng, {SiteSpec::adjoint(sl2()), SiteSpec::vacuum(), SiteSpec::vacuum()});
  Monomial b{LoopGen::minus1(kF, 1, 0)};
  PropagationResult one = propagate_vacuum(ctx.basis_state({far(0), vac(b), vac()}), 3);
  ASSERT_TRUE(one.ok);
  TensorState expect;
  expect.add_term({far(0), vac(b)}, CForm(1));
  EXPECT_EQ(one.state, expect);

  CForm w2 = (u_perm({1, 2}) * u_perm({2, 1})).scaled(RatFrac::inv_difference(0, 1));
  CForm lifted = iota_embed({1, 2}, w2, 3);
  auto rec = recognize_embedded(lifted, 3);
  ASSERT_TRUE(rec.has_value());
  EXPECT_EQ(*rec, w2);
  PropagationResult two = propagate_vacuum(ctx.basis_state({far(0), vac(b), vac()}, lifted), 3);
  EXPECT_TRUE(two.ok);

  // depends on z_3, or not pulled back from S_2: flagged, state kept
  CForm dep = CForm(RatFrac::var(2));
  PropagationResult three = propagate_vacuum(ctx.basis_state({far(0), vac(), vac()}, dep), 3);
  EXPECT_FALSE(three.ok);
  EXPECT_EQ(three.state.terms().begin()->first.size(), 3u);
  EXPECT_FALSE(recognize_embedded(u_perm({1, 3, 2}), 3).has_value());
  EXPECT_THROW(propagate_vacuum(ctx.basis_state({far(0), vac(), vac(b)}), 3), std::invalid_argument);
}

TEST(Coinv, ExpandCoinvariantExamples) {
  LoopEngine eng(sl2());
  Coinvariants ctx(eng, {SiteSpec::trivial(), SiteSpec::vacuum(), SiteSpec::vacuum()});
  const long K = 5;
  for (int k = 0; k < 3; ++k) {
    CForm w = precedence_sum(3, 3, 2).d().scaled(RatFrac::inv_difference(2, 1, k + 1));
    CoinvSeries s = expand_coinvariant(ctx.basis_state({far(0), vac(), vac()}, w), 3, K);
    ASSERT_EQ(s.terms().size(), 1u);
    const auto& ser = s.terms().begin()->second;
    ASSERT_EQ(ser.coeffs().size(), 1u);
    EXPECT_EQ(ser.coeffs().begin()->first, -k - 1);
    EXPECT_EQ(ser.coeffs().begin()->second, -CForm::dgen(u_gen()));
  }
  CForm regular = u_perm({1, 2, 3}).scaled(RatFrac::inv_difference(0, 2));
  CoinvSeries s = expand_coinvariant(ctx.basis_state({far(0), vac(), vac()}, regular), 3, K);
  for (const auto& [key, ser] : s.terms()) EXPECT_GE(ser.min_degree(), 0);
  EXPECT_THROW(expand_coinvariant(ctx.basis_state({far(0), vac(), vac({LoopGen::minus1(kE, 1, 0)})}), 3, K),
               std::invalid_argument);
}

TEST(Coinv, BaseChangeCommutesWithReduce) {
  // Sites 1, 2 carry modules, site 3 the bare vacuum; reducing over A_3 then expanding equals
  // expanding the coefficients first and reducing over the two remaining sites.
  LoopEngine eng(sl2());
  SiteSpec ad = SiteSpec::adjoint(sl2());
  Coinvariants big(eng, {ad, SiteSpec::vacuum(), SiteSpec::vacuum()});
  Coinvariants small(eng, {ad, SiteSpec::vacuum()});
  std::mt19937_64 rng(21);
  const long K = 3;
  for (int c = 0; c < 12; ++c) {
    TensorKey k{far(static_cast<int>(rng() % 3)), vac(random_monomial(eng, rng)), vac()};
    TensorState st = big.basis_state(k, random_coefficient(rng, 3));
    CoinvSeries reduce_then = expand_coinvariant(big.reduce(st), 3, K);
    CoinvSeries expanded = expand_coinvariant(st, 3, K);
    CoinvSeries then_reduce(K);
    for (const auto& [key, ser] : expanded.terms()) {
      for (const auto& [p, w] : ser.coeffs()) {
        TensorState r = small.reduce(small.basis_state(key, w));
        for (const auto& [rk, rw] : r.terms()) then_reduce.add(rk, p, rw);
      }
    }
    EXPECT_TRUE(reduce_then.agrees_with(then_reduce)) << c;
  }
}

TEST(Coinv, TheoremVacuumAndSeededCases) {
  LoopEngine eng(sl2());
  SiteSpec ad = SiteSpec::adjoint(sl2());
  for (int bi = 0; bi < 12; ++bi) {
    TheoremReport r = verify_theorem(eng, {ad}, {kF}, State::vacuum(1), pool_state(eng, theorem_pool()[bi]), 4);
    EXPECT_TRUE(r.equal) << bi;
  }
  auto cases = theorem_cases(2024, 24);
  auto res = verify_batch_serial(cases, 4);
  int nonzero = 0;
  for (size_t i = 0; i < res.size(); ++i) {
    EXPECT_TRUE(res[i].equal) << i;
    nonzero += res[i].lhs_terms > 0;
  }
  EXPECT_GE(nonzero, 3);
}

TEST(Coinv, TheoremDetectsWrongSign) {
  // Odd A and odd B with a nonzero representative: the sign (-1)^{|A||B|} is visible.
  LoopEngine eng(sl2());
  SiteSpec ad = SiteSpec::adjoint(sl2());
  State a = eng.apply_word(std::vector<LoopGen>{LoopGen::minus1(kE, 1, 0)});
  State b = eng.apply_word(std::vector<LoopGen>{LoopGen::minus1(kF, 1, 0)});
  TheoremReport r = verify_theorem(eng, {ad}, {kF}, a, b, 4);
  ASSERT_TRUE(r.equal);
  ASSERT_FALSE(r.lhs.is_zero());
  CoinvSeries flipped = CoinvSeries(4) - r.rhs;
  EXPECT_FALSE(r.lhs.agrees_with(flipped));
}

TEST(Coinv, TheoremRoutesAgree) {
  LoopEngine eng(sl2());
  SiteSpec ad = SiteSpec::adjoint(sl2());
  for (int ai : {1, 3, 8}) {
    for (int bi : {2, 5}) {
      State a = pool_state(eng, theorem_pool()[ai]), b = pool_state(eng, theorem_pool()[bi]);
      TheoremReport c = verify_theorem(eng, {ad}, {kE}, a, b, 3, SwapRoute::Closed);
      TheoremReport g = verify_theorem(eng, {ad}, {kE}, a, b, 3, SwapRoute::Global);
      EXPECT_TRUE(c.equal && g.equal);
      EXPECT_TRUE(c.lhs.agrees_with(g.lhs));
    }
  }
}

TEST(Coinv, BatchParallelMatchesSerial) {
  auto cases = theorem_cases(77, 8);
  auto par = verify_batch(cases, 3);
  auto ser = verify_batch_serial(cases, 3);
  ASSERT_EQ(par.size(), ser.size());
  for (size_t i = 0; i < par.size(); ++i) {
    EXPECT_EQ(par[i].equal, ser[i].equal);
    EXPECT_EQ(par[i].lhs_terms, ser[i].lhs_terms);
    EXPECT_EQ(par[i].rhs_terms, ser[i].rhs_terms);
  }
}

TEST(Coinv, ClassicalTakingCoinvariants) {
  LoopEngine eng(sl2());
  SiteSpec ad = SiteSpec::adjoint(sl2());
  Coinvariants ctx(eng, {ad, SiteSpec::vacuum(), SiteSpec::vacuum()}, true);
  // no lowering content: 1 (x) m
  TensorState bare = ctx.basis_state({far(kH), vac(), vac()});
  EXPECT_EQ(ctx.reduce(bare), bare);
  // e_{-1}|0> at z_3 against f at z_1: -[e, f]/(z_1 - z_3) = -h/(z_1 - z_3)... with the swap sign
  TensorState st = ctx.basis_state({far(kF), vac(), vac({LoopGen::classical(kE, -1)})});
  TensorState expect;
  expect.add_term({far(kH), vac(), vac()}, CForm(RatFrac::inv_difference(2, 0)));
  EXPECT_EQ(ctx.reduce(st), expect);

  State a = eng.apply_word(std::vector<LoopGen>{LoopGen::classical(kE, -1)});
  State b = eng.apply_word(std::vector<LoopGen>{LoopGen::classical(kF, -1)});
  EXPECT_TRUE(classical_verify(eng, {SiteSpec::trivial()}, {0}, a, b, 4).equal);
  EXPECT_TRUE(classical_verify(eng, {ad}, {kE}, a, b, 4).equal);
  EXPECT_TRUE(classical_verify(eng, {ad}, {kH}, State::vacuum(1), b, 4).equal);
}

TEST(Coinv, ClassicalReduceIsOrderIndependent) {
  LoopEngine eng(sl2());
  SiteSpec ad = SiteSpec::adjoint(sl2());
  Coinvariants ctx(eng, {ad, SiteSpec::vacuum(), SiteSpec::vacuum()}, true);
  const auto& pool = classical_pool();
  std::mt19937_64 rng(4);
  for (int c = 0; c < 20; ++c) {
    State s2 = pool_state(eng, pool[rng() % pool.size()]);
    State s3 = pool_state(eng, pool[rng() % pool.size()]);
    TensorState st;
    for (const auto& [m2, c2] : s2.terms())
      for (const auto& [m3, c3] : s3.terms())
        st.add_term({far(static_cast<int>(rng() % 3)), vac(m2), vac(m3)}, CForm(RatFrac(c2 * c3)));
    EXPECT_EQ(ctx.reduce(st, {3, 2, 1}), ctx.reduce(st, {2, 3, 1})) << c;
    EXPECT_EQ(ctx.reduce(st, {3, 2, 1}), ctx.reduce(st, {1, 2, 3})) << c;
  }
}

TEST(Coinv, ClassicalPoolVerifies) {
  std::vector<TheoremCase> cases;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; b += 3) cases.push_back({a, b, (a + b) % 2 == 1, (a + b) % 2 == 1 ? a % 3 : 0});
  for (const auto& r : verify_batch_serial(cases, 4, true)) EXPECT_TRUE(r.equal);
}

TEST(Coinv, KoszulSignOfOddFarSites) {
  LoopEngine eng(sl2());
  SiteSpec odd = SiteSpec::adjoint(sl2(), 1);
  Coinvariants ctx(eng, {odd, odd, SiteSpec::vacuum()});
  // reordering two odd vectors costs a sign
  TensorState st = ctx.basis_state({far(kE), far(kF), vac()});
  TensorState swapped = permute_sites(st, {2, 1, 3}, ctx);
  TensorState expect;
  expect.add_term({far(kF), far(kE), vac()}, CForm(-1));
  EXPECT_EQ(swapped, expect);
  // reduction commutes with the reordering
  std::mt19937_64 rng(9);
  for (int c = 0; c < 8; ++c) {
    TensorState s = ctx.basis_state({far(static_cast<int>(rng() % 3)), far(static_cast<int>(rng() % 3)),
                                     vac(random_monomial(eng, rng))},
                                    random_coefficient(rng, 3));
    EXPECT_EQ(ctx.reduce(permute_sites(s, {2, 1, 3}, ctx)), permute_sites(ctx.reduce(s), {2, 1, 3}, ctx)) << c;
  }
  // with even vectors the same reordering carries no sign
  Coinvariants even(eng, {SiteSpec::adjoint(sl2()), SiteSpec::adjoint(sl2()), SiteSpec::vacuum()});
  TensorState ev = even.basis_state({far(kE), far(kF), vac()});
  EXPECT_EQ(permute_sites(ev, {2, 1, 3}, even), -expect);
}

TEST(Coinv, MultiSiteFarModules) {
  // Two far sites (N = 4 coefficients would be heavy; N = 3 with both far sites and one vacuum site).
  LoopEngine eng(sl2());
  SiteSpec ad = SiteSpec::adjoint(sl2());
  Coinvariants ctx(eng, {ad, ad, SiteSpec::vacuum()});
  TensorState st = ctx.basis_state({far(kF), far(kE), vac({LoopGen::minus1(kH, 1, 0)})});
  TensorState r = ctx.reduce(st);
  EXPECT_FALSE(r.is_zero());
  // both far sites receive h: [h, f] = -2f, [h, e] = 2e
  std::set<std::pair<int, int>> seen;
  for (const auto& [k, w] : r.terms()) seen.insert({k[0].basis, k[1].basis});
  EXPECT_TRUE(seen.count({kF, kE}));
  EXPECT_EQ(seen.size(), 1u);
}
