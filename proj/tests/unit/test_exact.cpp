#include "raviolo/exact/expand.hpp"
#include "raviolo/exact/linalg.hpp"
#include "raviolo/exact/ratfrac.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace rav;
using namespace rav::testing;

namespace {

MultiPoly z(int i) { return MultiPoly::var(i - 1); }

}  // namespace

TEST(RatFrac, NormalizeCancelsSquare) {
  auto d = difference_poly(0, 1);
  RatFrac f = RatFrac::normalize(d * d, {{{0, 1}, 1}});
  EXPECT_EQ(f.numerator(), d);
  EXPECT_TRUE(f.denominator().empty());
}

TEST(RatFrac, NormalizeDifferenceOfSquares) {
  RatFrac f = RatFrac::normalize(z(1) * z(1) - z(2) * z(2), {{{0, 1}, 1}});
  EXPECT_EQ(f.numerator(), z(1) + z(2));
  EXPECT_TRUE(f.denominator().empty());
}

TEST(RatFrac, NormalizeMatchesEvaluation) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    MultiPoly f = random_poly(rng, 3, 4, 3);
    RatFrac g = RatFrac::normalize(f * difference_poly(0, 1), {{{0, 1}, 1}});
    EXPECT_EQ(g.numerator(), f);
    for (int k = 0; k < 20; ++k) {
      auto p = random_point(rng, 3);
      EXPECT_EQ(g.eval(p), f.eval(p));
    }
  }
}

TEST(RatFrac, NormalizeIsIdempotent) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    RatFrac f = random_ratfrac(rng, 4);
    RatFrac g = RatFrac::normalize(f.numerator(), f.denominator());
    EXPECT_EQ(f, g);
  }
}

TEST(RatFrac, Antisymmetry) {
  EXPECT_TRUE((RatFrac::inv_difference(0, 1) + RatFrac::inv_difference(1, 0)).is_zero());
}

TEST(RatFrac, Unit) {
  EXPECT_EQ(RatFrac(difference_poly(0, 1)) * RatFrac::inv_difference(0, 1), RatFrac(1));
}

TEST(RatFrac, RingAxiomsByEvaluation) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    RatFrac a = random_ratfrac(rng, 3), b = random_ratfrac(rng, 3), c = random_ratfrac(rng, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    auto p = random_point(rng, 3);
    EXPECT_EQ((a * b + c).eval(p), a.eval(p) * b.eval(p) + c.eval(p));
  }
}

// Random expression trees: evaluating the tree equals evaluating the normalized result.
TEST(RatFrac, EvaluationHomomorphism) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = random_point(rng, 4);
    std::vector<std::pair<RatFrac, Rational>> pool;
    for (int i = 0; i < 4; ++i) {
      RatFrac f = random_ratfrac(rng, 4);
      pool.emplace_back(f, f.eval(p));
    }
    for (int step = 0; step < 6; ++step) {
      auto& a = pool[rng() % pool.size()];
      auto& b = pool[rng() % pool.size()];
      switch (rng() % 3) {
        case 0: pool.emplace_back(a.first + b.first, a.second + b.second); break;
        case 1: pool.emplace_back(a.first - b.first, a.second - b.second); break;
        default: pool.emplace_back(a.first * b.first, a.second * b.second); break;
      }
    }
    for (const auto& [f, v] : pool) EXPECT_EQ(f.eval(p), v);
  }
}

TEST(RatFrac, Regularity) {
  EXPECT_FALSE((RatFrac(z(1)) * RatFrac::inv_difference(0, 1)).is_regular_in(0, 1));
  EXPECT_TRUE(RatFrac(z(1) + z(2)).is_regular_in(0, 1));
  EXPECT_TRUE(RatFrac::normalize(difference_poly(0, 1), {{{0, 1}, 1}}).is_regular_in(0, 1));
  EXPECT_THROW((void)RatFrac(1).is_regular_in(1, 1), std::invalid_argument);
}

TEST(RatFrac, RegularityStableUnderPolynomialMultiples) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    RatFrac f = random_ratfrac(rng, 3);
    MultiPoly q = random_poly(rng, 3);
    if (q.is_zero()) continue;
    RatFrac g = f * RatFrac(q);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (f.is_regular_in(i, j)) EXPECT_TRUE(g.is_regular_in(i, j));
  }
}

TEST(RatFrac, VanishingAtInfinity) {
  const int w = 2;  // variables z1, z2, w
  EXPECT_TRUE(RatFrac::inv_difference(w, 0).vanishes_at_infinity_in(w));
  EXPECT_FALSE((RatFrac::var(w) * RatFrac::inv_difference(w, 0)).vanishes_at_infinity_in(w));
  EXPECT_TRUE((RatFrac(difference_poly(0, 1)) * RatFrac::inv_difference(w, 0) * RatFrac::inv_difference(w, 1))
                  .vanishes_at_infinity_in(w));
}

TEST(Laurent, ExpandGeometricSeries) {
  // 1/(w - z_i) at w = z_s: sum_k (-1)^k (z_s - z_i)^{-(k+1)} (w - z_s)^k.
  const int w = 2, s = 0, i = 1;
  auto e = laurent_expand(RatFrac::inv_difference(w, i), w, s, 6);
  EXPECT_EQ(e.precision(), 6);
  for (int k = 0; k < 6; ++k) {
    RatFrac expect = RatFrac(Rational(k % 2 ? -1 : 1)) * RatFrac::inv_difference(s, i, k + 1);
    EXPECT_EQ(e.coeff(k), expect) << k;
  }
}

TEST(Laurent, ExpandLocalPole) {
  const int w = 2, s = 0;
  auto e = laurent_expand(RatFrac::inv_difference(w, s), w, s, 4);
  ASSERT_EQ(e.coeffs().size(), 1u);
  EXPECT_EQ(e.coeff(-1), RatFrac(1));
}

TEST(Laurent, ExpandLinearShift) {
  const int w = 2, s = 1;
  auto e = laurent_expand(RatFrac::var(w), w, s, 5);
  ASSERT_EQ(e.coeffs().size(), 2u);
  EXPECT_EQ(e.coeff(0), RatFrac::var(s));
  EXPECT_EQ(e.coeff(1), RatFrac(1));
}

TEST(Laurent, ExpandBelowPoleIsEmpty) {
  const int w = 2, s = 0;
  auto e = laurent_expand(RatFrac::inv_difference(w, s, 3), w, s, -3);
  EXPECT_TRUE(e.is_zero());
  EXPECT_EQ(e.precision(), -3);
}

// Taylor oracle: coefficient k of (w - z_s)^e f equals the k-th w-derivative at w = z_s over k!.
TEST(Laurent, ExpandMatchesTaylorCoefficients) {
  std::mt19937_64 rng(31);
  const int w = 3;
  for (int trial = 0; trial < 15; ++trial) {
    RatFrac f = random_ratfrac(rng, 4, 2);
    int s = static_cast<int>(rng() % 3);
    int es = pole_order(f, w, s);
    RatFrac g = f * RatFrac::difference(w, s, es);
    const int K = 4;
    auto ser = laurent_expand(f, w, s, K);
    auto p = random_point(rng, 4);
    p[w] = p[s];
    RatFrac deriv = g;
    for (int k = 0; k < K + es; ++k) {
      Rational expect = deriv.eval(p) / factorial(k);
      Rational got = ser.coeff(k - es).eval(p);
      EXPECT_EQ(got, expect) << "trial " << trial << " k " << k;
      deriv = deriv.derivative(w);
    }
  }
}

TEST(Laurent, ExpandIsMultiplicative) {
  std::mt19937_64 rng(37);
  const int w = 3;
  for (int trial = 0; trial < 15; ++trial) {
    RatFrac f = random_ratfrac(rng, 4, 1), g = random_ratfrac(rng, 4, 1);
    int s = static_cast<int>(rng() % 3);
    auto a = laurent_expand(f, w, s, 4), b = laurent_expand(g, w, s, 4);
    auto ab = laurent_expand(f * g, w, s, 8);
    auto prod = a * b;
    EXPECT_TRUE(prod.agrees_with(ab)) << trial;
  }
}

TEST(Laurent, ProductAndDerivative) {
  Laurent<Rational> t = Laurent<Rational>::monomial(1, 1), ti = Laurent<Rational>::monomial(-1, 1);
  EXPECT_EQ(ti * t, Laurent<Rational>(Rational(1)));
  auto dti = ti.derivative();
  ASSERT_EQ(dti.coeffs().size(), 1u);
  EXPECT_EQ(dti.coeff(-2), Rational(-1));
}

TEST(Laurent, ProductMatchesConvolution) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    int ma = -static_cast<int>(rng() % 3), mb = -static_cast<int>(rng() % 3);
    long ka = 3 + rng() % 4, kb = 3 + rng() % 4;
    Laurent<Rational> a(ka), b(kb);
    for (int k = ma; k < ka; ++k) a.add_term(k, random_rational(rng));
    for (int k = mb; k < kb; ++k) b.add_term(k, random_rational(rng));
    auto c = a * b;
    long expect_prec = std::min(ka + b.min_degree(), kb + a.min_degree());
    EXPECT_EQ(c.precision(), expect_prec);
    for (long n = std::min(a.min_degree(), b.min_degree()) * 2; n < c.precision(); ++n) {
      Rational s = 0;
      for (int i = ma; i < ka; ++i) {
        int j = static_cast<int>(n) - i;
        if (j < mb || j >= kb) continue;
        s += a.coeff(i) * b.coeff(j);
      }
      EXPECT_EQ(c.coeff(static_cast<int>(n)), s);
    }
  }
}

TEST(LinAlg, RankAndKernel) {
  RMatrix m = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  EXPECT_EQ(rank(m, 3), 2);
  auto ker = kernel(m, 3);
  ASSERT_EQ(ker.size(), 1u);
  for (const auto& row : m) {
    Rational s = 0;
    for (int j = 0; j < 3; ++j) s += row[j] * ker[0][j];
    EXPECT_EQ(s, 0);
  }
}
