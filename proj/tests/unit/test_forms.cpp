#include "raviolo/forms/polyform.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace rav;
using namespace rav::testing;

namespace {

using F = PolyForm<Rational>;

const int kDelta3 = fam_simplex(3);

F u(int fam, int l) { return simplex_u<Rational>(fam, l); }
F du(int fam, int l) { return simplex_du<Rational>(fam, l); }

F random_form(std::mt19937_64& rng, int fam, int maxdeg = 3) {
  int n = family_size(fam);
  F out;
  for (int t = 0; t < 3; ++t) {
    F term(random_rational(rng));
    int deg0 = static_cast<int>(rng() % 3), deg1 = static_cast<int>(rng() % (maxdeg + 1));
    for (int i = 0; i < deg0; ++i) term = term * u(fam, static_cast<int>(rng() % n));
    for (int i = 0; i < deg1; ++i) term = term * du(fam, static_cast<int>(rng() % n));
    out += term;
  }
  return out;
}

// Random point of the simplex (all coordinates, summing to 1) and tangent vectors (summing to 0).
std::vector<Rational> simplex_point(std::mt19937_64& rng, int n) {
  std::vector<Rational> p(n);
  Rational s = 0;
  for (int i = 0; i + 1 < n; ++i) s += p[i] = random_rational(rng);
  p[n - 1] = 1 - s;
  return p;
}
std::vector<Rational> tangent(std::mt19937_64& rng, int n) {
  std::vector<Rational> t(n);
  Rational s = 0;
  for (int i = 0; i + 1 < n; ++i) s += t[i] = random_rational(rng);
  t[n - 1] = -s;
  return t;
}

Rational det(std::vector<std::vector<Rational>> m) {
  int n = static_cast<int>(m.size());
  Rational d = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (int r = c + 1; r < n; ++r) {
      Rational f = m[r][c] / m[c][c];
      for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

// Evaluate a form at point p on tangent vectors ts (only the degree |ts| part contributes).
Rational evaluate(const F& a, const std::vector<Rational>& p, const std::vector<std::vector<Rational>>& ts) {
  Rational total = 0;
  for (const auto& [k, c] : a.terms()) {
    if (k.degree() != static_cast<int>(ts.size())) continue;
    Rational v = c;
    for (const auto& [g, e] : k.even)
      for (int i = 0; i < e; ++i) v *= p[gen_label(g)];
    std::vector<std::vector<Rational>> m(k.odd.size());
    for (size_t i = 0; i < k.odd.size(); ++i)
      for (const auto& t : ts) m[i].push_back(t[gen_label(k.odd[i])]);
    total += v * det(m);
  }
  return total;
}

}  // namespace

TEST(Forms, OddSquareVanishes) {
  F a = du(kDelta3, 1);
  EXPECT_TRUE((a * a).is_zero());
  F b = du(kDelta3, 3);  // eliminated label
  EXPECT_TRUE((b * b).is_zero());
}

TEST(Forms, DegreeZeroCommutes) {
  F x = u(kDelta3, 0) * du(kDelta3, 1), y = du(kDelta3, 1) * u(kDelta3, 0);
  EXPECT_EQ(x, y);
  EXPECT_EQ(key_string(x.terms().begin()->first), "t0*dt1");
}

TEST(Forms, GradedCommutativity) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    F a = random_form(rng, kDelta3), b = random_form(rng, kDelta3);
    for (int p = 0; p <= 3; ++p)
      for (int q = 0; q <= 3; ++q) {
        F ap = a.degree_part(p), bq = b.degree_part(q);
        F lhs = ap * bq, rhs = bq * ap;
        EXPECT_EQ(lhs, (p * q) % 2 ? -rhs : rhs);
      }
  }
}

TEST(Forms, Associativity) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    F a = random_form(rng, kDelta3, 1), b = random_form(rng, kDelta3, 1), c = random_form(rng, kDelta3, 1);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Forms, DifferentialOnInterval) {
  int fam = fam_simplex(1);
  EXPECT_EQ(u(fam, 0).d(), F::dgen(make_gen(fam, 0)));
  EXPECT_EQ(u(fam, 1).d(), -F::dgen(make_gen(fam, 0)));
  F sq = u(fam, 0) * u(fam, 0);
  EXPECT_EQ(sq.d(), F(2) * u(fam, 0) * du(fam, 0));
}

TEST(Forms, DSquaredAndLeibniz) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    F a = random_form(rng, kDelta3), b = random_form(rng, kDelta3, 1);
    EXPECT_TRUE(a.d().d().is_zero());
    for (int p = 0; p <= 3; ++p) {
      F ap = a.degree_part(p);
      F lhs = (ap * b).d();
      F rhs = ap.d() * b + (p % 2 ? -(ap * b.d()) : ap * b.d());
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(Forms, CanonicalFormMatchesPointEvaluation) {
  std::mt19937_64 rng(6);
  const int n = 4;
  for (int trial = 0; trial < 100; ++trial) {
    // Expression c * prod u_l * du_{g1} ^ ... ^ du_{gk} on all labels, evaluated directly.
    int deg0 = static_cast<int>(rng() % 3), deg1 = static_cast<int>(rng() % 4);
    std::vector<int> zs, dz;
    for (int i = 0; i < deg0; ++i) zs.push_back(static_cast<int>(rng() % n));
    for (int i = 0; i < deg1; ++i) dz.push_back(static_cast<int>(rng() % n));
    Rational c = random_rational(rng);
    F form(c);
    for (int l : zs) form = form * u(kDelta3, l);
    for (int l : dz) form = form * du(kDelta3, l);
    auto p = simplex_point(rng, n);
    std::vector<std::vector<Rational>> ts;
    for (int i = 0; i < deg1; ++i) ts.push_back(tangent(rng, n));
    Rational direct = c;
    for (int l : zs) direct *= p[l];
    std::vector<std::vector<Rational>> m(dz.size());
    for (size_t i = 0; i < dz.size(); ++i)
      for (const auto& t : ts) m[i].push_back(t[dz[i]]);
    direct *= det(m);
    EXPECT_EQ(evaluate(form, p, ts), direct);
  }
}

TEST(Forms, PullbackCollapseToPoint) {
  // phi: [1] -> [0]; t_0 -> t_0 + t_1 = 1.
  int f0 = fam_simplex(0);
  (void)f0;
  F one(1);
  EXPECT_EQ(pullback_vertex_map<Rational>({0, 0}, 0, one), one);
}

TEST(Forms, PullbackCoface) {
  // d_0: [0] -> [1] skips 0; pullback of t_0 on Delta^1 vanishes, t_1 becomes 1.
  int f1 = fam_simplex(1);
  EXPECT_TRUE(pullback_vertex_map<Rational>({1}, 1, u(f1, 0)).is_zero());
  EXPECT_EQ(pullback_vertex_map<Rational>({1}, 1, u(f1, 1)), F(1));
  EXPECT_TRUE(pullback_vertex_map<Rational>({1}, 1, du(f1, 0)).is_zero());
}

TEST(Forms, PullbackFunctoriality) {
  std::mt19937_64 rng(8);
  // Composable cofaces psi: [1] -> [2], phi: [2] -> [3].
  for (int trial = 0; trial < 30; ++trial) {
    int skip_phi = static_cast<int>(rng() % 4), skip_psi = static_cast<int>(rng() % 3);
    std::vector<int> phi, psi;
    for (int i = 0; i < 4; ++i)
      if (i != skip_phi) phi.push_back(i);
    for (int i = 0; i < 3; ++i)
      if (i != skip_psi) psi.push_back(i);
    std::vector<int> comp;
    for (int j : psi) comp.push_back(phi[j]);
    F a = random_form(rng, kDelta3, 1);
    F lhs = pullback_vertex_map<Rational>(comp, 3, a);
    F rhs = pullback_vertex_map<Rational>(psi, 2, pullback_vertex_map<Rational>(phi, 3, a));
    EXPECT_EQ(lhs, rhs);
    EXPECT_EQ(pullback_vertex_map<Rational>(phi, 3, a.d()), pullback_vertex_map<Rational>(phi, 3, a).d());
  }
}

TEST(Forms, RestrictFace) {
  int s3 = fam_perm(3);
  EXPECT_TRUE(restrict_face(u(s3, 2), s3, {2}).is_zero());
  F total;
  for (int l = 0; l < 6; ++l) total += u(s3, l);
  EXPECT_EQ(total, F(1));
  EXPECT_EQ(restrict_face(total, s3, {0, 5}), F(1));
  EXPECT_THROW(restrict_face(total, s3, {0, 1, 2, 3, 4, 5}), std::invalid_argument);
}

TEST(Forms, RestrictCommutesWithDAndComposes) {
  std::mt19937_64 rng(9);
  int s3 = fam_perm(3);
  for (int trial = 0; trial < 100; ++trial) {
    F a = random_form(rng, s3, 2);
    std::vector<int> z1, z2;
    for (int l = 0; l < 6; ++l) {
      if (rng() % 3 == 0) z1.push_back(l);
    }
    if (z1.size() >= 5) z1.resize(2);
    std::vector<int> remain;
    for (int l = 0; l < 6; ++l)
      if (std::find(z1.begin(), z1.end(), l) == z1.end()) remain.push_back(l);
    F r = restrict_face(a, s3, z1);
    EXPECT_EQ(r.d(), restrict_face(a.d(), s3, z1));
    // second restriction inside the face
    for (size_t i = 0; i + 1 < remain.size(); ++i)
      if (rng() % 2) z2.push_back(remain[i]);
    std::vector<int> both = z1;
    both.insert(both.end(), z2.begin(), z2.end());
    std::sort(both.begin(), both.end());
    EXPECT_EQ(restrict_face(r, s3, z2, remain), restrict_face(a, s3, both));
  }
}

TEST(Forms, SubstitutionIdentityAndRelationCheck) {
  std::mt19937_64 rng(10);
  F a = random_form(rng, kDelta3);
  std::vector<F> id;
  for (int l = 0; l < 4; ++l) id.push_back(u(kDelta3, l));
  EXPECT_EQ(substitute_family(a, kDelta3, id), a);
  id[0] = F(0);
  EXPECT_THROW(substitute_family(a, kDelta3, id), std::invalid_argument);
}

TEST(Forms, SubstitutionIsDgHomomorphism) {
  std::mt19937_64 rng(12);
  // Delta^3 -> Delta^1 x Delta^1 style assignment built from v and w = t of another simplex.
  int f1 = fam_simplex(1);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<F> images = {u(kFamV, 0) * u(f1, 0), u(kFamV, 1) * u(f1, 0), u(kFamV, 0) * u(f1, 1),
                             u(kFamV, 1) * u(f1, 1)};
    F a = random_form(rng, kDelta3, 2), b = random_form(rng, kDelta3, 1);
    auto sub = [&](const F& x) { return substitute_family(x, kDelta3, images); };
    EXPECT_EQ(sub(a * b), sub(a) * sub(b));
    EXPECT_EQ(sub(a.d()), sub(a).d());
  }
}
