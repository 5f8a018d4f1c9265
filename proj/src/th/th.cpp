#include "raviolo/th/th.hpp"

#include "raviolo/local/local.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace rav {

namespace {

RVector mat_vec(const RMatrix& m, const RVector& x) {
  RVector out(m.size(), Rational(0));
  for (size_t r = 0; r < m.size(); ++r)
    for (size_t c = 0; c < x.size(); ++c)
      if (!is_zero(m[r][c]) && !is_zero(x[c])) out[r] += m[r][c] * x[c];
  return out;
}

RMatrix mat_mul(const RMatrix& a, const RMatrix& b, int inner, int cols) {
  RMatrix out(a.size(), RVector(cols, Rational(0)));
  for (size_t r = 0; r < a.size(); ++r)
    for (int k = 0; k < inner; ++k)
      if (!is_zero(a[r][k]))
        for (int c = 0; c < cols; ++c) out[r][c] += a[r][k] * b[k][c];
  return out;
}

SimplexForm t(int n, int i) { return simplex_u<Rational>(fam_simplex(n), i); }

// Form monomials on Delta^n of form degree p and polynomial degree <= maxdeg.
std::vector<FormKey> form_monomials(int n, int p, int maxdeg) {
  std::vector<FormKey> out;
  if (p > n || maxdeg < 0) return out;
  std::vector<std::vector<Gen>> odd_sets;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != p) continue;
    std::vector<Gen> odd;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) odd.push_back(make_gen(fam_simplex(n), i));
    odd_sets.push_back(odd);
  }
  std::vector<std::vector<std::pair<Gen, int>>> evens{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<std::pair<Gen, int>>> next;
    for (const auto& e : evens) {
      int used = 0;
      for (const auto& [g, k] : e) used += k;
      for (int k = 0; used + k <= maxdeg; ++k) {
        auto f = e;
        if (k > 0) f.emplace_back(make_gen(fam_simplex(n), i), k);
        next.push_back(f);
      }
    }
    evens = std::move(next);
  }
  for (const auto& o : odd_sets)
    for (const auto& e : evens) out.push_back(FormKey{e, o});
  return out;
}

using DefectKey = std::tuple<int, int, int, FormKey>;

std::map<DefectKey, Rational> defect(const SemiCosimplicialCAlg& a, const ThElement& x) {
  std::map<DefectKey, Rational> out;
  for (int n = 1; n < a.depth(); ++n) {
    for (int j = 0; j <= n; ++j) {
      const RMatrix& m = a.coface[n][j];
      for (int b = 0; b < a.levels[n].dim(); ++b) {
        SimplexForm diff = -face_pullback(n, j, x.comps[n][b]);
        for (int c = 0; c < a.levels[n - 1].dim(); ++c)
          if (!is_zero(m[b][c])) diff += x.comps[n - 1][c].scaled(m[b][c]);
        for (const auto& [k, r] : diff.terms()) out[{n, j, b, k}] = r;
      }
    }
  }
  return out;
}

}  // namespace

RVector TruncAlgebra::basis_vector(int i) const {
  RVector v = zero();
  v.at(i) = 1;
  return v;
}

RVector TruncAlgebra::multiply(const RVector& a, const RVector& b) const {
  RVector out = zero();
  for (int i = 0; i < dim(); ++i) {
    if (is_zero(a[i])) continue;
    for (int j = 0; j < dim(); ++j) {
      if (is_zero(b[j])) continue;
      const Rational c = a[i] * b[j];
      for (int k = 0; k < dim(); ++k)
        if (!is_zero(mult[i][j][k])) out[k] += c * mult[i][j][k];
    }
  }
  return out;
}

RVector SemiCosimplicialCAlg::apply_coface(int n, int j, const RVector& x) const {
  return mat_vec(coface.at(n).at(j), x);
}

RVector SemiCosimplicialCAlg::vertex_image(int n, int i, const RVector& a0) const {
  if (n == 0) return a0;
  if (i < n) return apply_coface(n, n, vertex_image(n - 1, i, a0));
  return apply_coface(n, 0, vertex_image(n - 1, n - 1, a0));
}

DiagramCheck check_diagram(const SemiCosimplicialCAlg& a) {
  auto fail = [](const std::string& s) { return DiagramCheck{false, s}; };
  if (a.levels.empty()) return fail("no levels");
  if (static_cast<int>(a.coface.size()) != a.depth()) return fail("one coface list per level");
  for (int n = 0; n < a.depth(); ++n) {
    const TruncAlgebra& A = a.levels[n];
    const int d = A.dim();
    if (static_cast<int>(A.unit.size()) != d || static_cast<int>(A.mult.size()) != d)
      return fail("level " + std::to_string(n) + ": table sizes");
    for (int i = 0; i < d; ++i) {
      if (static_cast<int>(A.mult[i].size()) != d) return fail("level " + std::to_string(n) + ": table sizes");
      if (A.multiply(A.unit, A.basis_vector(i)) != A.basis_vector(i))
        return fail("level " + std::to_string(n) + ": unit");
      for (int j = 0; j < d; ++j)
        if (A.mult[i][j] != A.mult[j][i]) return fail("level " + std::to_string(n) + ": not commutative");
    }
    if (n == 0) continue;
    if (static_cast<int>(a.coface[n].size()) != n + 1) return fail("level " + std::to_string(n) + ": coface count");
    const TruncAlgebra& P = a.levels[n - 1];
    for (int j = 0; j <= n; ++j) {
      const std::string tag = "d_" + std::to_string(j) + " into level " + std::to_string(n);
      const RMatrix& m = a.coface[n][j];
      if (static_cast<int>(m.size()) != d) return fail(tag + ": shape");
      for (const auto& row : m)
        if (static_cast<int>(row.size()) != P.dim()) return fail(tag + ": shape");
      if (mat_vec(m, P.unit) != A.unit) return fail(tag + ": unit");
      for (int i = 0; i < P.dim(); ++i)
        for (int k = 0; k < P.dim(); ++k)
          if (mat_vec(m, P.multiply(P.basis_vector(i), P.basis_vector(k))) !=
              A.multiply(mat_vec(m, P.basis_vector(i)), mat_vec(m, P.basis_vector(k))))
            return fail(tag + ": not multiplicative");
    }
  }
  for (int n = 1; n + 1 < a.depth(); ++n) {
    const int d = a.levels[n].dim(), cols = a.levels[n - 1].dim();
    for (int j = 1; j <= n + 1; ++j)
      for (int i = 0; i < j; ++i)
        if (mat_mul(a.coface[n + 1][j], a.coface[n][i], d, cols) != mat_mul(a.coface[n + 1][i], a.coface[n][j - 1], d, cols))
          return fail("d_" + std::to_string(j) + " d_" + std::to_string(i) + " != d_" + std::to_string(i) + " d_" +
                      std::to_string(j - 1) + " into level " + std::to_string(n + 1));
  }
  return {};
}

bool ThElement::is_zero() const {
  for (const auto& lv : comps)
    for (const auto& w : lv)
      if (!w.is_zero()) return false;
  return true;
}

ThElement th_zero(const SemiCosimplicialCAlg& a) {
  ThElement x;
  for (const auto& lv : a.levels) x.comps.emplace_back(lv.dim());
  return x;
}

ThElement th_add(const ThElement& x, const ThElement& y) {
  ThElement out = x;
  for (size_t n = 0; n < out.comps.size(); ++n)
    for (size_t b = 0; b < out.comps[n].size(); ++b) out.comps[n][b] += y.comps[n][b];
  return out;
}

ThElement th_scale(const ThElement& x, const Rational& c) {
  ThElement out = x;
  for (auto& lv : out.comps)
    for (auto& w : lv) w = w.scaled(c);
  return out;
}

ThElement th_d(const ThElement& x) {
  ThElement out = x;
  for (auto& lv : out.comps)
    for (auto& w : lv) w = w.d();
  return out;
}

ThElement th_mul(const SemiCosimplicialCAlg& a, const ThElement& x, const ThElement& y) {
  ThElement out = th_zero(a);
  for (int n = 0; n < a.depth(); ++n) {
    const TruncAlgebra& A = a.levels[n];
    for (int i = 0; i < A.dim(); ++i) {
      if (x.comps[n][i].is_zero()) continue;
      for (int j = 0; j < A.dim(); ++j) {
        if (y.comps[n][j].is_zero()) continue;
        SimplexForm w = x.comps[n][i] * y.comps[n][j];
        for (int k = 0; k < A.dim(); ++k)
          if (!is_zero(A.mult[i][j][k])) out.comps[n][k] += w.scaled(A.mult[i][j][k]);
      }
    }
  }
  return out;
}

ThValidation th_validate(const SemiCosimplicialCAlg& a, const ThElement& x) {
  if (static_cast<int>(x.comps.size()) != a.depth()) throw std::invalid_argument("family has the wrong number of levels");
  auto bad = defect(a, x);
  if (bad.empty()) return {};
  const auto& [n, j, b, k] = bad.begin()->first;
  return {false, n, j};
}

ThElement th_constant(const SemiCosimplicialCAlg& a, const RVector& a0) {
  ThElement x = th_zero(a);
  for (int n = 0; n < a.depth(); ++n)
    for (int i = 0; i <= n; ++i) {
      RVector img = a.vertex_image(n, i, a0);
      for (int b = 0; b < a.levels[n].dim(); ++b)
        if (!is_zero(img[b])) x.comps[n][b] += t(n, i).scaled(img[b]);
    }
  return x;
}

ThElement th_bubble(const SemiCosimplicialCAlg& a, int b, const SimplexForm& beta) {
  const int top = a.depth() - 1;
  for (int j = 0; j <= top && top > 0; ++j)
    if (!face_pullback(top, j, beta).is_zero()) throw std::invalid_argument("bubble form does not vanish on a facet");
  ThElement x = th_zero(a);
  x.comps[top].at(b) = beta;
  return x;
}

ThElement th_random(const SemiCosimplicialCAlg& a, std::mt19937_64& rng) {
  auto small = [&] { return Rational(static_cast<long>(rng() % 7) - 3); };
  auto vec0 = [&] {
    RVector v = a.levels[0].zero();
    for (int k = 0; k < 2; ++k) v[rng() % v.size()] += small();
    return v;
  };
  const int top = a.depth() - 1;
  auto bubble = [&] {
    SimplexForm beta(Rational(1));
    for (int i = 0; i <= top; ++i) beta *= t(top, i);
    if (top > 0) {
      SimplexForm extra = SimplexForm(small()) + t(top, static_cast<int>(rng() % (top + 1))).scaled(small());
      if (rng() % 2) extra = extra * simplex_du<Rational>(fam_simplex(top), static_cast<int>(rng() % (top + 1)));
      beta *= extra;
    }
    return th_bubble(a, static_cast<int>(rng() % a.levels[top].dim()), beta);
  };
  ThElement x = th_mul(a, th_constant(a, vec0()), th_constant(a, vec0()));
  x = th_add(x, th_d(th_mul(a, th_constant(a, vec0()), th_constant(a, vec0()))));
  x = th_add(x, th_scale(bubble(), small()));
  x = th_add(x, th_mul(a, th_constant(a, vec0()), bubble()));
  if (top > 0) {
    SimplexForm vol(Rational(1));
    for (int i = 0; i < top; ++i) vol *= simplex_du<Rational>(fam_simplex(top), i);
    x = th_add(x, th_bubble(a, static_cast<int>(rng() % a.levels[top].dim()), vol.scaled(small())));
  }
  return x;
}

SimplexForm face_pullback(int n, int j, const SimplexForm& w) {
  if (n < 1 || j < 0 || j > n) throw std::invalid_argument("face_pullback: no such face");
  std::vector<int> phi;
  for (int i = 0; i <= n; ++i)
    if (i != j) phi.push_back(i);
  return pullback_vertex_map(phi, n, w);
}

Rational simplex_integral(int n, const SimplexForm& w) {
  Rational total = 0;
  for (const auto& [k, c] : w.terms()) {
    if (k.degree() != n) continue;
    long sum = 0;
    Rational num = 1;
    for (const auto& [g, e] : k.even) {
      num *= factorial(e);
      sum += e;
    }
    total += c * num / factorial(sum + n);
  }
  return n % 2 ? -total : total;
}

CechCochain integrate(const SemiCosimplicialCAlg& a, const ThElement& x) {
  CechCochain out;
  for (int n = 0; n < a.depth(); ++n) {
    RVector v = a.levels[n].zero();
    for (int b = 0; b < a.levels[n].dim(); ++b) v[b] = simplex_integral(n, x.comps[n][b]);
    out.push_back(v);
  }
  return out;
}

CechCochain cech_d(const SemiCosimplicialCAlg& a, const CechCochain& c) {
  CechCochain out;
  out.push_back(a.levels[0].zero());
  for (int n = 1; n < a.depth(); ++n) {
    RVector v = a.levels[n].zero();
    for (int j = 0; j <= n; ++j) {
      RVector img = a.apply_coface(n, j, c[n - 1]);
      for (size_t b = 0; b < v.size(); ++b) v[b] += j % 2 ? -img[b] : img[b];
    }
    out.push_back(v);
  }
  return out;
}

CechCohomology cech_cohomology(const SemiCosimplicialCAlg& a) {
  const int L = a.depth();
  std::vector<RMatrix> D(L + 1);
  std::vector<int> r(L + 1, 0);
  for (int n = 1; n < L; ++n) {
    RMatrix m(a.levels[n].dim(), RVector(a.levels[n - 1].dim(), Rational(0)));
    for (int j = 0; j <= n; ++j)
      for (size_t row = 0; row < m.size(); ++row)
        for (size_t col = 0; col < m[row].size(); ++col)
          m[row][col] += j % 2 ? -a.coface[n][j][row][col] : a.coface[n][j][row][col];
    r[n] = rank(m, a.levels[n - 1].dim());
    D[n] = std::move(m);
  }
  CechCohomology out;
  for (int n = 0; n < L; ++n) out.ranks.push_back(a.levels[n].dim() - r[n + 1] - r[n]);
  out.h0_basis = kernel(L > 1 ? D[1] : RMatrix{}, a.levels[0].dim());
  return out;
}

std::vector<int> th_cohomology(const SemiCosimplicialCAlg& a, int weight) {
  const int L = a.depth();
  using Coord = std::tuple<int, int, FormKey>;
  std::vector<std::vector<Coord>> coords(L + 1);
  std::vector<std::map<Coord, int>> index(L + 1);
  for (int p = 0; p <= L; ++p)
    for (int n = p; n < L; ++n)
      for (int b = 0; b < a.levels[n].dim(); ++b)
        for (const auto& k : form_monomials(n, p, weight - p)) {
          index[p][{n, b, k}] = static_cast<int>(coords[p].size());
          coords[p].push_back({n, b, k});
        }
  auto element = [&](int p, const RVector& x) {
    ThElement e = th_zero(a);
    for (size_t i = 0; i < x.size(); ++i) {
      if (is_zero(x[i])) continue;
      const auto& [n, b, k] = coords[p][i];
      e.comps[n][b] += SimplexForm::term(k, x[i]);
    }
    return e;
  };
  std::vector<std::vector<RVector>> cycles(L + 1);
  for (int p = 0; p <= L; ++p) {
    const int cols = static_cast<int>(coords[p].size());
    std::map<DefectKey, int> rows;
    std::vector<std::tuple<int, int, Rational>> entries;
    for (int c = 0; c < cols; ++c) {
      RVector unit(cols, Rational(0));
      unit[c] = 1;
      for (const auto& [key, r] : defect(a, element(p, unit))) {
        auto it = rows.emplace(key, static_cast<int>(rows.size())).first;
        entries.emplace_back(it->second, c, r);
      }
    }
    RMatrix m(rows.size(), RVector(cols, Rational(0)));
    for (const auto& [row, col, r] : entries) m[row][col] = r;
    cycles[p] = kernel(m, cols);
  }
  std::vector<int> rk(L + 2, 0);
  for (int p = 0; p < L; ++p) {
    const int cols = static_cast<int>(coords[p + 1].size());
    RMatrix img;
    for (const auto& z : cycles[p]) {
      ThElement dz = th_d(element(p, z));
      RVector row(cols, Rational(0));
      for (int n = 0; n < L; ++n)
        for (int b = 0; b < a.levels[n].dim(); ++b)
          for (const auto& [k, r] : dz.comps[n][b].terms()) row.at(index[p + 1].at({n, b, k})) = r;
      img.push_back(std::move(row));
    }
    rk[p + 1] = rank(img, cols);
  }
  std::vector<int> out;
  for (int p = 0; p < L; ++p) out.push_back(static_cast<int>(cycles[p].size()) - rk[p + 1] - rk[p]);
  return out;
}

SemiCosimplicialCAlg rav_cover(int K) {
  if (K < 1) throw std::invalid_argument("rav_cover needs K >= 1");
  SemiCosimplicialCAlg a;
  TruncAlgebra l0, l1;
  const int d0 = 2 * (K + 1), d1 = 2 * K + 1;
  for (int s = 1; s <= 2; ++s)
    for (int k = 0; k <= K; ++k) l0.basis.push_back("z^" + std::to_string(k) + "@" + std::to_string(s));
  for (int k = -K; k <= K; ++k) l1.basis.push_back("z^" + std::to_string(k));
  l0.mult.assign(d0, std::vector<RVector>(d0, RVector(d0, Rational(0))));
  for (int s = 0; s < 2; ++s)
    for (int i = 0; i <= K; ++i)
      for (int j = 0; i + j <= K; ++j) l0.mult[s * (K + 1) + i][s * (K + 1) + j][s * (K + 1) + i + j] = 1;
  l0.unit = l0.zero();
  l0.unit[0] = l0.unit[K + 1] = 1;
  l1.mult.assign(d1, std::vector<RVector>(d1, RVector(d1, Rational(0))));
  for (int i = -K; i <= K; ++i)
    for (int j = -K; j <= K; ++j)
      if (i + j >= -K && i + j <= K) l1.mult[i + K][j + K][i + j + K] = 1;
  l1.unit = l1.basis_vector(K);
  a.levels = {l0, l1};
  // d_0 forgets patch 0 (restricts the second factor), d_1 restricts the first
  RMatrix first(d1, RVector(d0, Rational(0))), second = first;
  for (int k = 0; k <= K; ++k) {
    first[k + K][k] = 1;
    second[k + K][K + 1 + k] = 1;
  }
  a.coface = {{}, {second, first}};
  return a;
}

SemiCosimplicialCAlg constant_diagram(int m, int depth) {
  SemiCosimplicialCAlg a;
  TruncAlgebra A;
  for (int i = 0; i < m; ++i) A.basis.push_back("x^" + std::to_string(i));
  A.mult.assign(m, std::vector<RVector>(m, RVector(m, Rational(0))));
  for (int i = 0; i < m; ++i)
    for (int j = 0; i + j < m; ++j) A.mult[i][j][i + j] = 1;
  A.unit = A.basis_vector(0);
  RMatrix id(m, RVector(m, Rational(0)));
  for (int i = 0; i < m; ++i) id[i][i] = 1;
  for (int n = 0; n < depth; ++n) {
    a.levels.push_back(A);
    a.coface.push_back(n == 0 ? std::vector<RMatrix>{} : std::vector<RMatrix>(n + 1, id));
  }
  return a;
}

std::vector<CoverRanks> cover_ranks(const std::vector<int>& Ks, int weight) {
  std::vector<CoverRanks> out(Ks.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < static_cast<int>(Ks.size()); ++i) {
    SemiCosimplicialCAlg a = rav_cover(Ks[i]);
    CohomologyTable t = cohomology_truncated(Ks[i], 2);
    out[i] = {Ks[i], cech_cohomology(a).ranks, th_cohomology(a, weight), {t.h0, t.h1}};
  }
  return out;
}

}  // namespace rav
