#pragma once

#include "raviolo/exact/linalg.hpp"
#include "raviolo/forms/polyform.hpp"

#include <random>
#include <string>
#include <vector>

namespace rav {

using SimplexForm = PolyForm<Rational>;  // element of Omega([n]) in family fam_simplex(n)

// Finite-dimensional commutative algebra with a chosen basis; products may be truncated.
struct TruncAlgebra {
  std::vector<std::string> basis;
  std::vector<std::vector<RVector>> mult;  // mult[i][j] = e_i e_j in basis coordinates
  RVector unit;

  int dim() const { return static_cast<int>(basis.size()); }
  RVector zero() const { return RVector(basis.size(), Rational(0)); }
  RVector basis_vector(int i) const;
  RVector multiply(const RVector& a, const RVector& b) const;
};

// Levels A([0]), ..., A([L-1]); coface[n][j] : A([n-1]) -> A([n]) for n = 1..L-1, j = 0..n
// (coface[0] is empty). Levels from L on are the zero algebra.
struct SemiCosimplicialCAlg {
  std::vector<TruncAlgebra> levels;
  std::vector<std::vector<RMatrix>> coface;

  int depth() const { return static_cast<int>(levels.size()); }
  RVector apply_coface(int n, int j, const RVector& a) const;
  // A(phi) for the vertex inclusion [0] -> [n], 0 -> i.
  RVector vertex_image(int n, int i, const RVector& a0) const;
};

struct DiagramCheck {
  bool ok = true;
  std::string failure;
};

// Cosimplicial identities d_j d_i = d_i d_{j-1} (i < j), multiplicativity and units on basis elements.
DiagramCheck check_diagram(const SemiCosimplicialCAlg& a);

// Family (omega_n), omega_n = sum_b comps[n][b] (x) e_b in Omega([n]) (x) A([n]).
struct ThElement {
  std::vector<std::vector<SimplexForm>> comps;

  bool operator==(const ThElement& o) const { return comps == o.comps; }
  bool operator!=(const ThElement& o) const { return !(*this == o); }
  bool is_zero() const;
};

ThElement th_zero(const SemiCosimplicialCAlg& a);
ThElement th_add(const ThElement& x, const ThElement& y);
ThElement th_scale(const ThElement& x, const Rational& c);
ThElement th_d(const ThElement& x);
ThElement th_mul(const SemiCosimplicialCAlg& a, const ThElement& x, const ThElement& y);

struct ThValidation {
  bool ok = true;
  int level = -1, face = -1;  // offending coface d_face : [level-1] -> [level]
};

// (A(d_j) (x) id) omega_{n-1} = (id (x) delta_j^*) omega_n for every coface.
ThValidation th_validate(const SemiCosimplicialCAlg& a, const ThElement& x);

// omega_n = sum_i t_i (x) A(vertex_i)(a0).
ThElement th_constant(const SemiCosimplicialCAlg& a, const RVector& a0);
// Family supported on the top level, beta (x) e_b; beta must restrict to zero on every facet.
ThElement th_bubble(const SemiCosimplicialCAlg& a, int b, const SimplexForm& beta);
// Random valid element built from constants, top-level bubbles, products and d.
ThElement th_random(const SemiCosimplicialCAlg& a, std::mt19937_64& rng);

// Face pullback delta_j^* : Omega([n]) -> Omega([n-1]).
SimplexForm face_pullback(int n, int j, const SimplexForm& w);
// Integral over Delta^n (orientation dt_1 ... dt_n) of the degree-n part of w.
Rational simplex_integral(int n, const SimplexForm& w);

using CechCochain = std::vector<RVector>;  // component n in A([n])

CechCochain integrate(const SemiCosimplicialCAlg& a, const ThElement& x);
// (d c)_n = sum_j (-1)^j d_j c_{n-1}.
CechCochain cech_d(const SemiCosimplicialCAlg& a, const CechCochain& c);

struct CechCohomology {
  std::vector<int> ranks;
  std::vector<RVector> h0_basis;  // kernel of C^0 -> C^1
};
CechCohomology cech_cohomology(const SemiCosimplicialCAlg& a);
// Cohomology of the subcomplex of families whose forms have polynomial degree + form degree <= weight.
std::vector<int> th_cohomology(const SemiCosimplicialCAlg& a, int weight);

// C[[z]] x C[[z]] => C((z)) with z-window [-K, K]; the cofaces embed the two factors.
SemiCosimplicialCAlg rav_cover(int K);
// Constant diagram A([n]) = Q[x]/(x^m) with identity cofaces, levels 0..depth-1.
SemiCosimplicialCAlg constant_diagram(int m, int depth);

struct CoverRanks {
  int K = 0;
  std::vector<int> cech, th, local;
  bool agree() const { return cech == th && th == local; }
};
// Ranks for each K (computed in parallel); `local` from the raviolo-local truncated complex.
std::vector<CoverRanks> cover_ranks(const std::vector<int>& Ks, int weight = 2);

}  // namespace rav
