#pragma once

#include "raviolo/exact/laurent.hpp"
#include "raviolo/loop/vacuum.hpp"

#include <string>
#include <vector>

namespace rav {

// Polynomial forms in the external variable u.
using UForm = PolyForm<Rational>;
// Coefficient of a field: sum of u-forms tensored with states (forms to the left).
using FieldCoef = VacVec<UForm>;
// Element of V{{x}} truncated below x^K.
using Field = Laurent<FieldCoef>;

FieldCoef field_coef(const State& s);
std::string field_string(const LieData& g, const Field& f);

// One term of a mode expansion: x^power * form * gen.
struct ModeTerm {
  int power;
  Rational coeff;
  UForm form;
  LoopGen gen;
};

// X_+(x) for x^j, j < K; X_-(x) for k < depth_bound (the plus modes a (x) z^k with k >= depth kill
// any state of that depth).
std::vector<ModeTerm> x_plus_modes(const LoopGen& x, long K);
std::vector<ModeTerm> x_minus_modes(const LoopGen& x, int depth_bound);

// Applies a single mode term to a field (Koszul sign for moving the generator past forms).
Field apply_mode(LoopEngine& eng, const ModeTerm& t, const Field& f, long K);

// Y(A; x) B by the defining recursion, exact below x^K.
Field y_rav_recursive(LoopEngine& eng, const State& a, const State& b, long K);
// Classical level-zero Y(A; x) B in V((x)) (same recursion, generators a (x) z^n).
Field y_classical(LoopEngine& eng, const State& a, const State& b, long K);
// Y(A; x) B by the unshuffle formula (either kind of generator).
Field y_rav_explicit(LoopEngine& eng, const State& a, const State& b, long K);

// Koszul sign of an unshuffle (mu, nu) of X^1..X^n: X^1..X^n = sign X^mu_1..X^mu_m X^nu_{n-m}..X^nu_1.
// Indices are 1-based. Throws on an invalid unshuffle.
int unshuffle_sign(const std::vector<int>& parities, const std::vector<int>& mu, const std::vector<int>& nu);

// Boundary predicate of V{{x}}: the pullbacks to u = 0 and u = 1 have no negative powers of x.
bool field_boundary_ok(const Field& f);

// Chain map defect d(Y(A)B) - Y(dA)B - (-1)^{|A|} Y(A)dB for homogeneous A.
Field chain_map_defect(LoopEngine& eng, const State& a, const State& b, long K);

}  // namespace rav
