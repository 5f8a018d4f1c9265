#include "raviolo/coinv/worked.hpp"

#include <stdexcept>

namespace rav {

WorkedExample worked_example(LoopEngine& eng, const SiteSpec& far, int far_basis, int lie_a, const State& b, long K) {
  if (!far.is_far()) throw std::invalid_argument("worked_example: site 1 must be a far site");
  int pb = -1;
  for (const auto& [m, c] : b.terms()) {
    int p = monomial_degree(m) % 2;
    if (pb >= 0 && p != pb) throw std::invalid_argument("worked_example: B must be homogeneous");
    pb = p;
  }
  if (pb < 0) pb = 0;
  const int n = 3;
  WorkedExample ex;
  ex.sites = {far, SiteSpec::vacuum(), SiteSpec::vacuum()};
  Coinvariants big(eng, ex.sites);
  const LoopGen x = LoopGen::minus1(lie_a, 1, 0);
  const State a = State::monomial({x}, 1);
  TensorState rest;
  for (const auto& [m, c] : b.terms()) {
    ex.state.add_term({SiteVec{far_basis, {}}, SiteVec{0, m}, SiteVec{0, {x}}}, CForm(RatFrac(c)));
    rest.add_term({SiteVec{far_basis, {}}, SiteVec{0, m}, SiteVec{0, {}}}, CForm(RatFrac(c)));
  }
  ex.swapped = big.swap_at_site(ex.state, n, x);

  CForm g = precedence_sum(n + 1, n, n + 1).d().scaled(RatFrac::inv_difference(n, n - 1));
  TensorState act = big.act_global(GlobalElement{lie_a, g}, rest, {n});
  ex.minus_f = (far.parity + pb) % 2 ? -act : act;
  ex.swap_matches = ex.swapped == -ex.minus_f;

  const int sb = pb ? -1 : 1;
  const UForm minus_du = -UForm::dgen(u_gen());
  ex.display = Field(K);
  for (int k = 0; k < K; ++k)
    ex.display.add_term(k, field_coef(eng.act(LoopGen::minus1(lie_a, k + 1, 0), b).scaled(Rational(sb))));
  for (int k = 0; k <= b.depth(); ++k) {
    State s = eng.act(LoopGen::plus0(lie_a, k, 0), b).scaled(Rational(sb));
    ex.display.add_term(-k - 1, s.map_coeffs([&](const Rational& c) { return minus_du.scaled(c); }));
  }
  Field y = y_rav_recursive(eng, a, b, K);
  ex.y_field = pb ? -y : y;
  ex.display_matches_y = ex.display.agrees_with(ex.y_field, K);

  ex.lhs = expand_coinvariant(big.reduce(ex.state), n, K);
  Coinvariants small(eng, {far, SiteSpec::vacuum()});
  ex.display_reduced = reduce_field(small, {SiteVec{far_basis, {}}}, ex.display, 1);
  ex.reduced_match = ex.lhs.agrees_with(ex.display_reduced);

  CForm near = p_pullback_general(n, n - 1, precedence_sum(n, n, n - 1), n, kFamU);
  ex.near_pullback_ok = near == CForm(1) - CForm::gen(u_gen()) && near.d() == -CForm::dgen(u_gen());
  return ex;
}

}  // namespace rav
