#pragma once

#include "raviolo/coinv/coinv.hpp"

namespace rav {

// The N = 3 example [m@z_1 (x) B@z_2 (x) (a (x) dv/(w - z_3))|0>@z_3] carried through one swap,
// reduction and the expansion in x = z_3 - z_2.
struct WorkedExample {
  std::vector<SiteSpec> sites;  // far, vacuum, vacuum
  TensorState state;
  TensorState swapped;  // swap of the generator at z_3
  TensorState minus_f;  // (-1)^{|m|+|B|} sum over z_1, z_2 of (iota G) acting, G = a (x) dQ/(w - z_3) written out
  Field display;        // the two mode sums at z_2, built term by term
  Field y_field;        // (-1)^{|A||B|} Y(A; x) B
  CoinvSeries lhs;      // expansion of the reduced state
  CoinvSeries display_reduced;
  bool swap_matches = false;
  bool display_matches_y = false;
  bool reduced_match = false;
  bool near_pullback_ok = false;  // p*_{3 -> 2} of the S_3 precedence sum for 3 before 2 is 1 - u

  bool ok() const { return swap_matches && display_matches_y && reduced_match && near_pullback_ok; }
};

// b must be homogeneous.
WorkedExample worked_example(LoopEngine& eng, const SiteSpec& far, int far_basis, int lie_a, const State& b, long K);

}  // namespace rav
