#include "raviolo/exact/expand.hpp"

#include <stdexcept>

namespace rav {

int pole_order(const RatFrac& f, int var, int s) { return f.den_exponent(var, s); }

Laurent<RatFrac> laurent_expand(const RatFrac& f, int var, int s, long K) {
  if (var == s) throw std::invalid_argument("laurent_expand: expansion variable equals base point");
  int es = pole_order(f, var, s);
  Laurent<RatFrac> out(K);
  if (f.is_zero() || K <= -es) return out;
  long need = K + es;  // precision of the regular factor

  // Regular factor: numerator after the shift z_var = z_s + t.
  Laurent<RatFrac> reg(need);
  {
    auto cs = f.numerator().shift_expand(var, s);
    for (size_t b = 0; b < cs.size(); ++b) reg.add_term(static_cast<int>(b), RatFrac(cs[b]));
  }
  RatFrac rest(1);
  for (const auto& [p, e] : f.denominator()) {
    auto [i, j] = p;
    if (i != var && j != var) {
      rest = rest * RatFrac::inv_difference(i, j, e);
      continue;
    }
    int other = i == var ? j : i;
    if (other == s) continue;
    // Factor (z_i - z_j)^{-e} with z_var = z_s + t. Write it as sign * (c - t)^{-e}, c = z_other - z_s.
    // (c - t)^{-e} = c^{-e} sum_k C(e+k-1,k) (t/c)^k.
    bool var_first = (i == var);
    Laurent<RatFrac> g(need);
    for (long k = 0; k < need; ++k) {
      RatFrac coef = RatFrac(binomial(e + k - 1, k)) * RatFrac::inv_difference(other, s, e + static_cast<int>(k));
      if (var_first && (e % 2)) coef = -coef;  // (z_var - z_other) = -(c - t)
      g.add_term(static_cast<int>(k), coef);
    }
    reg = reg * g;
  }
  // Factor (z_var - z_s) or (z_s - z_var) to the -es: sign * t^{-es}.
  bool sign_flip = false;
  if (es > 0) {
    bool var_first = var < s;
    sign_flip = !var_first && (es % 2);
  }
  RatFrac scale = sign_flip ? -rest : rest;
  for (const auto& [k, c] : reg.coeffs()) out.add_term(k - es, c * scale);
  return out;
}

}  // namespace rav
