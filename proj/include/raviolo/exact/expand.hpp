#pragma once

#include "raviolo/exact/laurent.hpp"
#include "raviolo/exact/ratfrac.hpp"

namespace rav {

// Laurent expansion of f in t = z_var - z_s (z_s and the other variables fixed),
// exact below exponent K. Coefficients no longer involve z_var.
Laurent<RatFrac> laurent_expand(const RatFrac& f, int var, int s, long K);

// Pole order of f along z_var = z_s.
int pole_order(const RatFrac& f, int var, int s);

}  // namespace rav
