#pragma once

#include "raviolo/exact/laurent.hpp"
#include "raviolo/forms/polyform.hpp"

#include <vector>

namespace rav {

// Polynomial forms in the single variable v: f(v) + F(v) dv.
using VForm = PolyForm<Rational>;

struct VParts {
  std::vector<Rational> f0;  // coefficient of v^j
  std::vector<Rational> f1;  // coefficient of v^j dv
};

inline Gen v_gen() { return make_gen(kFamV, 0); }
inline Gen u_gen() { return make_gen(kFamU, 0); }

VForm v_power(int j);
VForm v_power_dv(int j);
// e0_m = v^{m+1}(1-v), e1_m = v^m dv.
VForm e0(int m);
VForm e1(int m);

VParts vparts(const VForm& f);
VForm from_vparts(const VParts& p);

// Pullback to v = value (0 or 1): the scalar f(value).
Rational v_boundary(const VForm& f, int value);

// Exact quotient f0 / (v(1-v)); throws if f0(0) or f0(1) is nonzero.
std::vector<Rational> divide_by_v_one_minus_v(const std::vector<Rational>& f0);

// Replace v by 1-u and dv by -du.
VForm flip_to_u(const VForm& f);

std::string vform_string(const VForm& f);

}  // namespace rav
