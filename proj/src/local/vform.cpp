#include "raviolo/local/vform.hpp"

#include <stdexcept>

namespace rav {

namespace {
Gen fam_gen(int fam) { return make_gen(fam, 0); }
}  // namespace

VForm v_power(int j) {
  if (j == 0) return VForm(1);
  return VForm::term(FormKey{{{v_gen(), j}}, {}}, Rational(1));
}

VForm v_power_dv(int j) {
  FormKey k;
  if (j > 0) k.even = {{v_gen(), j}};
  k.odd = {v_gen()};
  return VForm::term(k, Rational(1));
}

VForm e0(int m) { return v_power(m + 1) - v_power(m + 2); }
VForm e1(int m) { return v_power_dv(m); }

VParts vparts(const VForm& f) {
  VParts p;
  for (const auto& [k, c] : f.terms()) {
    int j = 0;
    for (const auto& [g, e] : k.even) {
      if (g != v_gen()) throw std::invalid_argument("vparts: form involves generators other than v");
      j = e;
    }
    for (Gen g : k.odd)
      if (g != v_gen()) throw std::invalid_argument("vparts: form involves generators other than v");
    auto& target = k.odd.empty() ? p.f0 : p.f1;
    if (static_cast<int>(target.size()) <= j) target.resize(j + 1);
    target[j] += c;
  }
  return p;
}

VForm from_vparts(const VParts& p) {
  VForm f;
  for (size_t j = 0; j < p.f0.size(); ++j) f += v_power(static_cast<int>(j)).scaled(p.f0[j]);
  for (size_t j = 0; j < p.f1.size(); ++j) f += v_power_dv(static_cast<int>(j)).scaled(p.f1[j]);
  return f;
}

Rational v_boundary(const VForm& f, int value) {
  VParts p = vparts(f);
  if (p.f0.empty()) return 0;
  if (value == 0) return p.f0[0];
  Rational s = 0;
  for (const auto& c : p.f0) s += c;
  return s;
}

std::vector<Rational> divide_by_v_one_minus_v(const std::vector<Rational>& f0) {
  if (f0.empty()) return {};
  if (!is_zero(f0[0])) throw std::invalid_argument("degree-0 part does not vanish at v=0");
  std::vector<Rational> h(f0.begin() + 1, f0.end());
  Rational total = 0;
  for (const auto& c : h) total += c;
  if (!is_zero(total)) throw std::invalid_argument("degree-0 part does not vanish at v=1");
  std::vector<Rational> q;
  Rational run = 0;
  for (size_t j = 0; j + 1 < h.size(); ++j) q.push_back(run += h[j]);
  while (!q.empty() && is_zero(q.back())) q.pop_back();
  return q;
}

VForm flip_to_u(const VForm& f) {
  std::map<Gen, VForm> sub{{v_gen(), VForm(1) - VForm::gen(fam_gen(kFamU))}};
  return f.substitute(sub);
}

std::string vform_string(const VForm& f) {
  return f.to_string([](const Rational& q) { return q.get_str(); });
}

}  // namespace rav
