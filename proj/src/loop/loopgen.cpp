#include "raviolo/loop/loopgen.hpp"

#include <map>
#include <stdexcept>

namespace rav {

VForm LoopGen::vform() const {
  switch (mode) {
    case Mode::Minus0:
      return e0(m);
    case Mode::Minus1:
      return e1(m);
    case Mode::Plus0:
      return v_power(m);
    case Mode::Plus1:
      return v_power_dv(m);
    case Mode::Classical:
      break;
  }
  return VForm(1);
}

GenCombo gens_from_form(int lie, int zpow, const VForm& f, const Rational& scale) {
  GenCombo out;
  if (sgn(scale) == 0) return out;
  VParts p = vparts(f);
  if (zpow >= 0) {
    for (size_t j = 0; j < p.f0.size(); ++j)
      if (sgn(p.f0[j]) != 0) out.emplace_back(LoopGen::plus0(lie, zpow, static_cast<int>(j)), scale * p.f0[j]);
  } else {
    std::vector<Rational> q = divide_by_v_one_minus_v(p.f0);
    for (size_t j = 0; j < q.size(); ++j)
      if (sgn(q[j]) != 0) out.emplace_back(LoopGen::minus0(lie, -zpow, static_cast<int>(j)), scale * q[j]);
  }
  for (size_t j = 0; j < p.f1.size(); ++j) {
    if (sgn(p.f1[j]) == 0) continue;
    LoopGen g = zpow >= 0 ? LoopGen::plus1(lie, zpow, static_cast<int>(j)) : LoopGen::minus1(lie, -zpow, static_cast<int>(j));
    out.emplace_back(g, scale * p.f1[j]);
  }
  return out;
}

GenCombo bracket(const LieData& g, const LoopGen& x, const LoopGen& y) {
  GenCombo out;
  if (x.is_classical() != y.is_classical()) throw std::invalid_argument("bracket of classical and raviolo generators");
  const auto& lie = g.bracket(x.lie, y.lie);
  if (lie.empty()) return out;
  const int zpow = x.zpow() + y.zpow();
  if (x.is_classical()) {
    for (const auto& [k, c] : lie) out.emplace_back(LoopGen::classical(k, zpow), c);
    return out;
  }
  VForm f = x.vform() * y.vform();
  if (f.is_zero()) return out;
  for (const auto& [k, c] : lie) {
    GenCombo part = gens_from_form(k, zpow, f, c);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

GenCombo bracket(const LieData& g, const GenCombo& x, const GenCombo& y) {
  std::map<LoopGen, Rational> acc;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y)
      for (const auto& [h, ch] : bracket(g, a, b)) acc[h] += ca * cb * ch;
  GenCombo out;
  for (const auto& [h, c] : acc)
    if (sgn(c) != 0) out.emplace_back(h, c);
  return out;
}

GenCombo d_gen(const LoopGen& x) {
  if (x.is_classical() || x.degree() == 1) return {};
  return gens_from_form(x.lie, x.zpow(), x.vform().d());
}

std::string gen_string(const LieData& g, const LoopGen& x) {
  const std::string a = g.name(x.lie);
  const std::string k = std::to_string(x.power);
  const std::string mm = std::to_string(x.m);
  switch (x.mode) {
    case Mode::Minus0:
      return "(lower " + a + " " + k + " (v" + mm + "))";
    case Mode::Minus1:
      return "(lower " + a + " " + k + " (dv" + (x.m == 0 ? std::string() : mm) + "))";
    case Mode::Plus0:
      return "(raise " + a + " " + k + " (" + (x.m == 0 ? std::string("1") : "v^" + mm) + "))";
    case Mode::Plus1:
      return "(raise " + a + " " + k + " (" + (x.m == 0 ? std::string("dv") : "v^" + mm + " dv") + "))";
    case Mode::Classical:
      break;
  }
  return "(mode " + a + " " + k + ")";
}

}  // namespace rav
