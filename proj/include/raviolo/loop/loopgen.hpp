#pragma once

#include "raviolo/local/vform.hpp"
#include "raviolo/loop/lie.hpp"

#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace rav {

// Basis of g (x) C{{z}} used by the vacuum module.
//   Minus0: a (x) e0_m / z^power       (power >= 1, degree 0, e0_m = v^{m+1}(1-v))
//   Minus1: a (x) v^m dv / z^power     (power >= 1, degree 1)
//   Plus0:  a (x) z^power v^m          (power >= 0, degree 0)
//   Plus1:  a (x) z^power v^m dv       (power >= 0, degree 1)
//   Classical: a (x) z^power in g (x) C((z)), minus when power < 0
enum class Mode : unsigned char { Minus0, Minus1, Plus0, Plus1, Classical };

struct LoopGen {
  Mode mode = Mode::Classical;
  int power = 0;
  int m = 0;
  int lie = 0;

  static LoopGen minus0(int lie, int pole, int m) { return {Mode::Minus0, pole, m, lie}; }
  static LoopGen minus1(int lie, int pole, int m) { return {Mode::Minus1, pole, m, lie}; }
  static LoopGen plus0(int lie, int power, int m = 0) { return {Mode::Plus0, power, m, lie}; }
  static LoopGen plus1(int lie, int power, int m = 0) { return {Mode::Plus1, power, m, lie}; }
  static LoopGen classical(int lie, int power) { return {Mode::Classical, power, 0, lie}; }

  int degree() const { return mode == Mode::Minus1 || mode == Mode::Plus1 ? 1 : 0; }
  bool is_minus() const { return mode == Mode::Minus0 || mode == Mode::Minus1 || (mode == Mode::Classical && power < 0); }
  bool is_classical() const { return mode == Mode::Classical; }
  // Exponent of z.
  int zpow() const { return mode == Mode::Minus0 || mode == Mode::Minus1 ? -power : power; }
  int pole() const { return is_minus() ? -zpow() : 0; }
  // v-form part (1 for classical generators).
  VForm vform() const;

  auto order_key() const {
    return std::make_tuple(!is_minus(), degree(), m, pole(), zpow(), lie, static_cast<int>(mode));
  }
  bool operator<(const LoopGen& o) const { return order_key() < o.order_key(); }
  bool operator==(const LoopGen& o) const {
    return mode == o.mode && power == o.power && m == o.m && lie == o.lie;
  }
  bool operator!=(const LoopGen& o) const { return !(*this == o); }
};

using GenCombo = std::vector<std::pair<LoopGen, Rational>>;

// a (x) z^zpow f(v,dv) in the generator basis; for zpow < 0 the form must vanish at v = 0 and v = 1.
GenCombo gens_from_form(int lie, int zpow, const VForm& f, const Rational& scale = 1);
// Graded bracket [X, Y] = [a,b] (x) (x-part * y-part).
GenCombo bracket(const LieData& g, const LoopGen& x, const LoopGen& y);
GenCombo bracket(const LieData& g, const GenCombo& x, const GenCombo& y);
// Differential (acts on the v-form part).
GenCombo d_gen(const LoopGen& x);

// Text forms: (lower e 2 (dv1)), (lower e 1 (v0)), (raise e 3 (v^2 dv)), (mode e -2).
std::string gen_string(const LieData& g, const LoopGen& x);

}  // namespace rav
