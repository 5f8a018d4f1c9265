#pragma once

#include "raviolo/loop/loopgen.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace rav {

// PBW monomial of lowering generators applied to |0>, sorted by LoopGen order; odd generators never repeat.
using Monomial = std::vector<LoopGen>;

int monomial_degree(const Monomial& m);
// Total pole order of the generators.
int monomial_depth(const Monomial& m);
bool is_pbw_sorted(const Monomial& m);
std::string monomial_string(const LieData& g, const Monomial& m);

inline Rational scale_coeff(const Rational& c, const Rational& s) { return c * s; }
template <class C>
C scale_coeff(const C& c, const Rational& s) {
  return c.scaled(s);
}

// Vacuum-module vector with coefficients in C.
template <class C>
class VacVec {
 public:
  using Terms = std::map<Monomial, C>;

  VacVec() = default;
  static VacVec vacuum(const C& c) {
    VacVec r;
    r.add_term({}, c);
    return r;
  }
  static VacVec monomial(const Monomial& m, const C& c) {
    VacVec r;
    r.add_term(m, c);
    return r;
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add_term(const Monomial& m, const C& c) {
    if (coeff_is_zero(c)) return;
    auto [it, fresh] = t_.try_emplace(m, c);
    if (!fresh) {
      it->second = it->second + c;
      if (coeff_is_zero(it->second)) t_.erase(it);
    }
  }

  VacVec operator-() const {
    VacVec r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
  }
  VacVec& operator+=(const VacVec& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
  }
  VacVec& operator-=(const VacVec& o) { return *this += -o; }
  friend VacVec operator+(VacVec a, const VacVec& b) { return a += b; }
  friend VacVec operator-(VacVec a, const VacVec& b) { return a -= b; }
  friend VacVec operator*(const Rational& s, const VacVec& v) { return v.scaled(s); }
  friend VacVec operator*(const VacVec& v, const Rational& s) { return v.scaled(s); }
  bool operator==(const VacVec& o) const { return t_ == o.t_; }
  bool operator!=(const VacVec& o) const { return !(*this == o); }

  VacVec scaled(const Rational& s) const {
    VacVec r;
    if (sgn(s) == 0) return r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, scale_coeff(c, s));
    return r;
  }

  template <class F>
  auto map_coeffs(F f) const -> VacVec<decltype(f(std::declval<C>()))> {
    VacVec<decltype(f(std::declval<C>()))> r;
    for (const auto& [m, c] : t_) r.add_term(m, f(c));
    return r;
  }

  int depth() const {
    int d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, monomial_depth(m));
    return d;
  }

  std::string to_string(const LieData& g, const std::function<std::string(const C&)>& show) const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : t_) {
      if (!out.empty()) out += " + ";
      out += "(" + show(c) + ") " + monomial_string(g, m);
    }
    return out;
  }

 private:
  Terms t_;
};

template <class C>
bool is_zero(const VacVec<C>& v) {
  return v.is_zero();
}

using State = VacVec<Rational>;

// PBW straightening engine for the vacuum module of g (x) C{{z}} (or g (x) C((z)) with classical generators).
class LoopEngine {
 public:
  explicit LoopEngine(const LieData& g) : g_(g) {}

  const LieData& lie() const { return g_; }

  // X . (m |0>) in PBW normal form.
  const State& act(const LoopGen& x, const Monomial& m);
  template <class C>
  VacVec<C> act(const LoopGen& x, const VacVec<C>& v) {
    VacVec<C> out;
    for (const auto& [m, c] : v.terms())
      for (const auto& [n, s] : act(x, m).terms()) out.add_term(n, scale_coeff(c, s));
    return out;
  }
  template <class C>
  VacVec<C> act(const GenCombo& x, const VacVec<C>& v) {
    VacVec<C> out;
    for (const auto& [g, s] : x) out += act(g, v).scaled(s);
    return out;
  }
  // X^1 ... X^n |0> for arbitrary (unsorted) words, each letter a combination of generators.
  State apply_word(const std::vector<GenCombo>& word);
  State apply_word(const std::vector<LoopGen>& word);

  // Differential of the vacuum module (Leibniz extension of d on generators).
  const State& d(const Monomial& m);
  State d(const State& v);

  std::size_t cache_size() const { return act_cache_.size(); }

 private:
  State act_uncached(const LoopGen& x, const Monomial& m);

  const LieData& g_;
  std::map<std::pair<LoopGen, Monomial>, State> act_cache_;
  std::map<Monomial, State> d_cache_;
};

}  // namespace rav
