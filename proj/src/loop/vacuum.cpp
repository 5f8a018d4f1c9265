#include "raviolo/loop/vacuum.hpp"

#include <stdexcept>

namespace rav {

int monomial_degree(const Monomial& m) {
  int d = 0;
  for (const auto& g : m) d += g.degree();
  return d;
}

int monomial_depth(const Monomial& m) {
  int d = 0;
  for (const auto& g : m) d += g.pole();
  return d;
}

bool is_pbw_sorted(const Monomial& m) {
  for (size_t i = 0; i < m.size(); ++i) {
    if (!m[i].is_minus()) return false;
    if (i == 0) continue;
    if (m[i] < m[i - 1]) return false;
    if (m[i] == m[i - 1] && m[i].degree() == 1) return false;
  }
  return true;
}

std::string monomial_string(const LieData& g, const Monomial& m) {
  std::string out;
  for (const auto& x : m) out += gen_string(g, x) + " ";
  return out + "|0>";
}

const State& LoopEngine::act(const LoopGen& x, const Monomial& m) {
  auto key = std::make_pair(x, m);
  auto it = act_cache_.find(key);
  if (it != act_cache_.end()) return it->second;
  State r = act_uncached(x, m);
  return act_cache_.emplace(std::move(key), std::move(r)).first->second;
}

State LoopEngine::act_uncached(const LoopGen& x, const Monomial& m) {
  if (m.empty()) return x.is_minus() ? State::monomial({x}, 1) : State();
  const LoopGen& y = m.front();
  if (x.is_minus()) {
    if (x < y || (x == y && x.degree() == 0)) {
      Monomial n;
      n.reserve(m.size() + 1);
      n.push_back(x);
      n.insert(n.end(), m.begin(), m.end());
      return State::monomial(n, 1);
    }
    // An odd generator squares to [X,X]/2 = 0 since [a,a] = 0.
    if (x == y) return State();
  }
  Monomial rest(m.begin() + 1, m.end());
  State out;
  State moved = act(x, State::monomial(rest, 1));
  State yx = act(y, moved);
  out += (x.degree() * y.degree() % 2) ? -yx : yx;
  for (const auto& [z, c] : bracket(g_, x, y)) out += act(z, rest).scaled(c);
  return out;
}

State LoopEngine::apply_word(const std::vector<GenCombo>& word) {
  State v = State::vacuum(1);
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = act(*it, v);
  return v;
}

State LoopEngine::apply_word(const std::vector<LoopGen>& word) {
  std::vector<GenCombo> w;
  for (const auto& g : word) w.push_back({{g, Rational(1)}});
  return apply_word(w);
}

const State& LoopEngine::d(const Monomial& m) {
  auto it = d_cache_.find(m);
  if (it != d_cache_.end()) return it->second;
  State out;
  int sign_deg = 0;
  for (size_t i = 0; i < m.size(); ++i) {
    GenCombo dg = d_gen(m[i]);
    if (!dg.empty()) {
      std::vector<GenCombo> word;
      for (size_t j = 0; j < m.size(); ++j) word.push_back(j == i ? dg : GenCombo{{m[j], Rational(1)}});
      State t = apply_word(word);
      out += (sign_deg % 2) ? -t : t;
    }
    sign_deg += m[i].degree();
  }
  return d_cache_.emplace(m, std::move(out)).first->second;
}

State LoopEngine::d(const State& v) {
  State out;
  for (const auto& [m, c] : v.terms()) out += d(m).scaled(c);
  return out;
}

}  // namespace rav
