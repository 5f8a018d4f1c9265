#include "raviolo/loop/statefield.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace rav {

namespace {

int form_degree_parity(const FormKey& k) { return static_cast<int>(k.odd.size()) % 2; }

// Split a u-form into parity-homogeneous parts.
std::pair<UForm, UForm> parity_parts(const UForm& w) {
  UForm even, odd;
  for (const auto& [k, c] : w.terms()) (form_degree_parity(k) ? odd : even).add_term(k, c);
  return {even, odd};
}

// Left multiplication by a form, leaving the Koszul sign to the caller.
FieldCoef wedge_left(const UForm& w, const FieldCoef& c) {
  FieldCoef out;
  for (const auto& [m, f] : c.terms()) out.add_term(m, w * f);
  return out;
}

Field wedge_left(const UForm& w, const Field& f) {
  Field out(f.precision());
  for (const auto& [n, c] : f.coeffs()) out.add_term(n, wedge_left(w, c));
  return out;
}

std::string uform_string(const UForm& w) {
  return w.to_string([](const Rational& q) { return q.get_str(); });
}

Field d_field(LoopEngine& eng, const Field& f) {
  Field out(f.precision());
  for (const auto& [n, c] : f.coeffs()) {
    FieldCoef acc;
    for (const auto& [m, w] : c.terms()) {
      acc.add_term(m, w.d());
      auto [even, odd] = parity_parts(w);
      for (const auto& [mm, s] : eng.d(m).terms()) acc.add_term(mm, (even - odd).scaled(s));
    }
    out.add_term(n, acc);
  }
  return out;
}

// Y(M|0>; x) applied to (1 (x) m), exact below x^K; memoised per call tree.
class RecursiveY {
 public:
  explicit RecursiveY(LoopEngine& eng) : eng_(eng) {}

  Field core(const Monomial& M, const Monomial& m, long K) {
    auto key = std::make_tuple(M, m, K);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Field r = compute(M, m, K);
    cache_.emplace(std::move(key), r);
    return r;
  }

  // Y(M) on a field: x^n omega (x) m  ->  (-1)^{|M||omega|} x^n omega Y(M) m.
  Field on_field(const Monomial& M, const Field& c, long K) {
    Field out(K);
    const int degM = monomial_degree(M) % 2;
    for (const auto& [n, coef] : c.coeffs()) {
      if (n >= K) continue;
      for (const auto& [m, w] : coef.terms()) {
        Field y = core(M, m, K - n).shifted(n);
        auto [even, odd] = parity_parts(w);
        UForm signed_w = degM ? even - odd : w;
        out += wedge_left(signed_w, y);
      }
    }
    return out.truncated(K);
  }

 private:
  Field compute(const Monomial& M, const Monomial& m, long K) {
    Field unit = Field::monomial(0, FieldCoef::monomial(m, UForm(1)), K);
    if (M.empty()) return unit;
    const LoopGen& x = M.front();
    Monomial rest(M.begin() + 1, M.end());
    Field y = core(rest, m, K);
    Field out(K);
    for (const auto& t : x_plus_modes(x, K - std::min<long>(0, y.min_degree()))) out += apply_mode(eng_, t, y, K);
    Field minus;
    for (const auto& t : x_minus_modes(x, monomial_depth(m))) minus += apply_mode(eng_, t, Field(FieldCoef::monomial(m, UForm(1))), kExact);
    Field second = on_field(rest, minus, K);
    out += (x.degree() * monomial_degree(rest) % 2) ? -second : second;
    return out;
  }

  LoopEngine& eng_;
  std::map<std::tuple<Monomial, Monomial, long>, Field> cache_;
};

}  // namespace

FieldCoef field_coef(const State& s) {
  return s.map_coeffs([](const Rational& c) { return UForm(c); });
}

std::string field_string(const LieData& g, const Field& f) {
  return f.to_string("x", [&](const FieldCoef& c) { return c.to_string(g, uform_string); });
}

std::vector<ModeTerm> x_plus_modes(const LoopGen& x, long K) {
  if (!x.is_minus()) throw std::invalid_argument("x_plus_modes: expects a lowering generator");
  std::vector<ModeTerm> out;
  const int l = x.pole();
  for (long j = 0; j < K; ++j) {
    LoopGen g = x;
    if (x.is_classical()) g.power = -(l + static_cast<int>(j));
    else g.power = l + static_cast<int>(j);
    out.push_back({static_cast<int>(j), binomial(j + l - 1, j), UForm(1), g});
  }
  return out;
}

std::vector<ModeTerm> x_minus_modes(const LoopGen& x, int depth_bound) {
  if (!x.is_minus()) throw std::invalid_argument("x_minus_modes: expects a lowering generator");
  std::vector<ModeTerm> out;
  const int l = x.pole();
  UForm form = x.is_classical() ? UForm(1) : flip_to_u(x.vform());
  const Rational sign = (l - 1) % 2 ? -1 : 1;
  for (int k = 0; k < depth_bound; ++k) {
    LoopGen g = x.is_classical() ? LoopGen::classical(x.lie, k) : LoopGen::plus0(x.lie, k, 0);
    out.push_back({-k - l, sign * binomial(k + l - 1, k), form, g});
  }
  return out;
}

Field apply_mode(LoopEngine& eng, const ModeTerm& t, const Field& f, long K) {
  long prec = f.is_exact() ? K : std::min<long>(K, f.precision() + t.power);
  Field out(prec);
  for (const auto& [n, c] : f.coeffs()) {
    if (n + t.power >= prec) continue;
    FieldCoef acc;
    for (const auto& [m, w] : c.terms()) {
      const State& moved = eng.act(t.gen, m);
      if (moved.is_zero()) continue;
      UForm signed_w = w;
      if (t.gen.degree() % 2) {
        auto [even, odd] = parity_parts(w);
        signed_w = even - odd;
      }
      UForm lead = (t.form * signed_w).scaled(t.coeff);
      for (const auto& [mm, s] : moved.terms()) acc.add_term(mm, lead.scaled(s));
    }
    out.add_term(n + t.power, acc);
  }
  return out;
}

namespace {

Field y_recursive_impl(LoopEngine& eng, const State& a, const State& b, long K) {
  RecursiveY y(eng);
  Field out(K);
  for (const auto& [M, c] : a.terms()) {
    if (!is_pbw_sorted(M)) throw std::invalid_argument("state-field map: state not in PBW form");
    Field part = y.on_field(M, Field(field_coef(b)), K);
    out += part.map_coeffs([&](const FieldCoef& f) { return f.scaled(c); });
  }
  return out;
}

bool all_classical(const State& s) {
  for (const auto& [m, c] : s.terms())
    for (const auto& g : m)
      if (!g.is_classical()) return false;
  return true;
}

}  // namespace

Field y_rav_recursive(LoopEngine& eng, const State& a, const State& b, long K) {
  Field out = y_recursive_impl(eng, a, b, K);
  if (!field_boundary_ok(out)) throw std::logic_error("Y_Rav produced a field violating the boundary conditions");
  return out;
}

Field y_classical(LoopEngine& eng, const State& a, const State& b, long K) {
  if (!all_classical(a) || !all_classical(b)) throw std::invalid_argument("y_classical: states must use classical generators");
  return y_recursive_impl(eng, a, b, K);
}

int unshuffle_sign(const std::vector<int>& parities, const std::vector<int>& mu, const std::vector<int>& nu) {
  const int n = static_cast<int>(parities.size());
  if (static_cast<int>(mu.size() + nu.size()) != n) throw std::invalid_argument("unshuffle: wrong length");
  std::vector<int> seen(n + 1, 0);
  for (size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] < 1 || mu[i] > n || (i > 0 && mu[i] <= mu[i - 1])) throw std::invalid_argument("unshuffle: mu not increasing in [1,n]");
    ++seen[mu[i]];
  }
  for (size_t i = 0; i < nu.size(); ++i) {
    if (nu[i] < 1 || nu[i] > n || (i > 0 && nu[i] <= nu[i - 1])) throw std::invalid_argument("unshuffle: nu not increasing in [1,n]");
    ++seen[nu[i]];
  }
  for (int i = 1; i <= n; ++i)
    if (seen[i] != 1) throw std::invalid_argument("unshuffle: not a permutation");
  std::vector<int> seq(mu.begin(), mu.end());
  seq.insert(seq.end(), nu.rbegin(), nu.rend());
  int odd_inversions = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (seq[i] > seq[j] && parities[seq[i] - 1] % 2 && parities[seq[j] - 1] % 2) ++odd_inversions;
  return odd_inversions % 2 ? -1 : 1;
}

Field y_rav_explicit(LoopEngine& eng, const State& a, const State& b, long K) {
  Field out(K);
  for (const auto& [M, c] : a.terms()) {
    const int n = static_cast<int>(M.size());
    std::vector<int> par;
    for (const auto& g : M) par.push_back(g.degree());
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> mu, nu;
      for (int i = 1; i <= n; ++i) ((mask >> (i - 1)) & 1 ? mu : nu).push_back(i);
      Field f(field_coef(b));
      for (int idx : nu) {
        Field next;
        int depth = 0;
        for (const auto& [p, coef] : f.coeffs()) depth = std::max(depth, coef.depth());
        for (const auto& t : x_minus_modes(M[idx - 1], depth)) next += apply_mode(eng, t, f, kExact);
        f = next;
      }
      for (auto it = mu.rbegin(); it != mu.rend(); ++it) {
        Field next(K);
        for (const auto& t : x_plus_modes(M[*it - 1], K - std::min<long>(0, f.min_degree()))) next += apply_mode(eng, t, f, K);
        f = next;
      }
      f = f.truncated(K);
      Rational s = c * unshuffle_sign(par, mu, nu);
      out += f.map_coeffs([&](const FieldCoef& x) { return x.scaled(s); });
    }
  }
  return out;
}

bool field_boundary_ok(const Field& f) {
  std::map<Gen, UForm> at0{{u_gen(), UForm()}}, at1{{u_gen(), UForm(1)}};
  for (const auto& [n, c] : f.coeffs()) {
    if (n >= 0) break;
    FieldCoef s0, s1;
    for (const auto& [m, w] : c.terms()) {
      s0.add_term(m, w.substitute(at0));
      s1.add_term(m, w.substitute(at1));
    }
    if (!s0.is_zero() || !s1.is_zero()) return false;
  }
  return true;
}

Field chain_map_defect(LoopEngine& eng, const State& a, const State& b, long K) {
  int degA = -1;
  for (const auto& [m, c] : a.terms()) {
    int dm = monomial_degree(m) % 2;
    if (degA >= 0 && dm != degA) throw std::invalid_argument("chain_map_defect: A must be homogeneous");
    degA = dm;
  }
  Field lhs = d_field(eng, y_rav_recursive(eng, a, b, K));
  Field t1 = y_rav_recursive(eng, eng.d(a), b, K);
  Field t2 = y_rav_recursive(eng, a, eng.d(b), K);
  return lhs - t1 - (degA == 1 ? -t2 : t2);
}

}  // namespace rav
