#include "raviolo/coinv/coinv.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>

namespace rav {

namespace {

CForm parity_part(const CForm& w, int p) {
  CForm r;
  for (const auto& [k, c] : w.terms())
    if (k.degree() % 2 == p) r.add_term(k, c);
  return r;
}

CForm lift(const PolyForm<Rational>& f) {
  return f.map_coeffs([](const Rational& q) { return RatFrac(q); });
}

int koszul(int a, int b) { return (a * b) % 2 ? -1 : 1; }

bool uses_var(const RatFrac& r, int var) {
  if (r.numerator().degree_in(var) > 0) return true;
  for (const auto& [p, e] : r.denominator())
    if (p.first == var || p.second == var) return true;
  return false;
}

}  // namespace

SiteSpec SiteSpec::vacuum() { return SiteSpec{}; }

SiteSpec SiteSpec::trivial(int parity) {
  SiteSpec s;
  s.kind = SiteKind::Trivial;
  s.parity = parity % 2;
  return s;
}

SiteSpec SiteSpec::finite_dim(const LieData& g, std::vector<RMatrix> mats, int parity) {
  if (static_cast<int>(mats.size()) != g.dim()) throw std::invalid_argument("finite_dim: one matrix per basis element");
  const size_t d = mats.empty() ? 0 : mats[0].size();
  for (const auto& m : mats) {
    if (m.size() != d) throw std::invalid_argument("finite_dim: matrices of different sizes");
    for (const auto& row : m)
      if (row.size() != d) throw std::invalid_argument("finite_dim: matrices must be square");
  }
  auto mul = [&](const RMatrix& a, const RMatrix& b) {
    RMatrix c(d, RVector(d, Rational(0)));
    for (size_t i = 0; i < d; ++i)
      for (size_t k = 0; k < d; ++k)
        if (sgn(a[i][k]) != 0)
          for (size_t j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  for (int i = 0; i < g.dim(); ++i) {
    for (int j = 0; j < g.dim(); ++j) {
      RMatrix lhs = mul(mats[i], mats[j]);
      RMatrix ji = mul(mats[j], mats[i]);
      for (size_t r = 0; r < d; ++r)
        for (size_t c = 0; c < d; ++c) lhs[r][c] -= ji[r][c];
      for (const auto& [k, c] : g.bracket(i, j))
        for (size_t r = 0; r < d; ++r)
          for (size_t cc = 0; cc < d; ++cc) lhs[r][cc] -= c * mats[k][r][cc];
      for (const auto& row : lhs)
        for (const auto& x : row)
          if (sgn(x) != 0)
            throw std::invalid_argument("finite_dim: matrices violate the bracket of " + g.name(i) + " and " + g.name(j));
    }
  }
  SiteSpec s;
  s.kind = SiteKind::FiniteDim;
  s.mats = std::move(mats);
  s.parity = parity % 2;
  return s;
}

SiteSpec SiteSpec::adjoint(const LieData& g, int parity) {
  std::vector<RMatrix> mats;
  for (int i = 0; i < g.dim(); ++i) mats.push_back(g.ad(i));
  return finite_dim(g, std::move(mats), parity);
}

int SiteSpec::dim() const {
  switch (kind) {
    case SiteKind::Trivial: return 1;
    case SiteKind::FiniteDim: return mats.empty() ? 0 : static_cast<int>(mats[0].size());
    case SiteKind::Vacuum: break;
  }
  return 0;
}

void TensorState::add_term(const TensorKey& k, const CForm& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

TensorState TensorState::operator-() const {
  TensorState r;
  for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
  return r;
}

TensorState& TensorState::operator+=(const TensorState& o) {
  for (const auto& [k, c] : o.t_) add_term(k, c);
  return *this;
}

TensorState TensorState::left_multiplied(const CForm& c) const {
  TensorState r;
  for (const auto& [k, w] : t_) r.add_term(k, c * w);
  return r;
}

void CoinvSeries::add(const TensorKey& k, int power, const CForm& c) {
  if (power >= K_ || c.is_zero()) return;
  auto it = t_.try_emplace(k, Laurent<CForm>(K_)).first;
  it->second.add_term(power, c);
  if (it->second.is_zero()) t_.erase(it);
}

CoinvSeries CoinvSeries::operator-(const CoinvSeries& o) const {
  CoinvSeries r(std::min(K_, o.K_));
  for (const auto& [k, s] : t_)
    for (const auto& [p, c] : s.coeffs()) r.add(k, p, c);
  for (const auto& [k, s] : o.t_)
    for (const auto& [p, c] : s.coeffs()) r.add(k, p, -c);
  return r;
}

CoinvSeries CoinvSeries::operator+(const CoinvSeries& o) const {
  CoinvSeries r(std::min(K_, o.K_));
  for (const auto* x : {this, &o})
    for (const auto& [k, s] : x->t_)
      for (const auto& [p, c] : s.coeffs()) r.add(k, p, c);
  return r;
}

bool CoinvSeries::agrees_with(const CoinvSeries& o) const { return (*this - o).is_zero(); }

Coinvariants::Coinvariants(LoopEngine& eng, std::vector<SiteSpec> sites, bool classical, SwapRoute route)
    : eng_(&eng), sites_(std::move(sites)), classical_(classical), route_(route) {
  if (sites_.empty()) throw std::invalid_argument("coinvariants need at least one site");
  check_full_n(n());
}

int Coinvariants::vector_parity(int site, const SiteVec& v) const {
  const SiteSpec& s = sites_.at(site - 1);
  return s.kind == SiteKind::Vacuum ? monomial_degree(v.mono) % 2 : s.parity;
}

void Coinvariants::check_key(const TensorKey& k) const {
  if (static_cast<int>(k.size()) != n()) throw std::invalid_argument("tensor key has the wrong number of sites");
  for (int i = 0; i < n(); ++i) {
    const SiteSpec& s = sites_[i];
    const SiteVec& v = k[i];
    if (s.kind == SiteKind::Vacuum) {
      if (v.basis != 0 || !is_pbw_sorted(v.mono))
        throw std::invalid_argument("site " + std::to_string(i + 1) + " needs a PBW monomial");
      for (const auto& g : v.mono)
        if (!g.is_minus() || g.is_classical() != classical_)
          throw std::invalid_argument("site " + std::to_string(i + 1) + " carries an unexpected generator");
    } else if (!v.mono.empty() || v.basis < 0 || v.basis >= s.dim()) {
      throw std::invalid_argument("site " + std::to_string(i + 1) + " needs a module basis index");
    }
  }
}

TensorState Coinvariants::basis_state(const TensorKey& k, const CForm& c) const {
  check_key(k);
  TensorState s;
  s.add_term(k, c);
  return s;
}

int Coinvariants::depth_needed(int t, const SiteVec& v) const {
  switch (sites_[t - 1].kind) {
    case SiteKind::Vacuum: return monomial_depth(v.mono);
    case SiteKind::FiniteDim: return 1;
    case SiteKind::Trivial: break;
  }
  return 0;
}

std::vector<std::pair<SiteVec, Rational>> Coinvariants::act_vector(int t, const LoopGen& y, const SiteVec& v) const {
  std::vector<std::pair<SiteVec, Rational>> out;
  const SiteSpec& s = sites_[t - 1];
  if (s.kind == SiteKind::Vacuum) {
    for (const auto& [m, c] : eng_->act(y, v.mono).terms()) out.push_back({SiteVec{0, m}, c});
    return out;
  }
  if (y.is_minus()) throw std::logic_error("lowering generator reached a far site");
  if (s.kind == SiteKind::Trivial) return out;
  bool acts = y.is_classical() ? y.power == 0 : (y.mode == Mode::Plus0 && y.power == 0 && (s.eps_v == 1 || y.m == 0));
  if (!acts) return out;
  const RMatrix& m = s.mats[y.lie];
  for (int i = 0; i < s.dim(); ++i)
    if (sgn(m[i][v.basis]) != 0) out.push_back({SiteVec{i, {}}, m[i][v.basis]});
  return out;
}

std::vector<PlusTerm> Coinvariants::split_local(const RavLocal& x, int lie, int min_power) const {
  std::vector<PlusTerm> out;
  for (const auto& [k, c] : x.coeffs()) {
    if (k < min_power) continue;
    // per u-key: coefficients of v^j and v^j dv
    std::map<FormKey, std::pair<std::vector<RatFrac>, std::vector<RatFrac>>> parts;
    for (const auto& [key, r] : c.terms()) {
      FormKey ukey, vkey;
      for (const auto& e : key.even) (gen_family(e.first) == kFamV ? vkey : ukey).even.push_back(e);
      for (Gen g : key.odd) (gen_family(g) == kFamV ? vkey : ukey).odd.push_back(g);
      FormKey check;
      int sign = multiply_keys(ukey, vkey, check);
      if (classical_) {
        if (!vkey.even.empty() || !vkey.odd.empty()) throw std::logic_error("v-form in a classical expansion");
        out.push_back({CForm::term(ukey, sign > 0 ? r : -r), {{LoopGen::classical(lie, k), Rational(1)}}});
        continue;
      }
      const size_t j = vkey.even.empty() ? 0 : static_cast<size_t>(vkey.even.front().second);
      auto& vec = vkey.odd.empty() ? parts[ukey].first : parts[ukey].second;
      if (vec.size() <= j) vec.resize(j + 1, RatFrac(Rational(0)));
      vec[j] = vec[j] + (sign > 0 ? r : -r);
    }
    for (const auto& [ukey, fp] : parts) {
      const auto& [f0, f1] = fp;
      auto push = [&](const LoopGen& g, const RatFrac& r) {
        CForm coeff = CForm::term(ukey, r);
        if (!coeff.is_zero()) out.push_back({coeff, {{g, Rational(1)}}});
      };
      if (k >= 0) {
        for (size_t j = 0; j < f0.size(); ++j) push(LoopGen::plus0(lie, k, static_cast<int>(j)), f0[j]);
        for (size_t j = 0; j < f1.size(); ++j) push(LoopGen::plus1(lie, k, static_cast<int>(j)), f1[j]);
        continue;
      }
      // degree-0 part must be divisible by v(1 - v): p = v(1 - v) q with q_j the running sums
      if (!f0.empty()) {
        if (!f0[0].is_zero()) throw std::invalid_argument("degree-0 part does not vanish at v=0");
        RatFrac run(Rational(0));
        for (size_t j = 1; j < f0.size(); ++j) {
          run = run + f0[j];
          if (j + 1 < f0.size()) push(LoopGen::minus0(lie, -k, static_cast<int>(j - 1)), run);
        }
        if (!run.is_zero()) throw std::invalid_argument("degree-0 part does not vanish at v=1");
      }
      for (size_t j = 0; j < f1.size(); ++j) push(LoopGen::minus1(lie, -k, static_cast<int>(j)), f1[j]);
    }
  }
  return out;
}

std::vector<PlusTerm> Coinvariants::swap_expansion(int s, int t, const LoopGen& x, int depth) const {
  if (depth <= 0 || s == t) return {};
  auto key = std::make_tuple(s, t, x, depth);
  if (auto it = swap_cache_.find(key); it != swap_cache_.end()) return it->second;
  const int l = x.pole();
  std::vector<PlusTerm> out;
  if (route_ == SwapRoute::Closed) {
    CForm fq(1);
    if (!classical_) {
      CForm q = precedence_sum(n(), s, t);
      fq = lift(x.vform()).substitute({{v_gen(), q}});
    }
    for (int k = 0; k < depth; ++k) {
      Rational c = binomial(k + l - 1, k);
      if (l % 2) c = -c;
      RatFrac r = RatFrac(c) * RatFrac::inv_difference(s - 1, t - 1, k + l);
      LoopGen y = classical_ ? LoopGen::classical(x.lie, k) : LoopGen::plus0(x.lie, k, 0);
      out.push_back({fq.scaled(r), {{y, Rational(1)}}});
    }
  } else {
    CForm f = classical_ ? CForm(1) : lift(x.vform());
    CForm g = g_build(s, RavLocal::monomial(-l, f), n());
    RavLocal ser = classical_ ? expand_at_raw(g, t, n(), depth) : expand_at(g, t, n(), depth, false);
    out = split_local(ser, x.lie, 0);
  }
  swap_cache_.emplace(key, out);
  return out;
}

TensorState Coinvariants::act_at_site(int t, const CForm& c, const LoopGen& y, const TensorState& st) const {
  TensorState out;
  for (const auto& [k, w] : st.terms()) {
    int pre = 0;
    for (int j = 1; j < t; ++j) pre += vector_parity(j, k[j - 1]);
    auto images = act_vector(t, y, k[t - 1]);
    if (images.empty()) continue;
    for (int p = 0; p < 2; ++p) {
      CForm wp = parity_part(w, p);
      if (wp.is_zero()) continue;
      CForm cw = c * wp;
      int sign = koszul(y.degree(), p + pre);
      for (const auto& [v, q] : images) {
        TensorKey nk = k;
        nk[t - 1] = v;
        out.add_term(nk, cw.scaled(RatFrac(q * sign)));
      }
    }
  }
  return out;
}

TensorState Coinvariants::act_global(const GlobalElement& g, const TensorState& st, const std::vector<int>& skip) const {
  TensorState out;
  for (int t = 1; t <= n(); ++t) {
    if (std::find(skip.begin(), skip.end(), t) != skip.end()) continue;
    int depth = 0;
    for (const auto& [k, w] : st.terms()) depth = std::max(depth, depth_needed(t, k[t - 1]));
    RavLocal ser = classical_ ? expand_at_raw(g.eta, t, n(), depth) : expand_at(g.eta, t, n(), depth, false);
    if (sites_[t - 1].is_far() && !ser.is_zero() && ser.min_degree() < 0)
      throw std::logic_error("global element has a pole at a far site");
    for (const auto& pt : split_local(ser, g.lie, INT_MIN))
      for (const auto& [y, r] : pt.gens) out += act_at_site(t, pt.coeff.scaled(RatFrac(r)), y, st);
  }
  return out;
}

int Coinvariants::swap_sign(const TensorKey& k, int s, int coeff_parity) const {
  int pre = coeff_parity;
  for (int j = 1; j < s; ++j) pre += vector_parity(j, k[j - 1]);
  return koszul(k.at(s - 1).mono.at(0).degree(), pre);
}

TensorState Coinvariants::swap_term(const TensorKey& k, const CForm& c, int s) const {
  const LoopGen x = k[s - 1].mono.front();
  TensorKey rest = k;
  rest[s - 1].mono.erase(rest[s - 1].mono.begin());
  TensorState out;
  for (int p = 0; p < 2; ++p) {
    CForm wp = parity_part(c, p);
    if (wp.is_zero()) continue;
    const int eps = swap_sign(k, s, p);
    for (int t = 1; t <= n(); ++t) {
      if (t == s) continue;
      int pre = p;
      for (int j = 1; j < t; ++j) pre += vector_parity(j, rest[j - 1]);
      for (const auto& pt : swap_expansion(s, t, x, depth_needed(t, rest[t - 1]))) {
        CForm cw;
        for (const auto& [y, r] : pt.gens) {
          auto images = act_vector(t, y, rest[t - 1]);
          if (images.empty()) continue;
          if (cw.is_zero()) cw = pt.coeff * wp;
          const int sign = -eps * koszul(y.degree(), pre);
          for (const auto& [v, q] : images) {
            TensorKey nk = rest;
            nk[t - 1] = v;
            out.add_term(nk, cw.scaled(RatFrac(r * q * sign)));
          }
        }
      }
    }
  }
  return out;
}

TensorState Coinvariants::swap_at_site(const TensorState& st, int s) const {
  if (s < 1 || s > n()) throw std::out_of_range("swap_at_site: site out of range");
  TensorState out;
  for (const auto& [k, c] : st.terms()) {
    if (k[s - 1].mono.empty()) {
      out.add_term(k, c);
    } else {
      out += swap_term(k, c, s);
    }
  }
  return out;
}

TensorState Coinvariants::swap_at_site(const TensorState& st, int s, const LoopGen& x) const {
  if (s < 1 || s > n()) throw std::out_of_range("swap_at_site: site out of range");
  for (const auto& [k, c] : st.terms())
    if (k[s - 1].mono.empty() || k[s - 1].mono.front() != x)
      throw std::invalid_argument("swap_at_site: generator is not outermost at site " + std::to_string(s));
  return swap_at_site(st, s);
}

TensorState Coinvariants::reduce(const TensorState& st) const {
  std::vector<int> order(n());
  std::iota(order.rbegin(), order.rend(), 1);
  return reduce(st, order);
}

TensorState Coinvariants::reduce(const TensorState& st, const std::vector<int>& order) const {
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n(); ++i)
    if (static_cast<int>(sorted.size()) != n() || sorted[i] != i + 1)
      throw std::invalid_argument("reduce: order must be a permutation of the sites");
  TensorState done, todo = st;
  while (!todo.is_zero()) {
    TensorState next;
    for (const auto& [k, c] : todo.terms()) {
      int s = 0;
      for (int site : order) {
        if (!k[site - 1].mono.empty()) {
          s = site;
          break;
        }
      }
      if (s == 0) {
        done.add_term(k, c);
      } else {
        next += swap_term(k, c, s);
      }
    }
    todo = std::move(next);
  }
  return done;
}

std::optional<CForm> recognize_embedded(const CForm& w, int n) {
  if (n < 2) return std::nullopt;
  for (const auto& [k, c] : w.terms())
    if (uses_var(c, n - 1)) return std::nullopt;
  const auto& perms = permutations(n);
  std::vector<int> zero;
  std::map<Gen, CForm> images;
  for (size_t l = 0; l < perms.size(); ++l) {
    if (perms[l].back() != n) {
      zero.push_back(static_cast<int>(l));
    } else {
      std::vector<int> tau(perms[l].begin(), perms[l].end() - 1);
      images.emplace(make_gen(fam_perm(n), static_cast<int>(l)), u_perm(tau));
    }
  }
  CForm cand = restrict_face(w, fam_perm(n), zero).substitute(images);
  std::vector<int> J(n - 1);
  std::iota(J.begin(), J.end(), 1);
  try {
    if (iota_embed(J, cand, n) == w) return cand;
  } catch (const std::invalid_argument&) {
  }
  return std::nullopt;
}

PropagationResult propagate_vacuum(const TensorState& st, int n) {
  PropagationResult res;
  res.state = st;
  TensorState out;
  for (const auto& [k, c] : st.terms()) {
    if (static_cast<int>(k.size()) != n) throw std::invalid_argument("propagate_vacuum: wrong number of sites");
    if (!k[n - 1].mono.empty()) throw std::invalid_argument("propagate_vacuum: site N does not carry the bare vacuum");
    auto w = recognize_embedded(c, n);
    if (!w) return res;
    out.add_term(TensorKey(k.begin(), k.end() - 1), *w);
  }
  res.ok = true;
  res.state = out;
  return res;
}

CoinvSeries expand_coinvariant(const TensorState& st, int n, long K) {
  if (n < 2) throw std::invalid_argument("expand_coinvariant: needs two sites");
  std::map<TensorKey, std::map<int, CForm>> grouped;
  for (const auto& [k, c] : st.terms()) {
    if (static_cast<int>(k.size()) != n) throw std::invalid_argument("expand_coinvariant: wrong number of sites");
    if (!k[n - 1].mono.empty()) throw std::invalid_argument("expand_coinvariant: site N does not carry the bare vacuum");
    auto& slot = grouped[TensorKey(k.begin(), k.end() - 1)];
    for (const auto& [fk, r] : c.terms()) {
      Laurent<RatFrac> ser = laurent_expand(r, n - 1, n - 2, K);
      for (const auto& [p, a] : ser.coeffs()) slot[p].add_term(fk, a);
    }
  }
  CoinvSeries out(K);
  for (const auto& [k, powers] : grouped)
    for (const auto& [p, f] : powers) out.add(k, p, p_pullback_general(n, n - 1, f, n, kFamU));
  return out;
}

CoinvSeries reduce_field(const Coinvariants& ctx, const TensorKey& far, const Field& f, int sign) {
  const int m = ctx.n();
  if (static_cast<int>(far.size()) != m - 1) throw std::invalid_argument("reduce_field: far key size mismatch");
  int far_parity = 0;
  for (int j = 1; j < m; ++j) far_parity += ctx.vector_parity(j, far[j - 1]);
  std::map<Monomial, TensorState> cache;
  CoinvSeries out(f.precision());
  for (const auto& [p, fc] : f.coeffs()) {
    for (const auto& [mono, phi] : fc.terms()) {
      auto it = cache.find(mono);
      if (it == cache.end()) {
        TensorKey k = far;
        k.push_back(SiteVec{0, mono});
        it = cache.emplace(mono, ctx.reduce(ctx.basis_state(k))).first;
      }
      for (int q = 0; q < 2; ++q) {
        CForm phq = lift(phi.degree_part(q));
        if (phq.is_zero()) continue;
        const int s = sign * koszul(q, far_parity);
        for (const auto& [rk, w] : it->second.terms()) out.add(rk, p, (phq * w).scaled(RatFrac(Rational(s))));
      }
    }
  }
  return out;
}

TensorState permute_sites(const TensorState& st, const std::vector<int>& perm, const Coinvariants& ctx) {
  const int n = ctx.n();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("permute_sites: wrong permutation size");
  std::vector<int> relabel(n);
  for (int i = 0; i < n; ++i) relabel[i] = perm[i] - 1;
  const auto& perms = permutations(n);
  std::map<Gen, CForm> images;
  for (size_t l = 0; l + 1 < perms.size(); ++l) {
    std::vector<int> img;
    for (int x : perms[l]) img.push_back(perm[x - 1]);
    images.emplace(make_gen(fam_perm(n), static_cast<int>(l)), u_perm(img));
  }
  TensorState out;
  for (const auto& [k, c] : st.terms()) {
    TensorKey nk(n);
    int sign = 1;
    for (int i = 0; i < n; ++i) {
      nk[perm[i] - 1] = k[i];
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign *= koszul(ctx.vector_parity(i + 1, k[i]), ctx.vector_parity(j + 1, k[j]));
    }
    CForm moved = c.map_coeffs([&](const RatFrac& r) { return r.relabel(relabel); }).substitute(images);
    out.add_term(nk, sign > 0 ? moved : -moved);
  }
  return out;
}

namespace {

TensorKey theorem_key(const std::vector<int>& far_basis, const Monomial& b, const Monomial& a) {
  TensorKey k;
  for (int x : far_basis) k.push_back(SiteVec{x, {}});
  k.push_back(SiteVec{0, b});
  k.push_back(SiteVec{0, a});
  return k;
}

State parity_component(const State& s, int p) {
  State r;
  for (const auto& [m, c] : s.terms())
    if (monomial_degree(m) % 2 == p) r.add_term(m, c);
  return r;
}

TheoremReport run_theorem(LoopEngine& eng, const std::vector<SiteSpec>& far, const std::vector<int>& far_basis,
                          const State& a, const State& b, long K, bool classical, SwapRoute route) {
  if (far.size() != far_basis.size()) throw std::invalid_argument("one basis vector per far site");
  for (const auto& s : far)
    if (!s.is_far()) throw std::invalid_argument("far sites must be Trivial or FiniteDim");
  std::vector<SiteSpec> sites = far;
  sites.push_back(SiteSpec::vacuum());
  sites.push_back(SiteSpec::vacuum());
  const int n = static_cast<int>(sites.size());
  Coinvariants big(eng, sites, classical, route);
  TensorState st;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      TensorKey k = theorem_key(far_basis, mb, ma);
      big.check_key(k);
      st.add_term(k, CForm(RatFrac(ca * cb)));
    }
  TheoremReport rep;
  TensorState red = big.reduce(st);
  rep.lhs = expand_coinvariant(red, n, K);

  sites.pop_back();
  Coinvariants small(eng, sites, classical, route);
  TensorKey fk;
  for (int x : far_basis) fk.push_back(SiteVec{x, {}});
  CoinvSeries rhs(K);
  for (int p = 0; p < 2; ++p) {
    State ap = parity_component(a, p);
    if (ap.is_zero()) continue;
    for (int q = 0; q < 2; ++q) {
      State bq = parity_component(b, q);
      if (bq.is_zero()) continue;
      Field y = classical ? y_classical(eng, ap, bq, K) : y_rav_recursive(eng, ap, bq, K);
      rhs = rhs + reduce_field(small, fk, y, koszul(p, q));
    }
  }
  rep.rhs = rhs;
  for (const auto& [k, s] : rep.lhs.terms()) rep.lhs_terms += static_cast<long>(s.coeffs().size());
  for (const auto& [k, s] : rep.rhs.terms()) rep.rhs_terms += static_cast<long>(s.coeffs().size());
  rep.equal = rep.lhs.agrees_with(rep.rhs);
  return rep;
}

}  // namespace

TheoremReport verify_theorem(LoopEngine& eng, const std::vector<SiteSpec>& far, const std::vector<int>& far_basis,
                             const State& a, const State& b, long K, SwapRoute route) {
  return run_theorem(eng, far, far_basis, a, b, K, false, route);
}

TheoremReport classical_verify(LoopEngine& eng, const std::vector<SiteSpec>& far, const std::vector<int>& far_basis,
                               const State& a, const State& b, long K) {
  return run_theorem(eng, far, far_basis, a, b, K, true, SwapRoute::Closed);
}

std::string site_vec_string(const LieData& g, const SiteSpec& spec, const SiteVec& v) {
  switch (spec.kind) {
    case SiteKind::Vacuum: return monomial_string(g, v.mono);
    case SiteKind::Trivial: return "1";
    case SiteKind::FiniteDim: break;
  }
  if (spec.dim() == g.dim() && spec.mats == SiteSpec::adjoint(g, spec.parity).mats) return g.name(v.basis);
  return "b" + std::to_string(v.basis);
}

namespace {

std::string key_string(const LieData& g, const std::vector<SiteSpec>& sites, const TensorKey& k) {
  std::string out = "[";
  for (size_t i = 0; i < k.size(); ++i) {
    if (i) out += " (x) ";
    out += site_vec_string(g, sites.at(i), k[i]);
  }
  return out + "]";
}

}  // namespace

std::string tensor_state_string(const LieData& g, const Coinvariants& ctx, const TensorState& st) {
  if (st.is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : st.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + cform_string(c) + ") " + key_string(g, ctx.sites(), k);
  }
  return out;
}

std::string coinv_series_string(const LieData& g, const std::vector<SiteSpec>& sites, const CoinvSeries& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [k, ser] : s.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + ser.to_string("x", [](const CForm& c) { return cform_string(c); }) + ") " + key_string(g, sites, k);
  }
  return out;
}

}  // namespace rav
