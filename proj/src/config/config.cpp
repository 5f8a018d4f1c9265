#include "raviolo/config/config.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

namespace rav {

void check_full_n(int n) {
  if (n < 1 || n > kMaxFullN + 1)
    throw std::out_of_range("configuration space size N=" + std::to_string(n) + " exceeds the supported limit");
}

CForm u_perm(const std::vector<int>& sigma) {
  int n = static_cast<int>(sigma.size());
  return simplex_u<RatFrac>(fam_perm(n), perm_index(sigma));
}

CForm du_perm(const std::vector<int>& sigma) { return u_perm(sigma).d(); }

CForm v_form() { return CForm::gen(v_gen()); }

CForm precedence_sum(int n, int i, int j) {
  CForm s;
  for (int l : labels_with_precedence(n, i, j)) s += simplex_u<RatFrac>(fam_perm(n), l);
  return s;
}

CForm v_ij(int n, int i, int j) { return precedence_sum(n, i, j); }

namespace {

struct PairCheck {
  bool ok;
  std::vector<int> face;
};

PairCheck check_pair(const CForm& w, int n, int i, int j) {
  std::vector<int> zero = labels_with_precedence(n, i, j);
  CForm r = restrict_face(w, fam_perm(n), zero);
  for (const auto& [k, c] : r.terms())
    if (!c.is_regular_in(i - 1, j - 1)) return {false, zero};
  return {true, zero};
}

std::vector<std::pair<int, int>> ordered_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) out.emplace_back(i, j);
  return out;
}

MembershipReport collect(const std::vector<std::pair<int, int>>& pairs, const std::vector<PairCheck>& res) {
  MembershipReport rep;
  for (size_t p = 0; p < pairs.size(); ++p) {
    if (res[p].ok) continue;
    rep.member = false;
    rep.violations.push_back(pairs[p]);
    rep.faces.push_back(res[p].face);
  }
  return rep;
}

}  // namespace

MembershipReport in_A_N_serial(const CForm& w, int n) {
  check_full_n(n);
  auto pairs = ordered_pairs(n);
  std::vector<PairCheck> res;
  for (auto [i, j] : pairs) res.push_back(check_pair(w, n, i, j));
  return collect(pairs, res);
}

MembershipReport in_A_N(const CForm& w, int n) {
  check_full_n(n);
  auto pairs = ordered_pairs(n);
  std::vector<PairCheck> res(pairs.size());
  const int np = static_cast<int>(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (int p = 0; p < np; ++p) res[p] = check_pair(w, n, pairs[p].first, pairs[p].second);
  return collect(pairs, res);
}

CForm iota_embed(const std::vector<int>& J, const CForm& w, int n) {
  check_full_n(n);
  const int m = static_cast<int>(J.size());
  if (m < 1 || m > n) throw std::invalid_argument("iota_embed: bad subset size");
  for (int k = 0; k < m; ++k)
    if (J[k] < 1 || J[k] > n || (k > 0 && J[k] <= J[k - 1]))
      throw std::invalid_argument("iota_embed: subset must be increasing within [1,N]");
  if (!in_A_N(w, m).member) throw std::invalid_argument("iota_embed: input is not in A_|J|");
  std::vector<int> pos(n + 1, 0);
  for (int k = 0; k < m; ++k) pos[J[k]] = k + 1;
  const auto& target = permutations(n);
  std::vector<CForm> images(permutations(m).size());
  for (size_t t = 0; t < target.size(); ++t) {
    std::vector<int> proj;
    for (int x : target[t])
      if (pos[x]) proj.push_back(pos[x]);
    images[perm_index(proj)] += simplex_u<RatFrac>(fam_perm(n), static_cast<int>(t));
  }
  std::vector<int> relabel(m);
  for (int k = 0; k < m; ++k) relabel[k] = J[k] - 1;
  CForm moved = w.map_coeffs([&](const RatFrac& c) { return c.relabel(relabel); });
  if (m == n) {
    // Same family: substitute through fresh generators to avoid clobbering.
    std::map<Gen, CForm> sub;
    for (size_t l = 0; l + 1 < images.size(); ++l) sub.emplace(make_gen(fam_perm(m), static_cast<int>(l)), images[l]);
    return moved.substitute(sub);
  }
  return substitute_family(moved, fam_perm(m), images);
}

CForm p_pullback_general(int a, int b, const CForm& w, int m, int param_family) {
  check_full_n(m);
  if (a < 1 || a > m || b < 1 || b > m || a == b) throw std::invalid_argument("p_pullback: bad sites");
  const auto& big = permutations(m);
  std::vector<CForm> images(big.size());
  CForm x = CForm::gen(make_gen(param_family, 0));
  CForm one_minus_x = CForm(1) - x;
  for (size_t t = 0; t < big.size(); ++t) {
    const auto& tau = big[t];
    size_t p = std::find(tau.begin(), tau.end(), a) - tau.begin();
    std::vector<int> sigma;
    for (int y : tau)
      if (y != a) sigma.push_back(y > a ? y - 1 : y);
    if (p + 1 < tau.size() && tau[p + 1] == b) {
      images[t] = one_minus_x * u_perm(sigma);
    } else if (p > 0 && tau[p - 1] == b) {
      images[t] = x * u_perm(sigma);
    }
  }
  return substitute_family(w, fam_perm(m), images);
}

CForm p_pullback(int s, const CForm& w, int n) {
  if (s < 1 || s > n) throw std::invalid_argument("p_pullback: site out of range");
  return p_pullback_general(n + 1, s, w, n + 1, kFamV);
}

CForm q_pullback(int s, const CForm& w, int n) {
  check_full_n(n + 1);
  if (s < 1 || s > n) throw std::invalid_argument("q_pullback: site out of range");
  CForm q = precedence_sum(n + 1, s, n + 1);
  CForm out = substitute_family(w, kFamV, {q, CForm(1) - q});
  std::vector<int> all(n);
  for (int k = 0; k < n; ++k) all[k] = k + 1;
  std::vector<CForm> images(permutations(n).size());
  const auto& big = permutations(n + 1);
  for (size_t t = 0; t < big.size(); ++t) {
    std::vector<int> sigma;
    for (int x : big[t])
      if (x != n + 1) sigma.push_back(x);
    images[perm_index(sigma)] += simplex_u<RatFrac>(fam_perm(n + 1), static_cast<int>(t));
  }
  return substitute_family(out, fam_perm(n), images);
}

RavLocal expand_at_raw(const CForm& w, int s, int n, long K) {
  std::map<int, CForm> by_power;
  for (const auto& [key, c] : w.terms()) {
    Laurent<RatFrac> ser = laurent_expand(c, n, s - 1, K);
    for (const auto& [k, a] : ser.coeffs()) by_power[k].add_term(key, a);
  }
  RavLocal out(K);
  for (const auto& [k, f] : by_power) out.add_term(k, p_pullback(s, f, n));
  return out;
}

RavLocal expand_at(const CForm& w, int s, int n, long K, bool check_membership) {
  if (check_membership && !in_A_N(w, n + 1).member) throw std::invalid_argument("expand_at: input is not in A_{N+1}");
  RavLocal out = expand_at_raw(w, s, n, K);
  LocalReport rep = check_rav_local(out, n);
  if (!rep.ok) throw std::logic_error("expand_at produced an element violating " + rep.reason);
  return out;
}

LocalReport check_rav_local(const RavLocal& x, int n) {
  std::map<Gen, CForm> at0{{v_gen(), CForm()}}, at1{{v_gen(), CForm(1)}};
  for (const auto& [k, c] : x.coeffs()) {
    if (k < 0) {
      if (!c.substitute(at0).is_zero()) return {false, "regularity at v=0 in power " + std::to_string(k)};
      if (!c.substitute(at1).is_zero()) return {false, "regularity at v=1 in power " + std::to_string(k)};
    }
    if (n >= 2) {
      MembershipReport m = in_A_N(c, n);
      if (!m.member)
        return {false, "face regularity for pair (" + std::to_string(m.violations[0].first) + "," +
                           std::to_string(m.violations[0].second) + ")"};
    }
  }
  return {};
}

bool is_minus_local(const RavLocal& x) { return x.is_zero() || x.coeffs().rbegin()->first < 0; }

std::pair<RavLocal, RavLocal> split_local(const RavLocal& x) {
  RavLocal m(x.precision()), p(x.precision());
  for (const auto& [k, c] : x.coeffs()) (k < 0 ? m : p).add_term(k, c);
  return {m, p};
}

CForm g_build(int k, const RavLocal& x, int n) {
  if (!is_minus_local(x)) throw std::invalid_argument("g_build: input has non-negative powers");
  CForm out;
  for (const auto& [l, c] : x.coeffs()) {
    CForm lifted = q_pullback(k, c, n);
    out += lifted.scaled(RatFrac::inv_difference(n, k - 1, -l));
  }
  return out;
}

Decomposition decompose_global(const std::vector<RavLocal>& X, int n, long K) {
  if (static_cast<int>(X.size()) != n) throw std::invalid_argument("decompose_global: one component per site");
  Decomposition d;
  for (int k = 1; k <= n; ++k) {
    LocalReport rep = check_rav_local(X[k - 1], n);
    if (!rep.ok) throw std::invalid_argument("decompose_global: component violates " + rep.reason);
    d.global += g_build(k, split_local(X[k - 1]).first, n);
  }
  for (int k = 1; k <= n; ++k) d.plus_remainder.push_back(X[k - 1] - expand_at_raw(d.global, k, n, K));
  return d;
}

CForm omega12() {
  const int n = 3;
  const int w = 2;
  auto vij = [&](int i, int j) { return v_ij(n, i, j); };
  CForm a = vij(3, 1).d().scaled(RatFrac::inv_difference(w, 0));
  CForm b = vij(3, 2).d().scaled(RatFrac::inv_difference(w, 1));
  CForm c = vij(2, 1).d().scaled(RatFrac::inv_difference(1, 0));
  CForm e = vij(1, 2).d().scaled(RatFrac::inv_difference(0, 1));
  return a * b - c * b - a * e;
}

CForm kernel_element() {
  return (u_perm({1, 2, 3}) * u_perm({3, 1, 2})).scaled(RatFrac::inv_difference(2, 1));
}

std::string cform_string(const CForm& w, int n_vars_w) {
  VarNames names{n_vars_w};
  return w.to_string([&](const RatFrac& c) { return c.to_string(names); });
}

std::string rav_local_string(const RavLocal& x, int s) {
  return x.to_string("(w-z" + std::to_string(s) + ")", [&](const CForm& c) { return cform_string(c); });
}

}  // namespace rav
