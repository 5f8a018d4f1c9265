#pragma once

#include "raviolo/exact/rational.hpp"
#include "raviolo/forms/labels.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rav {

// Monomial u^a ... du_{g1} ^ du_{g2} ^ ... with the odd word strictly increasing.
struct FormKey {
  std::vector<std::pair<Gen, int>> even;
  std::vector<Gen> odd;

  int degree() const { return static_cast<int>(odd.size()); }
  bool operator==(const FormKey& o) const { return even == o.even && odd == o.odd; }
  bool operator<(const FormKey& o) const {
    if (odd.size() != o.odd.size()) return odd.size() < o.odd.size();
    if (odd != o.odd) return odd < o.odd;
    return even < o.even;
  }
};

// Wedge of two keys: returns sign (0 if an odd generator repeats).
int multiply_keys(const FormKey& a, const FormKey& b, FormKey& out);
std::string key_string(const FormKey& k);

// Polynomial differential form with coefficients in a commutative ring C (coefficients are closed).
template <class C>
class PolyForm {
 public:
  using Terms = std::map<FormKey, C>;

  PolyForm() = default;
  PolyForm(const C& c) {
    if (!coeff_is_zero(c)) t_.emplace(FormKey{}, c);
  }
  PolyForm(long c) : PolyForm(C(Rational(c))) {}

  static PolyForm gen(Gen g) {
    PolyForm r;
    r.t_.emplace(FormKey{{{g, 1}}, {}}, C(Rational(1)));
    return r;
  }
  static PolyForm dgen(Gen g) {
    PolyForm r;
    r.t_.emplace(FormKey{{}, {g}}, C(Rational(1)));
    return r;
  }
  static PolyForm term(const FormKey& k, const C& c) {
    PolyForm r;
    if (!coeff_is_zero(c)) r.t_.emplace(k, c);
    return r;
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_scalar() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == FormKey{}); }
  C scalar_part() const {
    auto it = t_.find(FormKey{});
    return it == t_.end() ? C() : it->second;
  }

  void add_term(const FormKey& k, const C& c) {
    if (coeff_is_zero(c)) return;
    auto [it, fresh] = t_.try_emplace(k, c);
    if (!fresh) {
      it->second = it->second + c;
      if (coeff_is_zero(it->second)) t_.erase(it);
    }
  }

  PolyForm operator-() const {
    PolyForm r;
    for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
    return r;
  }
  PolyForm& operator+=(const PolyForm& o) {
    for (const auto& [k, c] : o.t_) add_term(k, c);
    return *this;
  }
  PolyForm& operator-=(const PolyForm& o) {
    for (const auto& [k, c] : o.t_) add_term(k, -c);
    return *this;
  }
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend PolyForm operator*(const PolyForm& a, const PolyForm& b) {
    PolyForm r;
    FormKey k;
    for (const auto& [ka, ca] : a.t_) {
      for (const auto& [kb, cb] : b.t_) {
        int s = multiply_keys(ka, kb, k);
        if (s == 0) continue;
        C c = ca * cb;
        r.add_term(k, s > 0 ? c : -c);
      }
    }
    return r;
  }
  PolyForm& operator*=(const PolyForm& o) { return *this = *this * o; }
  bool operator==(const PolyForm& o) const { return t_ == o.t_; }
  bool operator!=(const PolyForm& o) const { return !(*this == o); }

  PolyForm scaled(const C& s) const {
    PolyForm r;
    for (const auto& [k, c] : t_) r.add_term(k, s * c);
    return r;
  }

  // Homogeneous component of form degree p.
  PolyForm degree_part(int p) const {
    PolyForm r;
    for (const auto& [k, c] : t_)
      if (k.degree() == p) r.t_.emplace(k, c);
    return r;
  }
  int max_degree() const {
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, k.degree());
    return d;
  }
  // True iff every term has the given parity.
  bool has_parity(int p) const {
    for (const auto& [k, c] : t_)
      if (k.degree() % 2 != p) return false;
    return true;
  }

  PolyForm d() const {
    PolyForm r;
    for (const auto& [k, c] : t_) {
      for (size_t i = 0; i < k.even.size(); ++i) {
        auto [g, e] = k.even[i];
        if (std::binary_search(k.odd.begin(), k.odd.end(), g)) continue;
        FormKey n;
        n.even = k.even;
        if (e == 1) {
          n.even.erase(n.even.begin() + i);
        } else {
          n.even[i].second = e - 1;
        }
        auto pos = std::lower_bound(k.odd.begin(), k.odd.end(), g);
        n.odd = k.odd;
        n.odd.insert(n.odd.begin() + (pos - k.odd.begin()), g);
        C coef = c * C(Rational(e));
        r.add_term(n, (pos - k.odd.begin()) % 2 ? -coef : coef);
      }
    }
    return r;
  }

  std::set<Gen> generators() const {
    std::set<Gen> s;
    for (const auto& [k, c] : t_) {
      for (const auto& [g, e] : k.even) s.insert(g);
      for (Gen g : k.odd) s.insert(g);
    }
    return s;
  }

  template <class F>
  auto map_coeffs(F f) const -> PolyForm<decltype(f(std::declval<C>()))> {
    PolyForm<decltype(f(std::declval<C>()))> r;
    for (const auto& [k, c] : t_) r.add_term(k, f(c));
    return r;
  }

  // Algebra homomorphism determined by images of degree-0 generators; du maps to d(image).
  // Generators without an image are left unchanged.
  PolyForm substitute(const std::map<Gen, PolyForm>& images) const {
    std::map<std::pair<Gen, int>, PolyForm> pow_cache;
    std::map<Gen, PolyForm> d_cache;
    auto power = [&](Gen g, int e) -> const PolyForm& {
      auto key = std::make_pair(g, e);
      auto it = pow_cache.find(key);
      if (it != pow_cache.end()) return it->second;
      auto im = images.find(g);
      PolyForm base = im == images.end() ? gen(g) : im->second;
      PolyForm p = PolyForm(C(Rational(1)));
      for (int i = 0; i < e; ++i) p = p * base;
      return pow_cache.emplace(key, std::move(p)).first->second;
    };
    auto dimg = [&](Gen g) -> const PolyForm& {
      auto it = d_cache.find(g);
      if (it != d_cache.end()) return it->second;
      auto im = images.find(g);
      PolyForm p = im == images.end() ? dgen(g) : im->second.d();
      return d_cache.emplace(g, std::move(p)).first->second;
    };
    PolyForm r;
    for (const auto& [k, c] : t_) {
      PolyForm acc = PolyForm(c);
      for (const auto& [g, e] : k.even) {
        acc = acc * power(g, e);
        if (acc.is_zero()) break;
      }
      for (Gen g : k.odd) {
        if (acc.is_zero()) break;
        acc = acc * dimg(g);
      }
      r += acc;
    }
    return r;
  }

  std::string to_string(const std::function<std::string(const C&)>& show) const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : t_) {
      std::string cs = show(c);
      std::string ks = key_string(k);
      std::string piece;
      bool neg = !cs.empty() && cs[0] == '-' && !has_top_level_sum(cs.substr(1));
      std::string body = neg ? cs.substr(1) : cs;
      bool compound = body.find_first_of("+-/") != std::string::npos;
      if (ks.empty()) {
        piece = compound ? "(" + cs + ")" : cs;
        neg = false;
      } else if (body == "1") {
        piece = ks;
      } else {
        piece = (compound ? "(" + body + ")" : body) + "*" + ks;
      }
      if (out.empty()) {
        out = (neg ? "-" : "") + piece;
      } else {
        out += (neg ? " - " : " + ") + piece;
      }
    }
    return out;
  }

 private:
  static bool has_top_level_sum(const std::string& s) {
    int depth = 0;
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      else if (s[i] == ')') --depth;
      else if (depth == 0 && i > 0 && (s[i] == '+' || s[i] == '-') && s[i - 1] != '^') return true;
    }
    return false;
  }

  Terms t_;
};

template <class C>
bool is_zero(const PolyForm<C>& f) {
  return f.is_zero();
}

// Canonical u_label on the simplex of `family`: the last label is 1 - sum of the others.
template <class C>
PolyForm<C> simplex_u(int family, int label) {
  int n = family_size(family);
  if (label < 0 || label >= n) throw std::out_of_range("simplex_u: label out of range");
  if (label < n - 1) return PolyForm<C>::gen(make_gen(family, label));
  PolyForm<C> r(C(Rational(1)));
  for (int l = 0; l < n - 1; ++l) r -= PolyForm<C>::gen(make_gen(family, l));
  return r;
}

template <class C>
PolyForm<C> simplex_du(int family, int label) {
  return simplex_u<C>(family, label).d();
}

// Homomorphism of a whole family given images of ALL its labels (including the eliminated one).
// The images must sum to 1.
template <class C>
PolyForm<C> substitute_family(const PolyForm<C>& a, int family, const std::vector<PolyForm<C>>& images) {
  int n = family_size(family);
  if (static_cast<int>(images.size()) != n) throw std::invalid_argument("substitute_family: wrong number of images");
  PolyForm<C> sum;
  for (const auto& im : images) sum += im;
  if (sum != PolyForm<C>(C(Rational(1))))
    throw std::invalid_argument("substitution does not preserve the simplex relation");
  std::map<Gen, PolyForm<C>> m;
  for (int l = 0; l < n - 1; ++l) m.emplace(make_gen(family, l), images[l]);
  return a.substitute(m);
}

// Restrict to the face {u_l = 0 : l in zero} of the face spanned by `active` labels
// (sorted; the largest active label is the eliminated one). Default active = all labels.
template <class C>
PolyForm<C> restrict_face(const PolyForm<C>& a, int family, const std::vector<int>& zero,
                          std::vector<int> active = {}) {
  int n = family_size(family);
  if (active.empty())
    for (int l = 0; l < n; ++l) active.push_back(l);
  std::vector<int> remain;
  for (int l : active)
    if (std::find(zero.begin(), zero.end(), l) == zero.end()) remain.push_back(l);
  if (remain.empty()) throw std::invalid_argument("restrict_face: zero set covers every label");
  int last = active.back();
  std::map<Gen, PolyForm<C>> m;
  for (int l : zero) {
    if (std::find(active.begin(), active.end(), l) == active.end()) continue;
    if (l != last) m.emplace(make_gen(family, l), PolyForm<C>());
  }
  if (std::find(zero.begin(), zero.end(), last) != zero.end()) {
    int r = remain.back();
    PolyForm<C> img(C(Rational(1)));
    for (int l : remain)
      if (l != r) img -= PolyForm<C>::gen(make_gen(family, l));
    m[make_gen(family, r)] = img;
  }
  return a.substitute(m);
}

// Pullback along a map of vertex sets phi: [n] -> [m] (phi[j] = image of j): t_i -> sum_{phi(j)=i} t_j.
template <class C>
PolyForm<C> pullback_vertex_map(const std::vector<int>& phi, int m, const PolyForm<C>& a) {
  int n = static_cast<int>(phi.size()) - 1;
  if (n < 0) throw std::invalid_argument("pullback_vertex_map: empty source");
  std::vector<PolyForm<C>> images(m + 1);
  for (int j = 0; j <= n; ++j) {
    if (phi[j] < 0 || phi[j] > m) throw std::invalid_argument("pullback_vertex_map: label out of range");
    if (j > 0 && phi[j] < phi[j - 1]) throw std::invalid_argument("pullback_vertex_map: map not order preserving");
    images[phi[j]] += simplex_u<C>(fam_simplex(n), j);
  }
  std::map<Gen, PolyForm<C>> sub;
  for (int i = 0; i < m; ++i) sub.emplace(make_gen(fam_simplex(m), i), images[i]);
  return a.substitute(sub);
}

}  // namespace rav
