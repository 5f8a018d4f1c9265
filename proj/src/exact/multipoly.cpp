#include "raviolo/exact/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rav {

namespace {

void trim(Exps& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

int total(const Exps& e) { return std::accumulate(e.begin(), e.end(), 0); }

int exp_at(const Exps& e, int i) { return i < static_cast<int>(e.size()) ? e[i] : 0; }

void set_exp(Exps& e, int i, int v) {
  if (static_cast<int>(e.size()) <= i) e.resize(i + 1, 0);
  e[i] = v;
  trim(e);
}

}  // namespace

std::string VarNames::operator()(int i) const {
  if (i == w) return "w";
  return "z" + std::to_string(i + 1);
}

bool GrlexGreater::operator()(const Exps& a, const Exps& b) const {
  int ta = total(a), tb = total(b);
  if (ta != tb) return ta > tb;
  size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    int x = i < a.size() ? a[i] : 0;
    int y = i < b.size() ? b[i] : 0;
    if (x != y) return x > y;
  }
  return false;
}

MultiPoly::MultiPoly(const Rational& c) {
  if (!rav::is_zero(c)) terms_.emplace(Exps{}, c);
}

MultiPoly MultiPoly::var(int i, long power) {
  Exps e;
  set_exp(e, i, static_cast<int>(power));
  return monomial(e, Rational(1));
}

MultiPoly MultiPoly::monomial(const Exps& e, const Rational& c) {
  MultiPoly p;
  Exps t = e;
  trim(t);
  p.add_term(t, c);
  return p;
}

void MultiPoly::add_term(const Exps& e, const Rational& c) {
  if (rav::is_zero(c)) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (rav::is_zero(it->second)) terms_.erase(it);
  }
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Exps{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::nvars() const {
  int n = 0;
  for (const auto& [e, c] : terms_) n = std::max(n, static_cast<int>(e.size()));
  return n;
}

int MultiPoly::degree_in(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max(d, exp_at(e, var));
  return d;
}

int MultiPoly::total_degree() const {
  return terms_.empty() ? -1 : total(terms_.begin()->first);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (rav::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exps e(std::max(ea.size(), eb.size()), 0);
      for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

bool MultiPoly::operator<(const MultiPoly& o) const {
  return std::lexicographical_compare(
      terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return GrlexGreater{}(x.first, y.first);
        return x.second < y.second;
      });
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (i >= point.size()) throw std::out_of_range("evaluation point too short");
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), e[i]);
      t *= p;
    }
    s += t;
  }
  return s;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& image) const {
  std::map<int, MultiPoly> powers;
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    int a = exp_at(e, var);
    Exps rest = e;
    set_exp(rest, var, 0);
    if (a == 0) {
      r.add_term(rest, c);
      continue;
    }
    auto it = powers.find(a);
    if (it == powers.end()) {
      MultiPoly p(1);
      for (int k = 0; k < a; ++k) p = p * image;
      it = powers.emplace(a, p).first;
    }
    r += monomial(rest, c) * it->second;
  }
  return r;
}

std::vector<MultiPoly> MultiPoly::shift_expand(int var, int s) const {
  std::vector<MultiPoly> out(std::max(degree_in(var), 0) + 1);
  for (const auto& [e, c] : terms_) {
    int a = exp_at(e, var);
    Exps rest = e;
    set_exp(rest, var, 0);
    for (int b = 0; b <= a; ++b) {
      Exps m = rest;
      set_exp(m, s, exp_at(m, s) + a - b);
      out[b].add_term(m, c * binomial(a, b));
    }
  }
  return out;
}

std::optional<MultiPoly> MultiPoly::divide_by_difference(int i, int j) const {
  if (i == j) throw std::invalid_argument("divide_by_difference needs distinct variables");
  int n = degree_in(i);
  if (n <= 0) {
    if (terms_.empty()) return MultiPoly();
    return std::nullopt;
  }
  std::vector<MultiPoly> c(n + 1);
  for (const auto& [e, x] : terms_) {
    Exps rest = e;
    int a = exp_at(e, i);
    set_exp(rest, i, 0);
    c[a].add_term(rest, x);
  }
  MultiPoly zj = var(j);
  std::vector<MultiPoly> q(n);
  q[n - 1] = c[n];
  for (int a = n - 1; a >= 1; --a) q[a - 1] = c[a] + zj * q[a];
  if (!(c[0] + zj * q[0]).is_zero()) return std::nullopt;
  MultiPoly r;
  for (int a = 0; a < n; ++a) r += q[a] * var(i, a);
  return r;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    int a = exp_at(e, var);
    if (a == 0) continue;
    Exps m = e;
    set_exp(m, var, a - 1);
    r.add_term(m, c * a);
  }
  return r;
}

MultiPoly MultiPoly::relabel(const std::vector<int>& map) const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    Exps m;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (i >= map.size()) throw std::out_of_range("relabel map too short");
      set_exp(m, map[i], exp_at(m, map[i]) + e[i]);
    }
    r.add_term(m, c);
  }
  return r;
}

std::string MultiPoly::to_string(const VarNames& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = abs(c);
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names(static_cast<int>(i));
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += a.get_str();
    } else if (a == 1) {
      out += mono;
    } else {
      out += a.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace rav
