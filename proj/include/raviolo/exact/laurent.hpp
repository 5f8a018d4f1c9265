#pragma once

#include "raviolo/exact/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace rav {

// Precision value meaning "no truncation" (finite Laurent polynomial).
inline constexpr long kExact = 1L << 40;

inline long clamp_precision(long p) { return p >= kExact / 2 ? kExact : p; }

// Truncated Laurent series sum_k c_k t^k; coefficients with k >= precision are unknown.
template <class C>
class Laurent {
 public:
  using Coeffs = std::map<int, C>;

  Laurent() : prec_(kExact) {}
  explicit Laurent(long precision) : prec_(clamp_precision(precision)) {}
  Laurent(const C& c) : prec_(kExact) { add_term(0, c); }

  static Laurent monomial(int k, const C& c, long precision = kExact) {
    Laurent r(precision);
    r.add_term(k, c);
    return r;
  }

  const Coeffs& coeffs() const { return c_; }
  long precision() const { return prec_; }
  bool is_exact() const { return prec_ >= kExact; }
  long min_degree() const { return c_.empty() ? prec_ : c_.begin()->first; }
  bool is_zero() const { return c_.empty(); }

  C coeff(int k) const {
    if (k >= prec_) throw std::out_of_range("coefficient beyond tracked precision");
    auto it = c_.find(k);
    return it == c_.end() ? C() : it->second;
  }

  void add_term(int k, const C& c) {
    if (k >= prec_ || coeff_is_zero(c)) return;
    auto [it, fresh] = c_.try_emplace(k, c);
    if (!fresh) {
      it->second = it->second + c;
      if (coeff_is_zero(it->second)) c_.erase(it);
    }
  }

  Laurent truncated(long precision) const {
    Laurent r(std::min(prec_, clamp_precision(precision)));
    for (const auto& [k, c] : c_)
      if (k < r.prec_) r.c_.emplace(k, c);
    return r;
  }

  Laurent operator-() const {
    Laurent r(prec_);
    for (const auto& [k, c] : c_) r.c_.emplace(k, -c);
    return r;
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r(std::min(a.prec_, b.prec_));
    for (const auto& [k, c] : a.c_) r.add_term(k, c);
    for (const auto& [k, c] : b.c_) r.add_term(k, c);
    return r;
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    long p = kExact;
    if (!b.is_exact()) p = std::min(p, b.prec_ + a.min_degree());
    if (!a.is_exact()) p = std::min(p, a.prec_ + b.min_degree());
    Laurent r(p);
    for (const auto& [i, x] : a.c_) {
      for (const auto& [j, y] : b.c_) {
        if (i + j >= r.prec_) break;
        r.add_term(i + j, x * y);
      }
    }
    return r;
  }

  Laurent scaled_left(const C& s) const {
    Laurent r(prec_);
    for (const auto& [k, c] : c_) r.add_term(k, s * c);
    return r;
  }
  Laurent scaled_right(const C& s) const {
    Laurent r(prec_);
    for (const auto& [k, c] : c_) r.add_term(k, c * s);
    return r;
  }

  // Multiply by t^n.
  Laurent shifted(int n) const {
    Laurent r(is_exact() ? kExact : prec_ + n);
    for (const auto& [k, c] : c_) r.c_.emplace(k + n, c);
    return r;
  }

  Laurent derivative() const {
    Laurent r(is_exact() ? kExact : prec_ - 1);
    for (const auto& [k, c] : c_)
      if (k != 0) r.add_term(k - 1, c * C(Rational(k)));
    return r;
  }

  template <class F>
  auto map_coeffs(F f) const -> Laurent<decltype(f(std::declval<C>()))> {
    Laurent<decltype(f(std::declval<C>()))> r(prec_);
    for (const auto& [k, c] : c_) r.add_term(k, f(c));
    return r;
  }

  // Equal on all exponents below min(precisions, bound).
  bool agrees_with(const Laurent& o, long bound = kExact) const {
    long p = std::min({prec_, o.prec_, bound});
    auto lo = [&](const Coeffs& m) {
      Coeffs out;
      for (const auto& [k, c] : m)
        if (k < p) out.emplace(k, c);
      return out;
    };
    return lo(c_) == lo(o.c_);
  }

  bool operator==(const Laurent& o) const { return prec_ == o.prec_ && c_ == o.c_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  std::string to_string(const std::string& var, const std::function<std::string(const C&)>& show) const {
    std::string out;
    for (const auto& [k, c] : c_) {
      if (!out.empty()) out += " + ";
      std::string cs = show(c);
      out += "(" + cs + ")";
      if (k != 0) out += "*" + var + "^" + std::to_string(k);
    }
    if (!is_exact()) {
      if (!out.empty()) out += " + ";
      out += "O(" + var + "^" + std::to_string(prec_) + ")";
    }
    return out.empty() ? "0" : out;
  }

 private:
  Coeffs c_;
  long prec_;
};

template <class C>
bool is_zero(const Laurent<C>& s) {
  return s.is_zero();
}

}  // namespace rav
