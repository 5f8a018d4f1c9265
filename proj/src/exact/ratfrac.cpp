#include "raviolo/exact/ratfrac.hpp"

#include <stdexcept>

namespace rav {

MultiPoly difference_poly(int i, int j) { return MultiPoly::var(i) - MultiPoly::var(j); }

namespace {

MultiPoly power(const MultiPoly& p, int e) {
  MultiPoly r(1);
  for (int k = 0; k < e; ++k) r = r * p;
  return r;
}

}  // namespace

RatFrac RatFrac::normalize(MultiPoly num, DenMap den) {
  if (num.is_zero()) return RatFrac();
  for (auto it = den.begin(); it != den.end();) {
    auto [i, j] = it->first;
    if (i >= j) throw std::invalid_argument("denominator pair must satisfy i < j");
    if (it->second < 0) {
      num = num * power(difference_poly(i, j), -it->second);
      it->second = 0;
    }
    while (it->second > 0) {
      auto q = num.divide_by_difference(i, j);
      if (!q) break;
      num = std::move(*q);
      --it->second;
    }
    if (it->second == 0) {
      it = den.erase(it);
    } else {
      ++it;
    }
  }
  return RatFrac(std::move(num), std::move(den));
}

RatFrac RatFrac::inv_difference(int i, int j, int e) {
  if (i == j) throw std::invalid_argument("inv_difference needs distinct indices");
  if (e == 0) return RatFrac(1);
  if (e < 0) return difference(i, j, -e);
  Rational sign = (i > j && (e % 2 == 1)) ? Rational(-1) : Rational(1);
  DenMap d{{{std::min(i, j), std::max(i, j)}, e}};
  return RatFrac(MultiPoly(sign), std::move(d));
}

RatFrac RatFrac::difference(int i, int j, int e) {
  if (e < 0) return inv_difference(i, j, -e);
  return RatFrac(power(difference_poly(i, j), e));
}

int RatFrac::den_exponent(int i, int j) const {
  auto it = den_.find({std::min(i, j), std::max(i, j)});
  return it == den_.end() ? 0 : it->second;
}

bool RatFrac::is_regular_in(int i, int j) const {
  if (i == j) throw std::invalid_argument("is_regular_in needs distinct indices");
  return den_exponent(i, j) == 0;
}

bool RatFrac::vanishes_at_infinity_in(int w) const {
  if (num_.is_zero()) return true;
  int dd = 0;
  for (const auto& [p, e] : den_)
    if (p.first == w || p.second == w) dd += e;
  return num_.degree_in(w) < dd;
}

int RatFrac::nvars() const {
  int n = num_.nvars();
  for (const auto& [p, e] : den_) n = std::max(n, p.second + 1);
  return n;
}

RatFrac RatFrac::operator-() const { return RatFrac(-num_, den_); }

RatFrac operator+(const RatFrac& a, const RatFrac& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RatFrac::DenMap d = a.den_;
  for (const auto& [p, e] : b.den_) d[p] = std::max(d[p], e);
  MultiPoly na = a.num_, nb = b.num_;
  for (const auto& [p, e] : d) {
    int ea = a.den_exponent(p.first, p.second), eb = b.den_exponent(p.first, p.second);
    if (e > ea) na = na * power(difference_poly(p.first, p.second), e - ea);
    if (e > eb) nb = nb * power(difference_poly(p.first, p.second), e - eb);
  }
  return RatFrac::normalize(na + nb, std::move(d));
}

RatFrac operator*(const RatFrac& a, const RatFrac& b) {
  if (a.is_zero() || b.is_zero()) return RatFrac();
  if (b.den_.empty() && b.num_.is_constant()) return RatFrac(a.num_ * b.num_.constant_term(), a.den_);
  if (a.den_.empty() && a.num_.is_constant()) return RatFrac(b.num_ * a.num_.constant_term(), b.den_);
  RatFrac::DenMap d = a.den_;
  for (const auto& [p, e] : b.den_) d[p] += e;
  return RatFrac::normalize(a.num_ * b.num_, std::move(d));
}

bool RatFrac::operator<(const RatFrac& o) const {
  if (den_ != o.den_) return den_ < o.den_;
  return num_ < o.num_;
}

Rational RatFrac::eval(const std::vector<Rational>& point) const {
  Rational d = 1;
  for (const auto& [p, e] : den_) {
    Rational x = point.at(p.first) - point.at(p.second);
    if (sgn(x) == 0) throw std::domain_error("evaluation on a diagonal");
    for (int k = 0; k < e; ++k) d *= x;
  }
  return num_.eval(point) / d;
}

RatFrac RatFrac::relabel(const std::vector<int>& map) const {
  MultiPoly n = num_.relabel(map);
  DenMap d;
  for (const auto& [p, e] : den_) {
    int i = map.at(p.first), j = map.at(p.second);
    if (i == j) throw std::invalid_argument("relabel collapses a denominator pair");
    if (i > j) {
      std::swap(i, j);
      if (e % 2) n = -n;
    }
    d[{i, j}] += e;
  }
  return normalize(std::move(n), std::move(d));
}

RatFrac RatFrac::derivative(int var) const {
  RatFrac r(num_.derivative(var), den_);
  r = normalize(r.num_, r.den_);
  for (const auto& [p, e] : den_) {
    int s = p.first == var ? 1 : (p.second == var ? -1 : 0);
    if (s == 0) continue;
    r = r - RatFrac(Rational(s * e)) * (*this) * inv_difference(p.first, p.second);
  }
  return r;
}

std::string RatFrac::to_string(const VarNames& names) const {
  if (den_.empty()) return num_.to_string(names);
  MultiPoly n = num_;
  std::string den;
  for (const auto& [p, e] : den_) {
    if (!den.empty()) den += "*";
    std::string f;
    if (p.second == names.w) {
      f = "(w-" + names(p.first) + ")";
      if (e % 2) n = -n;
    } else if (p.first == names.w) {
      f = "(w-" + names(p.second) + ")";
    } else {
      f = "(" + names(p.first) + "-" + names(p.second) + ")";
    }
    den += f;
    if (e > 1) den += "^" + std::to_string(e);
  }
  std::string ns = n.to_string(names);
  if (n.terms().size() > 1) ns = "(" + ns + ")";
  if (den_.size() > 1 || den_.begin()->second > 1) den = "(" + den + ")";
  return ns + "/" + den;
}

}  // namespace rav
