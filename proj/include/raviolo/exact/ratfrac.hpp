#pragma once

#include "raviolo/exact/multipoly.hpp"

#include <map>
#include <string>
#include <utility>

namespace rav {

// Element of B_N: numerator over prod_{i<j} (z_i - z_j)^{e_ij}, kept normalized.
class RatFrac {
 public:
  using Pair = std::pair<int, int>;
  using DenMap = std::map<Pair, int>;

  RatFrac() = default;
  RatFrac(const MultiPoly& p) : num_(p) {}
  RatFrac(const Rational& c) : num_(c) {}
  RatFrac(long c) : num_(Rational(c)) {}

  static RatFrac normalize(MultiPoly num, DenMap den);
  static RatFrac var(int i) { return RatFrac(MultiPoly::var(i)); }
  // (z_i - z_j)^{-e}, any order of i, j.
  static RatFrac inv_difference(int i, int j, int e = 1);
  // (z_i - z_j)^{e}, any order.
  static RatFrac difference(int i, int j, int e = 1);

  const MultiPoly& numerator() const { return num_; }
  const DenMap& denominator() const { return den_; }
  int den_exponent(int i, int j) const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  bool is_regular_in(int i, int j) const;
  bool vanishes_at_infinity_in(int w) const;
  int nvars() const;

  RatFrac operator-() const;
  friend RatFrac operator+(const RatFrac& a, const RatFrac& b);
  friend RatFrac operator-(const RatFrac& a, const RatFrac& b) { return a + (-b); }
  friend RatFrac operator*(const RatFrac& a, const RatFrac& b);
  RatFrac& operator+=(const RatFrac& o) { return *this = *this + o; }
  RatFrac& operator-=(const RatFrac& o) { return *this = *this - o; }
  RatFrac& operator*=(const RatFrac& o) { return *this = *this * o; }
  bool operator==(const RatFrac& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFrac& o) const { return !(*this == o); }
  bool operator<(const RatFrac& o) const;

  Rational eval(const std::vector<Rational>& point) const;
  RatFrac relabel(const std::vector<int>& map) const;
  // Partial derivative in variable `var`.
  RatFrac derivative(int var) const;

  std::string to_string(const VarNames& names = {}) const;

 private:
  RatFrac(MultiPoly num, DenMap den) : num_(std::move(num)), den_(std::move(den)) {}
  MultiPoly num_;
  DenMap den_;
};

inline bool is_zero(const RatFrac& f) { return f.is_zero(); }

MultiPoly difference_poly(int i, int j);

}  // namespace rav
