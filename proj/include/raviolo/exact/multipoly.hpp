#pragma once

#include "raviolo/exact/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rav {

// Variable i renders as z{i+1}; the index `w` (if >= 0) renders as "w".
struct VarNames {
  int w = -1;
  std::string operator()(int i) const;
};

using Exps = std::vector<int>;

// Graded lexicographic: higher total degree first, then lexicographically larger.
struct GrlexGreater {
  bool operator()(const Exps& a, const Exps& b) const;
};

class MultiPoly {
 public:
  using Terms = std::map<Exps, Rational, GrlexGreater>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);
  MultiPoly(long c) : MultiPoly(Rational(c)) {}

  static MultiPoly var(int i, long power = 1);
  static MultiPoly monomial(const Exps& e, const Rational& c);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  int nvars() const;
  int degree_in(int var) const;
  int total_degree() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }
  bool operator<(const MultiPoly& o) const;

  Rational eval(const std::vector<Rational>& point) const;
  // Replace variable `var` by polynomial `image`.
  MultiPoly substitute(int var, const MultiPoly& image) const;
  // Coefficients c_b with f(z_var -> z_s + t) = sum_b c_b t^b.
  std::vector<MultiPoly> shift_expand(int var, int s) const;
  // Exact quotient by (z_i - z_j), or nullopt when not divisible.
  std::optional<MultiPoly> divide_by_difference(int i, int j) const;
  MultiPoly derivative(int var) const;
  // Renumber variables: variable i becomes map[i].
  MultiPoly relabel(const std::vector<int>& map) const;

  std::string to_string(const VarNames& names = {}) const;

 private:
  void add_term(const Exps& e, const Rational& c);
  Terms terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

}  // namespace rav
