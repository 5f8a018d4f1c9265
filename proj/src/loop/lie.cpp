#include "raviolo/loop/lie.hpp"

#include <stdexcept>

namespace rav {

LieData::LieData(std::vector<std::string> names, const std::vector<Constant>& constants) : names_(std::move(names)) {
  const int n = dim();
  if (n == 0) throw std::invalid_argument("Lie algebra must have a nonempty basis");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate basis name " + names_[i]);
  std::vector<std::vector<std::vector<Rational>>> c(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
  for (const auto& [i, j, k, v] : constants) {
    if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n) throw std::invalid_argument("structure constant index out of range");
    if (i == j) {
      if (sgn(v) != 0) throw std::invalid_argument("antisymmetry violated: [b,b] != 0");
      continue;
    }
    c[i][j][k] += v;
    c[j][i][k] -= v;
  }
  table_.assign(n, std::vector<Terms>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (sgn(c[i][j][k]) != 0) table_[i][j].emplace_back(k, c[i][j][k]);
  if (!jacobi_holds()) throw std::invalid_argument("structure constants violate the Jacobi identity");
}

LieData LieData::sl2() {
  // [e,f] = h, [h,e] = 2e, [h,f] = -2f in the basis (e, h, f).
  return LieData({"e", "h", "f"}, {{0, 2, 1, 1}, {1, 0, 0, 2}, {1, 2, 2, -2}});
}

LieData LieData::abelian(int dim) {
  std::vector<std::string> names;
  for (int i = 0; i < dim; ++i) names.push_back("a" + std::to_string(i + 1));
  return LieData(names, {});
}

int LieData::index(const std::string& name) const {
  for (int i = 0; i < dim(); ++i)
    if (names_[i] == name) return i;
  throw std::invalid_argument("unknown Lie basis element '" + name + "'");
}

RMatrix LieData::ad(int i) const {
  RMatrix m(dim(), RVector(dim()));
  for (int j = 0; j < dim(); ++j)
    for (const auto& [k, c] : bracket(i, j)) m[k][j] = c;
  return m;
}

bool LieData::jacobi_holds() const {
  const int n = dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        std::vector<Rational> acc(n);
        auto add = [&](int a, int b, int c) {
          for (const auto& [p, x] : bracket(b, c))
            for (const auto& [q, y] : bracket(a, p)) acc[q] += x * y;
        };
        add(i, j, k);
        add(j, k, i);
        add(k, i, j);
        for (const auto& x : acc)
          if (sgn(x) != 0) return false;
      }
  return true;
}

}  // namespace rav
