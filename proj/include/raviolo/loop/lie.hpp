#pragma once

#include "raviolo/exact/linalg.hpp"
#include "raviolo/exact/rational.hpp"

#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace rav {

// Finite-dimensional Lie algebra over Q given by structure constants [b_i, b_j] = sum_k c^k_ij b_k.
class LieData {
 public:
  using Terms = std::vector<std::pair<int, Rational>>;
  using Constant = std::tuple<int, int, int, Rational>;  // (i, j, k, c^k_ij) for i < j

  // Throws std::invalid_argument unless antisymmetry and the Jacobi identity hold.
  LieData(std::vector<std::string> names, const std::vector<Constant>& constants);

  static LieData sl2();
  static LieData abelian(int dim);

  int dim() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  int index(const std::string& name) const;
  const Terms& bracket(int i, int j) const { return table_.at(i).at(j); }
  // Matrix of ad(b_i) in the basis b_0..b_{dim-1}.
  RMatrix ad(int i) const;
  bool jacobi_holds() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<Terms>> table_;
};

}  // namespace rav
