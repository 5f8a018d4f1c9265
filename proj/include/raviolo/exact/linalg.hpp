#pragma once

#include "raviolo/exact/rational.hpp"

#include <vector>

namespace rav {

using RVector = std::vector<Rational>;
using RMatrix = std::vector<RVector>;  // row-major, rows x cols

struct RowEchelon {
  RMatrix rows;            // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;  // pivot column of each row
};

RowEchelon row_reduce(RMatrix m, int cols);
int rank(const RMatrix& m, int cols);
// Basis of {x : m x = 0}.
std::vector<RVector> kernel(const RMatrix& m, int cols);
// Columns of `m` that extend a basis of the column space, chosen greedily left to right.
std::vector<int> pivot_columns(const RMatrix& m, int cols);

}  // namespace rav
