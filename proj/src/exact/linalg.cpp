#include "raviolo/exact/linalg.hpp"

namespace rav {

RowEchelon row_reduce(RMatrix m, int cols) {
  RowEchelon out;
  int r = 0;
  const int nrows = static_cast<int>(m.size());
  for (int c = 0; c < cols && r < nrows; ++c) {
    int p = -1;
    for (int i = r; i < nrows; ++i)
      if (!is_zero(m[i][c])) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (int k = c; k < cols; ++k) m[r][k] *= inv;
    for (int i = 0; i < nrows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      Rational f = m[i][c];
      for (int k = c; k < cols; ++k)
        if (!is_zero(m[r][k])) m[i][k] -= f * m[r][k];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

int rank(const RMatrix& m, int cols) { return static_cast<int>(row_reduce(m, cols).pivots.size()); }

std::vector<RVector> kernel(const RMatrix& m, int cols) {
  RowEchelon e = row_reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<RVector> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RVector x(cols, Rational(0));
    x[f] = 1;
    for (size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = -e.rows[r][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<int> pivot_columns(const RMatrix& m, int cols) { return row_reduce(m, cols).pivots; }

}  // namespace rav
