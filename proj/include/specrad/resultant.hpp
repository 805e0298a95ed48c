#pragma once

// Resultants via Sylvester matrices with fraction-free (Bareiss) elimination.
// Entries live in Z[m], so the result is an integer polynomial in m.

#include "specrad/poly.hpp"

namespace specrad {

// det of a square matrix with entries in an integral domain (Int or IntPoly),
// by Bareiss one-step fraction-free elimination.
template <class E> E det_bareiss(std::vector<std::vector<E>> mat) {
  const int n = static_cast<int>(mat.size());
  if (n == 0) return E(1);
  int sign = 1;
  E prev = E(1);
  for (int k = 0; k + 1 < n; ++k) {
    if (is_zero(mat[k][k])) {
      int piv = -1;
      for (int r = k + 1; r < n; ++r)
        if (!is_zero(mat[r][k])) {
          piv = r;
          break;
        }
      if (piv < 0) return E{};  // singular
      std::swap(mat[k], mat[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        E t = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j];
        mat[i][j] = coeff_exact_div(t, prev);
      }
      mat[i][k] = E{};
    }
    prev = mat[k][k];
  }
  E det = mat[n - 1][n - 1];
  if (sign < 0) det = -det;
  return det;
}

// Res_t(a, b) for nonzero a, b in (Z[m])[t]; zero iff a and b share a root
// over the algebraic closure of Q(m), i.e. iff they are not coprime in Q(m)[t].
IntPoly resultant(const BivarPoly &a, const BivarPoly &b);

}  // namespace specrad
