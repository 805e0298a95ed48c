#include "specrad/resultant.hpp"

#include <stdexcept>

namespace specrad {

IntPoly resultant(const BivarPoly &a, const BivarPoly &b) {
  if (is_zero(a) || is_zero(b)) throw std::invalid_argument("resultant: zero polynomial");
  const int da = a.degree(), db = b.degree();
  if (da == 0 && db == 0) return IntPoly::one();
  if (da == 0) {
    IntPoly r = IntPoly::one();
    for (int i = 0; i < db; ++i) r = r * a.coeff(0);
    return r;
  }
  if (db == 0) {
    IntPoly r = IntPoly::one();
    for (int i = 0; i < da; ++i) r = r * b.coeff(0);
    return r;
  }

  const int n = da + db;
  std::vector<std::vector<IntPoly>> syl(n, std::vector<IntPoly>(n, IntPoly()));
  // db rows of a's coefficients (highest degree first), then da rows of b's
  for (int r = 0; r < db; ++r)
    for (int k = 0; k <= da; ++k) syl[r][r + k] = a.coeff(da - k);
  for (int r = 0; r < da; ++r)
    for (int k = 0; k <= db; ++k) syl[db + r][r + k] = b.coeff(db - k);
  return det_bareiss(std::move(syl));
}

}  // namespace specrad
