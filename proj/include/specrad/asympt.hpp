#pragma once

// Asymptotics of the dominant pole r(m) of a near-complete family as m grows:
// the pole problem extracted from a seed digraph, the symbolic expansion in
// eps = 1/(m+1), and certified numeric Laurent fits in powers of 1/m.

#include <vector>

#include "specrad/digraph.hpp"
#include "specrad/poly.hpp"
#include "specrad/roots.hpp"

namespace specrad {

// Data (s, c, a_i, b_i) such that the family denominator is proportional to
//   1 - (m+1) t + s t^2 - c t^3 + t^4 B(t)/A(t)
// with A(t) = 1 + a_1 t + ... and B(t) = b_0 + b_1 t + ....
struct PoleProblem {
  Int s;                     // edge count of the seed
  Int c;                     // walks of length 2 in the seed
  std::vector<Int> aCoeffs;  // a_1, a_2, ...
  std::vector<Int> bCoeffs;  // b_0, b_1, ...

  IntPoly A() const;
  IntPoly B() const;
};

// Extract the pole problem from a seed; the reconstruction identity
//   A(t)·(1 - (m+1)t + s t^2 - c t^3) + t^4 B(t) = A(t)·(H_R(-t) - (m+1-v_R) t)
// holds exactly in Z[m][t].
PoleProblem pole_problem_from_family(const Digraph &R);

// Coefficients w_1..w_K of the dominant-pole series r(eps) = eps (1 + sum w_i eps^i),
// eps = 1/(m+1). Always w_1 = 0, w_2 = s, w_3 = -c, w_4 = 2 s^2 + b_0.
struct EpsilonExpansion {
  std::vector<Rat> w;
};

EpsilonExpansion epsilon_expansion(const PoleProblem &P, int order);

// Re-expand r(eps) in powers of x = 1/m via eps = x/(1+x); returns d_1..d_order
// with r(m) = sum d_j m^{-j} + O(m^{-(order+1)}). Requires order <= |w| + 1.
std::vector<Rat> to_inverse_m(const EpsilonExpansion &e, int order);

// Integer Laurent coefficients d_1..d_orders with r(m) ~ sum d_j m^{-j},
// recovered from certified pole brackets at the sample values of m.
struct LaurentFit {
  std::vector<Int> coeffs;
  // residual_bounds[j-1] bounds sup over samples of
  // |r(m) - sum_{i<=j} d_i m^{-i}| * m^{j+1}; bounded entries certify that
  // residuals shrink like the first omitted power.
  std::vector<Rat> residual_bounds;
};

// Certified pole sampling plus exact interpolation in 1/m; throws
// "expansion order too high for sample precision" when the rounded
// coefficients are not unambiguous integers. Requires |sample_ms| > orders.
LaurentFit laurent_fit(const FamilySpec &family, int orders, const std::vector<int> &sample_ms);

// Certified bracket of width <= width around the smallest positive root of
// the family's specialized denominator at integer m.
RootBracket family_pole(const FamilySpec &family, int m, const Rat &width);

}  // namespace specrad
