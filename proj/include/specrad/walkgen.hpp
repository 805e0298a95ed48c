#pragma once

// Walk counting and the generating function H_A(t) = sum_n chi_n t^n, where
// chi_0 = 1 and chi_n counts directed walks with n-1 edges (so chi_1 = number
// of vertices, chi_2 = number of edges, chi_3 = walks of length 2).
// Exact rational functions for concrete digraphs, Z[m]-coefficient rational
// functions for the near-complete families, and reciprocity checks.

#include <vector>

#include "specrad/digraph.hpp"
#include "specrad/poly.hpp"

namespace specrad {

// Number of directed walks with exactly `len` edges, 1^T M^len 1.
// walk_count(A, 0) = vertex count.
Int walk_count(const Digraph &A, int len);

struct WalkSeries {
  Digraph source;
  std::vector<Int> chi;  // chi[k] = chi_k; chi_0 = 1, chi_k = walk_count(A, k-1)
};

WalkSeries walk_series(const Digraph &A, int order);

// det(I - tA), exact, via Newton's identities on the power sums tr(A^k).
IntPoly char_den(const Digraph &A);

// H_A(t) as a reduced rational function with den(0) = 1; the numerator is
// recovered from Q(t) times the truncated chi series.
RatFnQ walk_series_rational(const Digraph &A);

// H_A(t) for the family A(m) = embed_complement(R, m), reduced over Q(m):
//   H_A(t) = 1 / ( H_R(-t) - (m + 1 - v_R) t ),   v_R = vertex count of R.
// Returned with integer-polynomial coefficients and den(0, m) = 1.
RatFnM family_series_symbolic(const Digraph &R);

// Substitute an integer m and reduce over Q[t]. For m >= v_R - 1 this equals
// walk_series_rational(embed_complement(R, m)).
RatFnQ specialize_family(const RatFnM &H, int m);

// Coefficients of t^0..t^order of H_A(t) * H_{complement(A)}(-t) - 1;
// identically zero by complementation reciprocity.
std::vector<Rat> reciprocity_defect(const Digraph &A, int order);

}  // namespace specrad
