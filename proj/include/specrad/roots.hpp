#pragma once

// Certified real-root isolation for integer polynomials: Sturm sequences plus
// rational bisection. Brackets are exact rational intervals; no floating point
// enters any decision.

#include "specrad/poly.hpp"

namespace specrad {

// Sturm sequence of p (integer pseudo-remainders, sign-preserving, primitive).
struct SturmChain {
  std::vector<IntPoly> seq;
  int sign_changes(const Rat &x) const;
  int sign_changes_at_inf(int dir) const;  // dir=+1 at +inf, -1 at -inf
  // number of distinct real roots in the half-open interval (a, b], a < b
  int count(const Rat &a, const Rat &b) const;
  // number of distinct real roots in (a, +inf)
  int count_above(const Rat &a) const;
};

SturmChain sturm_chain(const IntPoly &p);

// 1 + max |c_i| / |c_lead|: every real root lies in (-bound, bound).
Rat cauchy_bound(const IntPoly &p);

struct RootBracket {
  Rat lo, hi;    // lo < hi, sign change across, exactly one root inside
  IntPoly poly;  // squarefree primitive polynomial certifying the bracket
  bool exact = false;  // rational roots are always detected and flagged
  Rat value;           // the root itself when exact (bracket still valid)

  Rat mid() const { return (lo + hi) / 2; }
  Rat width() const { return hi - lo; }
};

// Certified bracket of width <= tol around the smallest positive real root.
// Throws std::runtime_error("no positive root") when none exists.
RootBracket isolate_smallest_positive_root(const IntPoly &p, const Rat &tol);

// Narrow an existing bracket to width <= tol (no-op when already narrower).
void refine_bracket(RootBracket &rb, const Rat &tol);

// All real roots, isolated and refined to width <= tol, in increasing order.
std::vector<RootBracket> isolate_real_roots(const IntPoly &p, const Rat &tol);

// Decimal rendering of a real number known only through a certified bracket.
// Produces >= sig_digits significant digits, truncated toward zero; refines the
// bracket (by bisection on rb.poly, or exactly when rb.exact) until the
// truncations of lo and hi agree, so output is deterministic.
std::string bracket_decimal(RootBracket &rb, int sig_digits);

// Same rendering for an exact rational (terminating decimals print in full).
std::string rational_decimal(const Rat &v, int sig_digits);

}  // namespace specrad
