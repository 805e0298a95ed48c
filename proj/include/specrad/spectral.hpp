#pragma once

// Certified spectral radius: rho(A) = 1/r where r is the smallest positive
// root of det(I - tA), bracketed by Sturm isolation and rational bisection,
// with an independent power-iteration cross-check.

#include <string>
#include <vector>

#include "specrad/digraph.hpp"
#include "specrad/roots.hpp"

namespace specrad {

struct SpectralResult {
  Rat rho_lo, rho_hi;        // exact rationals bracketing rho(A)
  RootBracket pole;          // certified bracket for r = 1/rho (valid iff !is_zero)
  bool is_zero = false;      // nilpotent adjacency: rho = 0 exactly
  bool exact = false;        // rho is rational; rho_lo == rho_hi
  Rat tol;                   // tolerance the bracket honors
  std::string pole_method;   // how the pole was certified
  std::string check_method;  // how the result was cross-checked

  // Decimal rendering of the bracket, truncated toward zero; refines a copy
  // of the bracket until the digits are determined.
  std::string decimal(int sig_digits) const;
};

// Bracket of width <= tol around rho(A). Nilpotent adjacency (no cycle)
// yields the flagged exact-zero result instead of an error.
SpectralResult spectral_radius(const Digraph &A, const Rat &tol = Rat(1, 1000000000));

// Exact-rational power iteration from the all-ones vector for `iters` steps;
// the Rayleigh-quotient estimate must land in [rho_lo - tol, rho_hi + tol]
// and the Collatz-Wielandt bounds must overlap the certified bracket.
// Throws if A is not strongly connected.
bool verify_perron(const Digraph &A, const SpectralResult &result, int iters,
                   std::string *why = nullptr);

// Audit trail used by the test suite to assert the global bound
// rho <= sqrt(edge count) for every spectral radius the suite computes.
struct RhoAudit {
  int edges = 0;
  int vertices = 0;
  Rat rho_lo, rho_hi;
  bool exact = false;
};
void rho_audit_enable(bool on);
void rho_audit_clear();
std::vector<RhoAudit> rho_audit_entries();

}  // namespace specrad
