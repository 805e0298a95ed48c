#pragma once

// Searches and certificates: partition-shaped near-complete enumerations,
// exhaustive walk-of-length-2 and spectral-radius maximization at desk scale,
// coefficientwise dominance of the saturated-star family, and the
// resultant-based no-crossing certificate for pairs of families.

#include <string>
#include <vector>

#include "specrad/digraph.hpp"
#include "specrad/poly.hpp"
#include "specrad/roots.hpp"

namespace specrad {

struct SearchReport {
  std::string universe;         // human-readable description of the universe
  Int count_examined;           // equals the closed-form universe size
  bool value_exact = true;      // argmax value known exactly
  Int value_int;                // exact value for counting searches
  Rat value_lo, value_hi;       // certified bracket for spectral searches
  std::vector<Digraph> argmax;  // canonical forms, sorted
  std::vector<std::string> violations;  // dominance violations with witnesses
  std::vector<std::string> notes;       // heuristic flags, comparisons, caveats
  double elapsed_seconds = 0.0;
  int threads = 1;

  std::string to_text() const;  // key: value lines
  std::string to_json() const;
};

// All digraphs on m+1 vertices with (m+1)^2 - s edges whose adjacency matrix
// is partition-shaped; one per partition of s with at most m parts, each at
// most m. Throws unless s >= 1 and (m+1)^2 - s > m^2 + 1.
std::vector<Digraph> enumerate_pdi(int m, int s);

// Exhaustive max of walk_count(., 2) over all edge-subsets of size s on
// vbound labeled vertices; argmax up to vertex-permutation canonical form.
// Refuses universes larger than 10^8 with a size estimate.
SearchReport backelin_argmax(int s, int vbound);
SearchReport backelin_argmax_serial(int s, int vbound);  // reference kernel

// Certified-rho maximization over all n-vertex digraphs with k edges; ties
// are split by bracket refinement or proven equal by identical reduced
// characteristic factors. Refuses universes larger than 10^7.
SearchReport exhaustive_rho_max(int n, int k, const Rat &tol);
SearchReport exhaustive_rho_max_serial(int n, int k, const Rat &tol);

// Check chi_i(A*) >= chi_i(B) for i <= order, strict for 3 <= i, where
// A* = embed_complement(saturated_star(s), mVal) and B ranges over
// enumerate_pdi(mVal, s). Violations are reported, not thrown. s must be != 4.
SearchReport dominance_check(int mVal, int s, int order);

// chi_{chi_index} of member(m) as an exact integer polynomial in m,
// interpolated from m = m_lo..m_hi (range must oversample the degree).
IntPoly family_chi_poly(const FamilySpec &family, int chi_index, int m_lo, int m_hi);

struct NoCrossingCertificate {
  bool granted = false;
  IntPoly resultant_m;        // primitive Res_t of the two family denominators
  std::vector<RootBracket> real_roots;  // real roots of its squarefree part
  int sign = 0;               // certified sign of r_A(m) - r_B(m) on [mMin, inf)
  std::vector<Rat> checkpoints;         // m values where the sign was certified
  std::vector<std::string> cleared;     // critical points examined and separated
  std::string detail;

  std::string to_text() const;
};

// Certifies that r_A(m) - r_B(m) keeps one sign for all real m >= mMin, where
// r_F(m) is the smallest positive root of family F's denominator at m.
// Crossings can only occur where Res_t of the denominators (or a leading
// coefficient) vanishes; every such critical point >= mMin is cleared by
// certifying disjoint dominant-pole enclosures across it. Throws
// "families share a pole branch" when the resultant vanishes identically, and
// refuses with the offending interval when separation cannot be certified.
NoCrossingCertificate no_crossing_certificate(const FamilySpec &famA, const FamilySpec &famB,
                                              int mMin);

}  // namespace specrad
