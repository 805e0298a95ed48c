#pragma once

// Digraphs as bit-row adjacency (loops allowed, no multi-edges), the named
// near-complete constructions, shape and connectivity predicates, and the
// "dgm v1" text format.

#include <cstdint>
#include <string>
#include <vector>

#include "specrad/poly.hpp"

namespace specrad {

// Vertices are 1-indexed in the public API to match the usual matrix
// notation; bit j-1 of rows[i-1] holds the entry (i,j).
struct Digraph {
  int n = 0;
  std::vector<std::uint64_t> rows;

  Digraph() = default;
  explicit Digraph(int n_) : n(n_) {
    if (n_ < 0 || n_ > 64) throw std::runtime_error("Digraph: vertex count must be in [0,64]");
    rows.assign(static_cast<size_t>(n_), 0);
  }

  bool edge(int i, int j) const { return (rows[i - 1] >> (j - 1)) & 1u; }
  void set_edge(int i, int j, bool v = true) {
    std::uint64_t bit = std::uint64_t(1) << (j - 1);
    if (v)
      rows[i - 1] |= bit;
    else
      rows[i - 1] &= ~bit;
  }

  int edge_count() const {
    int k = 0;
    for (auto r : rows) k += __builtin_popcountll(r);
    return k;
  }
  int out_degree(int i) const { return __builtin_popcountll(rows[i - 1]); }
  int in_degree(int j) const {
    int k = 0;
    for (auto r : rows) k += (r >> (j - 1)) & 1u;
    return k;
  }

  bool operator==(const Digraph &o) const { return n == o.n && rows == o.rows; }
  bool operator<(const Digraph &o) const {
    if (n != o.n) return n < o.n;
    return rows < o.rows;
  }
};

Digraph complete_with_loops(int n);
Digraph empty_digraph(int n);

// M(m,p,q): complete-with-loops on vertices 1..m; vertex m+1 has out-edges to
// 1..p and in-edges from 1..q. Edge count m^2 + p + q.
Digraph make_gmpq(int m, int p, int q);

// M(m,l) = M(m, ceil(l/2), l - ceil(l/2)) for 0 < l < 2m+1.
Digraph make_ml(int m, int ell);

// Saturated star: s=2k-1 -> k vertices, loop at 1 and edges (1,i),(i,1);
// s=2k -> additionally vertex k+1 and the single edge (1,k+1).
Digraph saturated_star(int s);

// Digraph on m+1 vertices with edge i->j iff (m+2-i)->(m+2-j) is absent in R
// (vertices of R beyond its count treated as isolated).
Digraph embed_complement(const Digraph &R, int m);

// Complement including loops; involution.
Digraph complement(const Digraph &A);

// True iff rows and columns are weakly decreasing (ones form a Young diagram
// anchored top-left).
bool is_partition_shaped(const Digraph &A);

bool is_strongly_connected(const Digraph &A);

// dgm v1: first line n, then n lines of n characters from {0,1}.
std::string to_dgm(const Digraph &A);
Digraph from_dgm(const std::string &text);

// Lexicographically minimal adjacency bit-string over all permutations of the
// non-isolated vertices (isolated vertices dropped). Intended for the small
// digraphs produced by searches (at most ~10 active vertices).
Digraph canonical_form(const Digraph &A);

// The near-complete family generated by a seed R: member(m) has (m+1)^2 - s
// edges, missing a rotated copy of R in the bottom-right corner.
struct FamilySpec {
  Digraph seed;
  int s = 0;

  explicit FamilySpec(Digraph R);
  Digraph member(int m) const { return embed_complement(seed, m); }
};

}  // namespace specrad
