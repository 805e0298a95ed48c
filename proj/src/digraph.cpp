#include "specrad/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace specrad {

namespace {

std::uint64_t low_bits(int k) { return k >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << k) - 1); }

}  // namespace

Digraph complete_with_loops(int n) {
  Digraph g(n);
  for (int i = 0; i < n; ++i) g.rows[i] = low_bits(n);
  return g;
}

Digraph empty_digraph(int n) { return Digraph(n); }

Digraph make_gmpq(int m, int p, int q) {
  if (m < 1 || m > 63) throw std::invalid_argument("make_gmpq: m must be in [1,63]");
  if (p < 0 || p > m || q < 0 || q > m)
    throw std::invalid_argument("make_gmpq: p and q must be in [0,m]");
  Digraph g(m + 1);
  for (int i = 1; i <= m; ++i) g.rows[i - 1] = low_bits(m);
  for (int i = 1; i <= q; ++i) g.set_edge(i, m + 1);  // q in-edges of vertex m+1
  for (int j = 1; j <= p; ++j) g.set_edge(m + 1, j);  // p out-edges of vertex m+1
  return g;
}

Digraph make_ml(int m, int ell) {
  if (ell <= 0 || ell >= 2 * m + 1) throw std::invalid_argument("make_ml: need 0 < ell < 2m+1");
  int p = (ell + 1) / 2;
  return make_gmpq(m, p, ell - p);
}

Digraph saturated_star(int s) {
  if (s <= 0) throw std::invalid_argument("saturated_star: s must be positive");
  int k = (s + 1) / 2;
  bool even = (s % 2 == 0);
  Digraph g(even ? k + 1 : k);
  for (int i = 1; i <= k; ++i) {
    g.set_edge(1, i);
    g.set_edge(i, 1);
  }
  if (even) g.set_edge(1, k + 1);
  return g;
}

Digraph embed_complement(const Digraph &R, int m) {
  if (m < 1 || m + 1 > 64) throw std::invalid_argument("embed_complement: m must be in [1,63]");
  if (R.n > m + 1) throw std::invalid_argument("embed_complement: seed larger than m+1 vertices");
  int n = m + 1;
  Digraph g(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      int ri = m + 2 - i, rj = m + 2 - j;
      bool removed = ri <= R.n && rj <= R.n && R.edge(ri, rj);
      if (!removed) g.set_edge(i, j);
    }
  }
  return g;
}

Digraph complement(const Digraph &A) {
  Digraph g(A.n);
  for (int i = 0; i < A.n; ++i) g.rows[i] = ~A.rows[i] & low_bits(A.n);
  return g;
}

bool is_partition_shaped(const Digraph &A) {
  int prev = A.n + 1;
  for (int i = 0; i < A.n; ++i) {
    std::uint64_t r = A.rows[i];
    if ((r & (r + 1)) != 0) return false;  // not a prefix of columns
    int len = __builtin_popcountll(r);
    if (len > prev) return false;
    prev = len;
  }
  return true;
}

bool is_strongly_connected(const Digraph &A) {
  if (A.n == 0) return false;
  auto reach = [&](bool transpose) {
    std::uint64_t seen = 1;
    while (true) {
      std::uint64_t next = seen;
      for (int i = 0; i < A.n; ++i) {
        if (!transpose) {
          if (seen & (std::uint64_t(1) << i)) next |= A.rows[i];
        } else {
          if (A.rows[i] & seen) next |= std::uint64_t(1) << i;
        }
      }
      if (next == seen) return seen;
      seen = next;
    }
  };
  std::uint64_t all = low_bits(A.n);
  return reach(false) == all && reach(true) == all;
}

std::string to_dgm(const Digraph &A) {
  std::ostringstream os;
  os << A.n << "\n";
  for (int i = 1; i <= A.n; ++i) {
    for (int j = 1; j <= A.n; ++j) os << (A.edge(i, j) ? '1' : '0');
    os << "\n";
  }
  return os.str();
}

Digraph from_dgm(const std::string &text) {
  std::istringstream is(text);
  int n = -1;
  if (!(is >> n) || n < 0 || n > 64) throw std::runtime_error("dgm parse: bad vertex count");
  Digraph g(n);
  for (int i = 1; i <= n; ++i) {
    std::string row;
    if (!(is >> row) || static_cast<int>(row.size()) != n)
      throw std::runtime_error("dgm parse: bad row length");
    for (int j = 1; j <= n; ++j) {
      char ch = row[j - 1];
      if (ch != '0' && ch != '1') throw std::runtime_error("dgm parse: expected 0/1");
      if (ch == '1') g.set_edge(i, j);
    }
  }
  std::string rest;
  if (is >> rest) throw std::runtime_error("dgm parse: trailing data");
  return g;
}

Digraph canonical_form(const Digraph &A) {
  std::vector<int> active;  // 0-based indices of non-isolated vertices
  for (int i = 0; i < A.n; ++i) {
    bool out = A.rows[i] != 0;
    bool in = false;
    for (int r = 0; r < A.n && !in; ++r) in = (A.rows[r] >> i) & 1u;
    if (out || in) active.push_back(i);
  }
  const int k = static_cast<int>(active.size());
  if (k == 0) return Digraph(0);
  if (k > 9) throw std::runtime_error("canonical_form: more than 9 active vertices");

  // adjacency restricted to active vertices, rows bit-reversed so that
  // numeric comparison of row vectors equals lexicographic comparison of the
  // row-major 0/1 string
  auto encode = [&](const std::vector<int> &perm) {
    // perm[pos] = which active-vertex (index into `active`) sits at position pos
    std::vector<std::uint64_t> rows(k, 0);
    for (int pi = 0; pi < k; ++pi) {
      int i = active[perm[pi]];
      for (int pj = 0; pj < k; ++pj) {
        int j = active[perm[pj]];
        if ((A.rows[i] >> j) & 1u) rows[pi] |= std::uint64_t(1) << (k - 1 - pj);
      }
    }
    return rows;
  };

  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint64_t> best = encode(perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<std::uint64_t> cand = encode(perm);
    if (cand < best) best = cand;
  }

  Digraph g(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if ((best[i] >> (k - 1 - j)) & 1u) g.set_edge(i + 1, j + 1);
  return g;
}

FamilySpec::FamilySpec(Digraph R) : seed(std::move(R)), s(seed.edge_count()) {
  if (seed.n == 0) throw std::invalid_argument("FamilySpec: seed needs at least one vertex");
}

}  // namespace specrad
