#include "specrad/walkgen.hpp"

#include <stdexcept>

namespace specrad {

namespace {

// one step of v <- M v, i.e. next[i] = sum of v[j] over out-neighbors j of i
std::vector<Int> matvec(const Digraph &A, const std::vector<Int> &v) {
  std::vector<Int> next(A.n, Int(0));
  for (int i = 0; i < A.n; ++i) {
    std::uint64_t row = A.rows[i];
    while (row) {
      int j = __builtin_ctzll(row);
      row &= row - 1;
      next[i] += v[j];
    }
  }
  return next;
}

Int vec_sum(const std::vector<Int> &v) {
  Int s = 0;
  for (const auto &x : v) s += x;
  return s;
}

}  // namespace

Int walk_count(const Digraph &A, int len) {
  if (len < 0) throw std::invalid_argument("walk_count: negative length");
  std::vector<Int> v(A.n, Int(1));
  for (int k = 0; k < len; ++k) v = matvec(A, v);
  return vec_sum(v);
}

WalkSeries walk_series(const Digraph &A, int order) {
  if (order < 0) throw std::invalid_argument("walk_series: negative order");
  WalkSeries ws;
  ws.source = A;
  ws.chi.reserve(order + 1);
  ws.chi.push_back(1);
  std::vector<Int> v(A.n, Int(1));
  for (int k = 1; k <= order; ++k) {
    ws.chi.push_back(vec_sum(v));
    if (k < order) v = matvec(A, v);
  }
  return ws;
}

IntPoly char_den(const Digraph &A) {
  const int n = A.n;
  if (n == 0) return IntPoly::one();

  // power sums p_k = tr(M^k), k = 1..n
  std::vector<std::vector<Int>> pw(n, std::vector<Int>(n, Int(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pw[i][j] = Int(A.edge(i + 1, j + 1) ? 1 : 0);
  std::vector<Int> p(n + 1, Int(0));
  auto trace = [&](const std::vector<std::vector<Int>> &mat) {
    Int t = 0;
    for (int i = 0; i < n; ++i) t += mat[i][i];
    return t;
  };
  p[1] = trace(pw);
  for (int k = 2; k <= n; ++k) {
    std::vector<std::vector<Int>> nx(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < n; ++i) {
      std::uint64_t row = A.rows[i];
      while (row) {
        int j = __builtin_ctzll(row);
        row &= row - 1;
        for (int c = 0; c < n; ++c) nx[i][c] += pw[j][c];
      }
    }
    pw = std::move(nx);
    p[k] = trace(pw);
  }

  // Newton's identities: k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i
  std::vector<Int> e(n + 1, Int(0));
  e[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Int acc = 0;
    for (int i = 1; i <= k; ++i) {
      Int term = e[k - i] * p[i];
      if (i % 2 == 0) term = -term;
      acc += term;
    }
    e[k] = exact_div(acc, Int(k));
  }

  // det(I - tM) = sum_k (-1)^k e_k t^k
  IntPoly q;
  q.c.resize(n + 1);
  for (int k = 0; k <= n; ++k) q.c[k] = (k % 2 == 0) ? e[k] : -e[k];
  q.trim();
  return q;
}

RatFnQ walk_series_rational(const Digraph &A) {
  IntPoly q = char_den(A);
  const int dq = q.degree();
  const int order = std::max(2 * dq + 1, A.n);
  WalkSeries ws = walk_series(A, order);

  // P = Q * (chi series); a polynomial of degree <= vertex count, and the
  // convolution must vanish beyond that (the chi sequence obeys Q's
  // recurrence) -- verified up to 2 deg Q + 1.
  IntPoly pnum;
  pnum.c.assign(order + 1, Int(0));
  for (int k = 0; k <= order; ++k) {
    Int acc = 0;
    for (int i = 0; i <= std::min(k, dq); ++i) acc += q.coeff(i) * ws.chi[k - i];
    if (k > A.n && !is_zero(acc))
      throw std::logic_error("walk_series_rational: series does not satisfy its recurrence");
    pnum.c[k] = acc;
  }
  pnum.trim();
  return ratfn_reduce(RatFnQ{pnum, q});
}

RatFnM family_series_symbolic(const Digraph &R) {
  if (R.n == 0) throw std::invalid_argument("family_series_symbolic: seed needs a vertex");
  RatFnQ hr = walk_series_rational(R);

  // H_A = 1 / (H_R(-t) - (m + 1 - v_R) t)
  //     = Q_R(-t) / ( P_R(-t) - (m + 1 - v_R) t Q_R(-t) )
  IntPoly pneg = hr.num.alternate();
  IntPoly qneg = hr.den.alternate();

  BivarPoly num = bivar_constant_in_m(qneg);
  IntPoly mfac;  // m + 1 - v_R as a polynomial in m
  mfac.c = {Int(1 - R.n), Int(1)};
  mfac.trim();
  BivarPoly den = bivar_constant_in_m(pneg) - bivar_constant_in_m(qneg.times_t(1)) * BivarPoly(mfac);

  RatFnM h = ratfn_reduce(RatFnM{num, den});
  if (!(h.den.coeff(0) == IntPoly::one()))
    throw std::logic_error("family_series_symbolic: denominator not normalized at t=0");
  return h;
}

RatFnQ specialize_family(const RatFnM &H, int m) {
  return ratfn_reduce(RatFnQ{bivar_at_m(H.num, Int(m)), bivar_at_m(H.den, Int(m))});
}

std::vector<Rat> reciprocity_defect(const Digraph &A, int order) {
  if (order < 0) throw std::invalid_argument("reciprocity_defect: negative order");
  WalkSeries ha = walk_series(A, order);
  WalkSeries hb = walk_series(complement(A), order);
  std::vector<Rat> defect(order + 1, Rat(0));
  for (int k = 0; k <= order; ++k) {
    Int acc = 0;
    for (int i = 0; i <= k; ++i) {
      Int term = ha.chi[i] * hb.chi[k - i];
      if ((k - i) % 2 == 1) term = -term;
      acc += term;
    }
    if (k == 0) acc -= 1;
    defect[k] = Rat(acc);
  }
  return defect;
}

}  // namespace specrad
