#include "specrad/asympt.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "specrad/walkgen.hpp"

namespace specrad {

namespace {

// truncated power series in eps, fixed length (order + 1), index = power
using Series = std::vector<Rat>;

Series smul(const Series &a, const Series &b) {
  const int n = static_cast<int>(a.size());
  Series r(n, Rat(0));
  for (int i = 0; i < n; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; j + i < n; ++j) {
      if (sgn(b[j]) == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  for (auto &v : r) v.canonicalize();
  return r;
}

Series sshift(const Series &a, int k) {
  const int n = static_cast<int>(a.size());
  Series r(n, Rat(0));
  for (int i = 0; i + k < n; ++i) r[i + k] = a[i];
  return r;
}

// outer(inner(x)) truncated; inner must have zero constant term
Series scompose(const Series &outer, const Series &inner) {
  if (!inner.empty() && sgn(inner[0]) != 0)
    throw std::logic_error("series composition needs a zero constant term");
  const int n = static_cast<int>(outer.size());
  Series r(n, Rat(0));
  for (int k = n - 1; k >= 0; --k) {
    r = smul(r, inner);
    r[0] += outer[k];
  }
  return r;
}

Int round_nearest(const Rat &x) {
  Rat y = x + Rat(1, 2);
  y.canonicalize();
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  return q;
}

Rat rat_abs(const Rat &x) { return sgn(x) < 0 ? Rat(-x) : x; }

}  // namespace

IntPoly PoleProblem::A() const {
  std::vector<Int> c;
  c.push_back(1);
  c.insert(c.end(), aCoeffs.begin(), aCoeffs.end());
  return IntPoly(std::move(c));
}

IntPoly PoleProblem::B() const { return IntPoly(std::vector<Int>(bCoeffs)); }

PoleProblem pole_problem_from_family(const Digraph &R) {
  if (R.edge_count() == 0)
    throw std::invalid_argument("pole_problem_from_family: seed needs at least one edge");

  RatFnQ hr = walk_series_rational(R);
  const IntPoly pa = hr.num.alternate();  // P(-t)
  const IntPoly qa = hr.den.alternate();  // Q(-t)
  if (qa.coeff(0) != 1)
    throw std::logic_error("pole_problem_from_family: seed denominator not normalized");

  PoleProblem P;
  P.s = R.edge_count();
  P.c = walk_count(R, 2);

  // t^4 B = P(-t) + v_R t Q(-t) - (1 + s t^2 - c t^3) Q(-t)
  IntPoly t4b = pa + qa.times_t(1).scaled(Int(R.n)) -
                (qa + qa.times_t(2).scaled(P.s) - qa.times_t(3).scaled(P.c));
  for (int i = 0; i < 4; ++i)
    if (!is_zero(t4b.coeff(i)))
      throw std::logic_error("pole problem reconstruction failed: t^4 divisibility");
  IntPoly b;
  for (int i = 4; i <= t4b.degree(); ++i) b.c.push_back(t4b.coeff(i));
  b.trim();

  for (int i = 1; i <= qa.degree(); ++i) P.aCoeffs.push_back(qa.coeff(i));
  for (int i = 0; i <= b.degree(); ++i) P.bCoeffs.push_back(b.coeff(i));

  // cross-check against the symbolic family series:
  //   num = A,  den = A (1 - (m+1) t + s t^2 - c t^3) + t^4 B  in Z[m][t]
  RatFnM H = family_series_symbolic(R);
  BivarPoly cubic{IntPoly{Int(1)}, IntPoly{Int(-1), Int(-1)}, IntPoly{P.s}, IntPoly{-P.c}};
  BivarPoly expected_den =
      bivar_constant_in_m(qa) * cubic + bivar_constant_in_m(b).times_t(4);
  if (H.num != bivar_constant_in_m(qa) || H.den != expected_den)
    throw std::logic_error("pole problem reconstruction failed: family series mismatch");
  return P;
}

EpsilonExpansion epsilon_expansion(const PoleProblem &P, int order) {
  if (order < 0) throw std::invalid_argument("epsilon_expansion: negative order");
  const int n = order + 1;
  Series ba_orig = series_coeffs(RatFnQ{P.B(), P.A()}, order);
  const Rat s(P.s), c(P.c);

  // fixed point of Y = s eps^2 (1+Y)^2 - c eps^3 (1+Y)^3 + eps^4 (1+Y)^4 (B/A)(eps(1+Y));
  // each pass settles at least one further coefficient
  Series Y(n, Rat(0));
  for (int pass = 0; pass < order; ++pass) {
    Series e = Y;
    e[0] += 1;
    Series sq = smul(e, e);
    Series cu = smul(sq, e);
    Series qu = smul(cu, e);
    Series u = sshift(e, 1);  // eps (1+Y)
    Series tail = smul(qu, scompose(ba_orig, u));
    Series t1 = sshift(sq, 2), t2 = sshift(cu, 3), t3 = sshift(tail, 4);
    for (int i = 0; i < n; ++i) {
      Y[i] = s * t1[i] - c * t2[i] + t3[i];
      Y[i].canonicalize();
    }
  }

  EpsilonExpansion res;
  for (int i = 1; i <= order; ++i) res.w.push_back(Y[i]);
  if (order >= 1 && sgn(res.w[0]) != 0)
    throw std::logic_error("epsilon_expansion: w_1 must vanish");
  return res;
}

std::vector<Rat> to_inverse_m(const EpsilonExpansion &e, int order) {
  if (order < 0) throw std::invalid_argument("to_inverse_m: negative order");
  if (order > static_cast<int>(e.w.size()) + 1)
    throw std::invalid_argument("to_inverse_m: order exceeds available expansion");
  const int n = order + 1;

  Series r(n, Rat(0));  // r(eps) = eps + sum w_i eps^{i+1}
  if (order >= 1) r[1] = 1;
  for (int k = 2; k <= order; ++k) r[k] = e.w[k - 2];

  Series ex(n, Rat(0));  // eps = x/(1+x) = x - x^2 + x^3 - ...
  for (int k = 1; k <= order; ++k) ex[k] = (k % 2 == 1) ? Rat(1) : Rat(-1);

  Series comp = scompose(r, ex);
  return std::vector<Rat>(comp.begin() + 1, comp.end());
}

RootBracket family_pole(const FamilySpec &family, int m, const Rat &width) {
  if (sgn(width) <= 0) throw std::invalid_argument("family_pole: width must be positive");
  RatFnM H = family_series_symbolic(family.seed);
  RatFnQ h = specialize_family(H, m);
  return isolate_smallest_positive_root(h.den, width);
}

LaurentFit laurent_fit(const FamilySpec &family, int orders, const std::vector<int> &sample_ms) {
  if (orders < 1) throw std::invalid_argument("laurent_fit: orders must be >= 1");
  const int n = static_cast<int>(sample_ms.size());
  if (n <= orders)
    throw std::invalid_argument("laurent_fit: need more samples than expansion orders");

  std::vector<int> ms = sample_ms;
  std::sort(ms.begin(), ms.end());
  for (int i = 0; i < n; ++i) {
    if (ms[i] < 2) throw std::invalid_argument("laurent_fit: sample m must be >= 2");
    if (i > 0 && ms[i] == ms[i - 1])
      throw std::invalid_argument("laurent_fit: duplicate sample m");
  }

  const RatFnM H = family_series_symbolic(family.seed);
  const Int snap = Int(1) << 140;
  const Rat snap_tol = Rat(Int(1), snap);

  // certified pole brackets, then midpoints snapped to denominator 2^140
  std::vector<Rat> rvals(n);
  std::string first_error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < n; ++i) {
    try {
      Rat tol = Rat(1);
      for (int k = 0; k < orders + 3; ++k) tol /= ms[i];
      if (tol > snap_tol) tol = snap_tol;
      RatFnQ h = specialize_family(H, ms[i]);
      RootBracket rb = isolate_smallest_positive_root(h.den, tol);
      Rat r = round_nearest(rb.mid() * Rat(snap));
      rvals[i] = Rat(std::move(r)) / Rat(snap);
      rvals[i].canonicalize();
    } catch (const std::exception &ex) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (first_error.empty()) first_error = ex.what();
    }
  }
  if (!first_error.empty()) throw std::runtime_error("laurent_fit: " + first_error);

  // exact Newton interpolation in x = 1/m over spread nodes
  const int K = std::min(orders + 11, n);
  std::vector<int> idx(K);
  for (int i = 0; i < K; ++i)
    idx[i] = K == 1 ? 0 : static_cast<int>((2LL * i * (n - 1) + (K - 1)) / (2LL * (K - 1)));
  std::vector<Rat> xs(K), dd(K);
  for (int i = 0; i < K; ++i) {
    xs[i] = Rat(1, ms[idx[i]]);
    dd[i] = rvals[idx[i]];
  }
  for (int level = 1; level < K; ++level)
    for (int i = K - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      dd[i].canonicalize();
    }
  RatPoly phi = RatPoly::constant(dd[K - 1]);
  for (int i = K - 2; i >= 0; --i) phi = phi * RatPoly{-xs[i], Rat(1)} + RatPoly::constant(dd[i]);

  LaurentFit fit;
  Rat margin(0);
  for (int j = 0; j <= orders; ++j) {
    Int d = j == 0 ? Int(0) : round_nearest(phi.coeff(j));
    Rat err = rat_abs(phi.coeff(j) - Rat(d));
    if (err > margin) margin = err;
    if (j >= 1) fit.coeffs.push_back(d);
  }
  if (margin >= Rat(1, 4))
    throw std::runtime_error("expansion order too high for sample precision");

  // residual_bounds[j-1] = max_i |r_i - sum_{k<=j} d_k / m_i^k| * m_i^{j+1}
  fit.residual_bounds.assign(orders, Rat(0));
  for (int i = 0; i < n; ++i) {
    Rat x(1, ms[i]);
    Rat partial(0), scale = x;  // scale = m^{-(j+1)} entering round j
    for (int j = 1; j <= orders; ++j) {
      partial += Rat(fit.coeffs[j - 1]) * scale;
      scale *= x;
      Rat res = rat_abs(rvals[i] - partial) / scale;
      res.canonicalize();
      if (res > fit.residual_bounds[j - 1]) fit.residual_bounds[j - 1] = res;
    }
  }
  return fit;
}

}  // namespace specrad
