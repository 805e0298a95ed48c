#include "specrad/poly.hpp"

#include <stdexcept>
#include <utility>

namespace specrad {

namespace {

// Split an integer polynomial into (content, primitive part) without touching
// the sign of the leading coefficient (unlike primitive_part, which fixes it).
std::pair<Int, IntPoly> content_split(const IntPoly &p) {
  if (is_zero(p)) return {Int(0), IntPoly()};
  Int c = content(p);
  IntPoly q;
  q.c.reserve(p.c.size());
  for (const auto &v : p.c) q.c.push_back(exact_div(v, c));
  return {c, q};
}

std::pair<IntPoly, BivarPoly> content_split(const BivarPoly &p) {
  if (is_zero(p)) return {IntPoly(), BivarPoly()};
  IntPoly c = bivar_content_t(p);
  BivarPoly q;
  q.c.reserve(p.c.size());
  for (const auto &v : p.c) q.c.push_back(poly_exact_div(v, c));
  return {c, q};
}

}  // namespace

RatFnQ ratfn_reduce(const RatFnQ &f) {
  if (is_zero(f.den)) throw std::runtime_error("ratfn_reduce: zero denominator");
  if (is_zero(f.den.coeff(0))) throw std::runtime_error("pole at origin");
  if (is_zero(f.num)) return {IntPoly(), IntPoly::one()};

  auto [cn, np] = content_split(f.num);
  auto [cd, dp] = content_split(f.den);
  IntPoly g = intpoly_gcd(np, dp);  // primitive, positive leading coefficient
  np = poly_exact_div(np, g);
  dp = poly_exact_div(dp, g);

  Int cg;
  mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  cn = exact_div(cn, cg);
  cd = exact_div(cd, cg);

  RatFnQ r{np.scaled(cn), dp.scaled(cd)};
  if (sgn(r.den.coeff(0)) < 0) {
    r.num = -r.num;
    r.den = -r.den;
  }
  return r;
}

RatFnM ratfn_reduce(const RatFnM &f) {
  if (is_zero(f.den)) throw std::runtime_error("ratfn_reduce: zero denominator");
  if (is_zero(f.den.coeff(0))) throw std::runtime_error("pole at origin");
  if (is_zero(f.num)) return {BivarPoly(), BivarPoly(IntPoly::one())};

  auto [cn, np] = content_split(f.num);
  auto [cd, dp] = content_split(f.den);
  BivarPoly g = bivar_gcd_t(np, dp);
  np = poly_exact_div(np, g);
  dp = poly_exact_div(dp, g);

  // contents are polynomials in m; cancel their gcd too
  IntPoly cg = intpoly_gcd(cn, cd);
  cn = poly_exact_div(cn, cg);
  cd = poly_exact_div(cd, cg);

  BivarPoly num, den;
  for (const auto &v : np.c) num.c.push_back(v * cn);
  for (const auto &v : dp.c) den.c.push_back(v * cd);
  num.trim();
  den.trim();

  // fix the overall sign: make den's constant-in-t coefficient have a positive
  // leading coefficient in m (for series denominators it is the constant 1)
  const IntPoly &d0 = den.coeff(0);
  int s = is_zero(d0) ? sgn(den.lead().lead()) : sgn(d0.lead());
  if (s < 0) {
    num = -num;
    den = -den;
  }
  return {num, den};
}

std::vector<Rat> series_coeffs(const RatFnQ &f, int order) {
  if (order < 0) throw std::invalid_argument("series_coeffs: negative order");
  const Int &d0 = f.den.coeff(0);
  if (is_zero(d0)) throw std::runtime_error("unnormalizable denominator");
  std::vector<Rat> h(order + 1, Rat(0));
  for (int n = 0; n <= order; ++n) {
    Rat acc(n <= f.num.degree() ? Rat(f.num.coeff(n)) : Rat(0));
    for (int i = 1; i <= std::min(n, f.den.degree()); ++i) acc -= Rat(f.den.coeff(i)) * h[n - i];
    h[n] = acc / Rat(d0);
    h[n].canonicalize();
  }
  return h;
}

std::vector<IntPoly> series_coeffs_m(const RatFnM &f, int order) {
  if (order < 0) throw std::invalid_argument("series_coeffs_m: negative order");
  const IntPoly &d0 = f.den.coeff(0);
  if (d0.degree() != 0 || is_zero(d0))
    throw std::runtime_error("unnormalizable denominator");
  Int unit = d0.coeff(0);
  if (unit != 1 && unit != -1) throw std::runtime_error("unnormalizable denominator");
  std::vector<IntPoly> h(order + 1);
  for (int n = 0; n <= order; ++n) {
    IntPoly acc = n <= f.num.degree() ? f.num.coeff(n) : IntPoly();
    for (int i = 1; i <= std::min(n, f.den.degree()); ++i) acc = acc - f.den.coeff(i) * h[n - i];
    h[n] = unit == 1 ? acc : -acc;
  }
  return h;
}

RatFnQ pade_reconstruct(const std::vector<Rat> &series, int dp, int dq) {
  if (dp < 0 || dq < 0) throw std::invalid_argument("pade_reconstruct: negative degree");
  if (static_cast<int>(series.size()) < dp + dq + 1)
    throw std::invalid_argument("pade_reconstruct: not enough series coefficients");

  auto h = [&](int k) -> Rat { return k >= 0 ? series[k] : Rat(0); };

  // Solve sum_{i=0..dq} q_i h_{n-i} = 0 for n = dp+1..dp+dq with q_0 = 1.
  int rows = dq, cols = dq;
  std::vector<std::vector<Rat>> M(rows, std::vector<Rat>(cols + 1, Rat(0)));
  for (int r = 0; r < rows; ++r) {
    int n = dp + 1 + r;
    for (int i = 1; i <= dq; ++i) M[r][i - 1] = h(n - i);
    M[r][cols] = -h(n);
  }
  // exact Gaussian elimination
  std::vector<int> where(cols, -1);
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = -1;
    for (int r = row; r < rows; ++r)
      if (M[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(M[row], M[piv]);
    Rat lead = M[row][col];
    for (int j = col; j <= cols; ++j) M[row][j] /= lead;
    for (int r = 0; r < rows; ++r) {
      if (r == row || M[r][col] == 0) continue;
      Rat f = M[r][col];
      for (int j = col; j <= cols; ++j) M[r][j] -= f * M[row][j];
    }
    where[col] = row++;
  }
  for (int r = row; r < rows; ++r)
    if (M[r][cols] != 0) throw std::runtime_error("pade_reconstruct: inconsistent data");
  std::vector<Rat> q(dq + 1, Rat(0));
  q[0] = 1;
  for (int col = 0; col < cols; ++col)
    if (where[col] >= 0) q[col + 1] = M[where[col]][cols];

  // numerator: p_n = sum_i q_i h_{n-i}, n = 0..dp
  std::vector<Rat> p(dp + 1, Rat(0));
  for (int n = 0; n <= dp; ++n)
    for (int i = 0; i <= std::min(n, dq); ++i) p[n] += q[i] * h(n - i);

  // verify every supplied coefficient
  for (int n = 0; n < static_cast<int>(series.size()); ++n) {
    Rat acc(0);
    for (int i = 0; i <= std::min(n, dq); ++i) acc += q[i] * h(n - i);
    Rat expect = n <= dp ? p[n] : Rat(0);
    if (acc != expect) throw std::runtime_error("pade_reconstruct: series does not match a rational function of the requested degrees");
  }

  // clear denominators
  Int lcm(1);
  auto fold = [&lcm](const std::vector<Rat> &v) {
    for (const auto &x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  };
  fold(p);
  fold(q);
  IntPoly np, dq_poly;
  np.c.reserve(p.size());
  dq_poly.c.reserve(q.size());
  for (const auto &x : p) np.c.push_back(Int(x * Rat(lcm)));
  for (const auto &x : q) dq_poly.c.push_back(Int(x * Rat(lcm)));
  np.trim();
  dq_poly.trim();
  return ratfn_reduce(RatFnQ{np, dq_poly});
}

IntPoly interpolate_integer_polynomial(const std::vector<std::pair<Int, Int>> &points) {
  const int n = static_cast<int>(points.size());
  if (n == 0) throw std::invalid_argument("interpolate_integer_polynomial: no points");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("interpolate_integer_polynomial: repeated x value");

  // Newton divided differences over Q
  std::vector<Rat> dd(n);
  for (int i = 0; i < n; ++i) dd[i] = Rat(points[i].second);
  std::vector<Rat> coeffs;  // dd[0] after each level
  coeffs.reserve(n);
  coeffs.push_back(dd[0]);
  for (int level = 1; level < n; ++level) {
    for (int i = 0; i + level < n; ++i) {
      Rat dx(points[i + level].first - points[i].first);
      dd[i] = (dd[i + 1] - dd[i]) / dx;
      dd[i].canonicalize();
    }
    coeffs.push_back(dd[0]);
  }

  // expand Newton form into the power basis
  std::vector<Rat> poly{coeffs[n - 1]};
  for (int i = n - 2; i >= 0; --i) {
    // poly <- poly * (x - x_i) + coeffs[i]
    std::vector<Rat> next(poly.size() + 1, Rat(0));
    Rat xi(points[i].first);
    for (size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * xi;
    }
    next[0] += coeffs[i];
    poly = std::move(next);
  }

  IntPoly out;
  out.c.reserve(poly.size());
  for (auto &v : poly) {
    v.canonicalize();
    if (v.get_den() != 1)
      throw std::runtime_error("interpolate_integer_polynomial: non-integer coefficients");
    out.c.push_back(v.get_num());
  }
  out.trim();
  for (const auto &pt : points)
    if (out.eval<Int>(pt.first) != pt.second)
      throw std::runtime_error("interpolate_integer_polynomial: interpolant check failed");
  return out;
}

}  // namespace specrad
