#pragma once

// Dense polynomial arithmetic over exact coefficients (GMP integers and
// rationals), plus the bivariate flavour used for the parameter m:
// a BivarPoly is a polynomial in t whose coefficients are integer
// polynomials in m.

#include <gmpxx.h>

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace specrad {

using Int = mpz_class;
using Rat = mpq_class;

inline bool is_zero(const Int &v) { return sgn(v) == 0; }
inline bool is_zero(const Rat &v) { return sgn(v) == 0; }

inline Int int_pow(Int base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Exact integer division; the divisor must divide the dividend.
inline Int exact_div(const Int &a, const Int &b) {
  assert(!is_zero(b));
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (!is_zero(r)) throw std::runtime_error("exact_div: not divisible");
  return q;
}

template <class T> struct Poly;
template <class T> bool is_zero(const Poly<T> &p) { return p.c.empty(); }

template <class T> struct Poly {
  // c[i] multiplies t^i; trailing zeros are never stored (zero poly = empty).
  std::vector<T> c;

  Poly() = default;
  Poly(std::initializer_list<T> v) : c(v) { trim(); }
  explicit Poly(std::vector<T> v) : c(std::move(v)) { trim(); }
  // constant polynomial
  Poly(const T &v) {
    if (!specrad::is_zero(v)) c.push_back(v);
  }

  static Poly constant(T v) {
    Poly p;
    if (!specrad::is_zero(v)) p.c.push_back(std::move(v));
    return p;
  }
  static Poly one() { return constant(T(1)); }

  void trim() {
    while (!c.empty() && specrad::is_zero(c.back())) c.pop_back();
  }

  int degree() const { return static_cast<int>(c.size()) - 1; }

  const T &coeff(int i) const {
    static const T zero{};
    if (i < 0 || i >= static_cast<int>(c.size())) return zero;
    return c[i];
  }

  const T &lead() const {
    assert(!c.empty());
    return c.back();
  }

  bool operator==(const Poly &o) const { return c == o.c; }
  bool operator!=(const Poly &o) const { return !(*this == o); }

  Poly operator-() const {
    Poly r = *this;
    for (auto &v : r.c) v = -v;
    return r;
  }

  Poly operator+(const Poly &o) const {
    Poly r;
    r.c.resize(std::max(c.size(), o.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) {
      if (i < c.size()) r.c[i] = r.c[i] + c[i];
      if (i < o.c.size()) r.c[i] = r.c[i] + o.c[i];
    }
    r.trim();
    return r;
  }

  Poly operator-(const Poly &o) const { return *this + (-o); }

  Poly operator*(const Poly &o) const {
    if (c.empty() || o.c.empty()) return Poly();
    Poly r;
    r.c.assign(c.size() + o.c.size() - 1, T{});
    for (size_t i = 0; i < c.size(); ++i) {
      if (specrad::is_zero(c[i])) continue;
      for (size_t j = 0; j < o.c.size(); ++j)
        r.c[i + j] = r.c[i + j] + c[i] * o.c[j];
    }
    r.trim();
    return r;
  }

  Poly scaled(const T &k) const {
    if (specrad::is_zero(k)) return Poly();
    Poly r = *this;
    for (auto &v : r.c) v = v * k;
    return r;
  }

  // multiply by t^k
  Poly times_t(int k) const {
    if (c.empty()) return Poly();
    Poly r;
    r.c.assign(c.size() + k, T{});
    for (size_t i = 0; i < c.size(); ++i) r.c[i + k] = c[i];
    return r;
  }

  // p(-t)
  Poly alternate() const {
    Poly r = *this;
    for (size_t i = 1; i < r.c.size(); i += 2) r.c[i] = -r.c[i];
    return r;
  }

  Poly derivative() const {
    Poly r;
    for (size_t i = 1; i < c.size(); ++i) r.c.push_back(c[i] * T(static_cast<long>(i)));
    r.trim();
    return r;
  }

  // Horner evaluation at x; U must absorb products with T.
  template <class U> U eval(const U &x) const {
    U acc{};
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + U(c[i]);
    return acc;
  }
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;
// Polynomial in t whose coefficients are integer polynomials in m.
using BivarPoly = Poly<IntPoly>;

// ---------------------------------------------------------------------------
// IntPoly helpers
// ---------------------------------------------------------------------------

inline Int content(const IntPoly &p) {
  Int g = 0;
  for (const auto &v : p.c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;  // zero for the zero polynomial
}

// Primitive part with positive leading coefficient.
inline IntPoly primitive_part(const IntPoly &p) {
  if (is_zero(p)) return p;
  Int g = content(p);
  if (sgn(p.lead()) < 0) g = -g;
  IntPoly r = p;
  for (auto &v : r.c) v = exact_div(v, g);
  return r;
}

// Integer evaluation sign of p at rational a/b (b>0): sign of sum c_i a^i b^(d-i).
inline int sign_at(const IntPoly &p, const Rat &x) {
  if (is_zero(p)) return 0;
  const Int a = x.get_num(), b = x.get_den();
  Int acc = p.c.back(), bp = 1;
  for (size_t i = p.c.size() - 1; i-- > 0;) {
    bp *= b;
    acc = acc * a + p.c[i] * bp;
  }
  return sgn(acc);
}

inline Rat eval_rat(const IntPoly &p, const Rat &x) {
  Rat acc = 0;
  for (size_t i = p.c.size(); i-- > 0;) acc = acc * x + Rat(p.c[i]);
  return acc;
}

// ---------------------------------------------------------------------------
// RatPoly helpers: field division, gcd, conversions
// ---------------------------------------------------------------------------

inline RatPoly to_rat(const IntPoly &p) {
  RatPoly r;
  r.c.reserve(p.c.size());
  for (const auto &v : p.c) r.c.emplace_back(v);
  return r;
}

// Clears denominators and strips content: primitive IntPoly with lc > 0.
inline IntPoly to_primitive_int(const RatPoly &p) {
  if (is_zero(p)) return IntPoly();
  Int den = 1;
  for (const auto &v : p.c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
  IntPoly r;
  r.c.reserve(p.c.size());
  for (const auto &v : p.c) {
    Rat scaled = v * Rat(den);
    assert(scaled.get_den() == 1);
    r.c.push_back(scaled.get_num());
  }
  return primitive_part(r);
}

inline RatPoly ratpoly_rem(RatPoly a, const RatPoly &b) {
  assert(!is_zero(b));
  while (!is_zero(a) && a.degree() >= b.degree()) {
    Rat f = a.c.back() / b.c.back();
    int shift = a.degree() - b.degree();
    for (int i = 0; i <= b.degree(); ++i) a.c[i + shift] -= f * b.c[i];
    a.c.pop_back();
    a.trim();
  }
  return a;
}

inline RatPoly ratpoly_div_exact(RatPoly a, const RatPoly &b) {
  assert(!is_zero(b));
  RatPoly q;
  if (a.degree() >= b.degree()) q.c.assign(a.degree() - b.degree() + 1, Rat(0));
  while (!is_zero(a) && a.degree() >= b.degree()) {
    Rat f = a.c.back() / b.c.back();
    int shift = a.degree() - b.degree();
    q.c[shift] = f;
    for (int i = 0; i <= b.degree(); ++i) a.c[i + shift] -= f * b.c[i];
    a.c.pop_back();
    a.trim();
  }
  if (!is_zero(a)) throw std::runtime_error("ratpoly_div_exact: remainder nonzero");
  q.trim();
  return q;
}

inline RatPoly ratpoly_gcd(RatPoly a, RatPoly b) {
  while (!is_zero(b)) {
    RatPoly r = ratpoly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!is_zero(a)) {
    Rat lead = a.c.back();
    for (auto &v : a.c) v /= lead;  // monic
  }
  return a;
}

// Squarefree part of p (primitive, positive leading coefficient).
inline IntPoly squarefree_part(const IntPoly &p) {
  if (is_zero(p) || p.degree() == 0) return primitive_part(p);
  RatPoly rp = to_rat(p);
  RatPoly g = ratpoly_gcd(rp, to_rat(p.derivative()));
  if (g.degree() == 0) return primitive_part(p);
  return to_primitive_int(ratpoly_div_exact(rp, g));
}

// ---------------------------------------------------------------------------
// Generic exact polynomial division (valid in any integral domain when the
// division is exact, e.g. Bareiss pivots). T division must itself be exact.
// ---------------------------------------------------------------------------

inline IntPoly poly_exact_div(const IntPoly &a, const IntPoly &b);

inline Int coeff_exact_div(const Int &a, const Int &b) { return exact_div(a, b); }
inline IntPoly coeff_exact_div(const IntPoly &a, const IntPoly &b) { return poly_exact_div(a, b); }

template <class T> Poly<T> poly_exact_div_t(Poly<T> a, const Poly<T> &b) {
  if (is_zero(b)) throw std::runtime_error("poly_exact_div: divide by zero");
  Poly<T> q;
  if (a.degree() >= b.degree()) q.c.assign(a.degree() - b.degree() + 1, T{});
  while (!is_zero(a) && a.degree() >= b.degree()) {
    T f = coeff_exact_div(a.c.back(), b.c.back());
    int shift = a.degree() - b.degree();
    q.c[shift] = f;
    for (int i = 0; i <= b.degree(); ++i) a.c[i + shift] = a.c[i + shift] - f * b.c[i];
    if (!is_zero(a.c.back())) throw std::runtime_error("poly_exact_div: not divisible");
    a.c.pop_back();
    a.trim();
  }
  if (!is_zero(a)) throw std::runtime_error("poly_exact_div: remainder nonzero");
  q.trim();
  return q;
}

inline IntPoly poly_exact_div(const IntPoly &a, const IntPoly &b) { return poly_exact_div_t(a, b); }
inline BivarPoly poly_exact_div(const BivarPoly &a, const BivarPoly &b) { return poly_exact_div_t(a, b); }

// ---------------------------------------------------------------------------
// gcd in Z[m] (primitive PRS) -- used for contents of bivariate polynomials
// ---------------------------------------------------------------------------

inline IntPoly intpoly_gcd(IntPoly a, IntPoly b) {
  // gcd(0, b) keeps b's integer content: bivar_content_t folds through here
  if (is_zero(a) && is_zero(b)) return IntPoly();
  if (is_zero(a)) return sgn(b.lead()) < 0 ? -b : b;
  if (is_zero(b)) return sgn(a.lead()) < 0 ? -a : a;
  Int ca = content(a), cb = content(b), cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  a = primitive_part(a);
  b = primitive_part(b);
  while (!is_zero(b)) {
    // pseudo-remainder of a by b
    if (a.degree() < b.degree()) {
      std::swap(a, b);
      continue;
    }
    int delta = a.degree() - b.degree();
    IntPoly r = a.scaled(int_pow(b.lead(), delta + 1));
    while (!is_zero(r) && r.degree() >= b.degree()) {
      Int f = exact_div(r.lead(), b.lead());
      int shift = r.degree() - b.degree();
      for (int i = 0; i <= b.degree(); ++i) r.c[i + shift] -= f * b.c[i];
      r.trim();
    }
    a = std::move(b);
    b = primitive_part(r);
  }
  return a.scaled(cg);
}

// ---------------------------------------------------------------------------
// BivarPoly helpers
// ---------------------------------------------------------------------------

inline BivarPoly bivar_constant_in_m(const IntPoly &p_in_t) {
  BivarPoly r;
  r.c.reserve(p_in_t.c.size());
  for (const auto &v : p_in_t.c) r.c.push_back(IntPoly::constant(v));
  r.trim();
  return r;
}

inline IntPoly bivar_at_m(const BivarPoly &p, const Int &m) {
  IntPoly r;
  r.c.reserve(p.c.size());
  for (const auto &cm : p.c) r.c.push_back(cm.eval<Int>(m));
  r.trim();
  return r;
}

inline int m_degree(const BivarPoly &p) {
  int d = -1;
  for (const auto &cm : p.c) d = std::max(d, cm.degree());
  return d;
}

// content in t: gcd over Z[m] of the t-coefficients
inline IntPoly bivar_content_t(const BivarPoly &p) {
  IntPoly g;
  for (const auto &cm : p.c) g = intpoly_gcd(g, cm);
  return g;
}

inline BivarPoly bivar_primitive_t(const BivarPoly &p) {
  if (is_zero(p)) return p;
  IntPoly g = bivar_content_t(p);
  BivarPoly r;
  r.c.reserve(p.c.size());
  for (const auto &cm : p.c) r.c.push_back(poly_exact_div(cm, g));
  r.trim();
  return r;
}

// gcd in Q(m)[t] via a primitive pseudo-remainder sequence; result is
// primitive in t with no particular leading normalization.
inline BivarPoly bivar_gcd_t(BivarPoly a, BivarPoly b) {
  if (is_zero(a)) return bivar_primitive_t(b);
  if (is_zero(b)) return bivar_primitive_t(a);
  a = bivar_primitive_t(a);
  b = bivar_primitive_t(b);
  while (!is_zero(b)) {
    if (a.degree() < b.degree()) {
      std::swap(a, b);
      continue;
    }
    int delta = a.degree() - b.degree();
    IntPoly mult = b.lead();
    // scale a by lc(b)^(delta+1) so each elimination step stays in Z[m]
    BivarPoly r = a;
    for (int k = 0; k <= delta; ++k) {
      BivarPoly scaled;
      scaled.c.reserve(r.c.size());
      for (const auto &cm : r.c) scaled.c.push_back(cm * mult);
      r = std::move(scaled);
    }
    while (!is_zero(r) && r.degree() >= b.degree()) {
      IntPoly f = poly_exact_div(r.lead(), b.lead());
      int shift = r.degree() - b.degree();
      for (int i = 0; i <= b.degree(); ++i) r.c[i + shift] = r.c[i + shift] - f * b.c[i];
      r.trim();
    }
    a = std::move(b);
    b = bivar_primitive_t(r);
  }
  return a;
}

// ---------------------------------------------------------------------------
// printing (tests and CLI diagnostics)
// ---------------------------------------------------------------------------

inline std::string to_string(const IntPoly &p, const char *var = "t") {
  if (is_zero(p)) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    const Int &v = p.coeff(i);
    if (is_zero(v)) continue;
    if (!first) os << (sgn(v) > 0 ? " + " : " - ");
    else if (sgn(v) < 0) os << "-";
    first = false;
    Int a = abs(v);
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

inline std::string to_string(const BivarPoly &p) {
  if (is_zero(p)) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    if (is_zero(p.coeff(i))) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(p.coeff(i), "m") << ")";
    if (i > 0) {
      os << "*t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Rational function in t (coefficients Int or IntPoly-in-m)
// ---------------------------------------------------------------------------

template <class P> struct RatFn {
  P num, den;
};

using RatFnQ = RatFn<IntPoly>;    // coefficients in Q (stored with cleared denominators)
using RatFnM = RatFn<BivarPoly>;  // coefficients in Q(m)

// Reduce num/den by their gcd and normalize: common integer content removed,
// den(0) > 0. For series denominators this leaves den(0) = 1.
RatFnQ ratfn_reduce(const RatFnQ &f);
RatFnM ratfn_reduce(const RatFnM &f);

// Power-series coefficients of f around t=0, t^0..t^order. den(0) must be a unit.
std::vector<Rat> series_coeffs(const RatFnQ &f, int order);
// Bivariate flavour: requires den(0) = 1 after reduction, so coefficients stay in Z[m].
std::vector<IntPoly> series_coeffs_m(const RatFnM &f, int order);

// Recover a reduced rational function with deg num <= dp, deg den <= dq and
// den(0) = 1 from its series coefficients (needs at least dp + dq + 1 of
// them). Throws if no such function matches the data exactly.
RatFnQ pade_reconstruct(const std::vector<Rat> &series, int dp, int dq);

// Exact Newton interpolation through integer points (x_i distinct); throws
// unless the interpolant has integer coefficients and fits every point.
IntPoly interpolate_integer_polynomial(const std::vector<std::pair<Int, Int>> &points);

}  // namespace specrad
