#include "specrad/spectral.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

#include "specrad/walkgen.hpp"

namespace specrad {

namespace {

std::mutex audit_mutex;
bool audit_on = false;
std::vector<RhoAudit> audit_log;

void audit_record(const Digraph &A, const SpectralResult &r) {
  if (!audit_on) return;
  std::lock_guard<std::mutex> lock(audit_mutex);
  audit_log.push_back({A.edge_count(), A.n, r.rho_lo, r.rho_hi, r.exact});
}

bool is_nilpotent(const Digraph &A) {
  // boolean reachability: M nilpotent iff M^n = 0
  std::vector<std::uint64_t> rows = A.rows;
  for (int step = 1; step < A.n; ++step) {
    std::vector<std::uint64_t> nx(A.n, 0);
    bool any = false;
    for (int i = 0; i < A.n; ++i) {
      std::uint64_t row = rows[i];
      while (row) {
        int j = __builtin_ctzll(row);
        row &= row - 1;
        nx[i] |= A.rows[j];
      }
      any = any || nx[i];
    }
    rows = std::move(nx);
    if (!any) return true;
  }
  for (int i = 0; i < A.n; ++i)
    if (rows[i]) return false;
  return true;
}

// reverse the coefficients: roots become reciprocals of the nonzero roots
IntPoly reversed(const IntPoly &p) {
  IntPoly r;
  r.c.assign(p.c.rbegin(), p.c.rend());
  r.trim();
  return r;
}

}  // namespace

void rho_audit_enable(bool on) {
  std::lock_guard<std::mutex> lock(audit_mutex);
  audit_on = on;
}

void rho_audit_clear() {
  std::lock_guard<std::mutex> lock(audit_mutex);
  audit_log.clear();
}

std::vector<RhoAudit> rho_audit_entries() {
  std::lock_guard<std::mutex> lock(audit_mutex);
  return audit_log;
}

SpectralResult spectral_radius(const Digraph &A, const Rat &tol) {
  if (sgn(tol) <= 0) throw std::invalid_argument("spectral_radius: tolerance must be positive");
  SpectralResult res;
  res.tol = tol;

  IntPoly q = char_den(A);
  SturmChain ch = sturm_chain(q);
  if (q.degree() <= 0 || ch.count_above(Rat(0)) == 0) {
    // rho = 0 exactly; for a nonnegative matrix this forces nilpotency
    if (!is_nilpotent(A))
      throw std::logic_error("spectral_radius: no positive pole on a non-nilpotent digraph");
    res.is_zero = true;
    res.exact = true;
    res.rho_lo = res.rho_hi = Rat(0);
    res.pole_method = "det(I-tM) = 1, no pole";
    res.check_method = "nilpotency of M";
    audit_record(A, res);
    return res;
  }

  RootBracket rb = isolate_smallest_positive_root(q, Rat(1, 16));

  // rho is an algebraic integer, so a rational rho is an integer k <= n;
  // scan for an exact pole at t = 1/k before falling back to bisection.
  if (!rb.exact) {
    for (int k = 1; k <= A.n; ++k) {
      Rat cand(1, k);
      if (sign_at(q, cand) != 0) continue;
      if (ch.count(Rat(0), cand) == 1) {
        rb.exact = true;
        rb.value = cand;
        if (!(rb.lo < cand && cand < rb.hi)) {
          rb.lo = cand - Rat(1, 2 * k * (k + 1));
          rb.hi = cand + Rat(1, 2 * k * (k + 1));
        }
        break;
      }
    }
  }

  if (rb.exact) {
    res.exact = true;
    res.rho_lo = res.rho_hi = Rat(1) / rb.value;
    refine_bracket(rb, tol);
    res.pole = rb;
    res.pole_method = "rational root of det(I-tM), certified smallest positive";
    res.check_method = "exact arithmetic";
  } else {
    // narrow the pole until the reciprocal bracket honors tol
    while (Rat(1) / rb.lo - Rat(1) / rb.hi > tol) refine_bracket(rb, rb.width() / 4);
    res.pole = rb;
    res.rho_lo = Rat(1) / rb.hi;
    res.rho_hi = Rat(1) / rb.lo;
    res.pole_method = "Sturm isolation + rational bisection of det(I-tM)";
    res.check_method = "reciprocal bracket, width within tolerance";
  }
  audit_record(A, res);
  return res;
}

std::string SpectralResult::decimal(int sig_digits) const {
  if (is_zero) return "0";
  if (exact) return rational_decimal(rho_lo, sig_digits);
  RootBracket rb;
  rb.poly = reversed(pole.poly);
  rb.lo = rho_lo;
  rb.hi = rho_hi;
  return bracket_decimal(rb, sig_digits);
}

bool verify_perron(const Digraph &A, const SpectralResult &result, int iters, std::string *why) {
  if (!is_strongly_connected(A))
    throw std::invalid_argument("verify_perron: digraph is not strongly connected");
  if (iters <= 0) throw std::invalid_argument("verify_perron: iters must be positive");

  auto fail = [&](const std::string &msg) {
    if (why) *why = msg;
    return false;
  };

  std::vector<Int> v(A.n, Int(1));
  Rat cw_lo, cw_hi, rayleigh;
  for (int step = 0; step < iters; ++step) {
    std::vector<Int> w(A.n, Int(0));
    for (int i = 0; i < A.n; ++i) {
      std::uint64_t row = A.rows[i];
      while (row) {
        int j = __builtin_ctzll(row);
        row &= row - 1;
        w[i] += v[j];
      }
    }
    // Collatz-Wielandt ratios (v stays positive: every vertex has an
    // out-edge in a strongly connected digraph)
    cw_lo = Rat(w[0]) / Rat(v[0]);
    cw_hi = cw_lo;
    Int dot_vw = 0, dot_vv = 0;
    for (int i = 0; i < A.n; ++i) {
      Rat ratio = Rat(w[i]) / Rat(v[i]);
      if (ratio < cw_lo) cw_lo = ratio;
      if (ratio > cw_hi) cw_hi = ratio;
      dot_vw += v[i] * w[i];
      dot_vv += v[i] * v[i];
    }
    rayleigh = Rat(dot_vw) / Rat(dot_vv);
    v = std::move(w);
    // periodic renormalization keeps the integers small without
    // leaving exact arithmetic
    if (step % 8 == 7) {
      Int g = 0;
      for (const auto &x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g > 1)
        for (auto &x : v) x = exact_div(x, g);
    }
  }

  const Rat tol = result.tol;
  std::ostringstream os;
  if (rayleigh < result.rho_lo - tol || rayleigh > result.rho_hi + tol) {
    os << "Rayleigh estimate " << rayleigh.get_str() << " outside [" << Rat(result.rho_lo - tol).get_str()
       << ", " << Rat(result.rho_hi + tol).get_str() << "]";
    return fail(os.str());
  }
  if (cw_hi < result.rho_lo || cw_lo > result.rho_hi) {
    os << "Collatz-Wielandt interval [" << cw_lo.get_str() << ", " << cw_hi.get_str()
       << "] disjoint from certified bracket";
    return fail(os.str());
  }
  return true;
}

}  // namespace specrad
