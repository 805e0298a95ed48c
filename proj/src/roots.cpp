#include "specrad/roots.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace specrad {

namespace {

// Divide by the (positive) content only; unlike primitive_part this keeps the
// sign of every coefficient, which Sturm sequences rely on.
IntPoly shrink_keep_sign(const IntPoly &p) {
  if (is_zero(p)) return p;
  Int c = content(p);
  IntPoly q;
  q.c.reserve(p.c.size());
  for (const auto &v : p.c) q.c.push_back(exact_div(v, c));
  return q;
}

// Signed pseudo-remainder equivalent to scaling by a positive power of |lc(b)|:
// prem(a,b) with the sign corrected when lc(b)^(delta+1) is negative.
IntPoly signed_prem(const IntPoly &a, const IntPoly &b) {
  int delta = a.degree() - b.degree();
  Int scale = int_pow(b.lead(), static_cast<unsigned long>(delta + 1));
  IntPoly r = a.scaled(scale);
  while (!is_zero(r) && r.degree() >= b.degree()) {
    Int f = exact_div(r.lead(), b.lead());
    int shift = r.degree() - b.degree();
    for (int i = 0; i <= b.degree(); ++i) r.c[i + shift] -= f * b.c[i];
    r.trim();
  }
  if (sgn(scale) < 0) r = -r;
  return r;
}

int sign_at_inf(const IntPoly &p, int dir) {
  if (is_zero(p)) return 0;
  int s = sgn(p.lead());
  if (dir < 0 && (p.degree() & 1)) s = -s;
  return s;
}

int count_changes(const std::vector<int> &signs) {
  int changes = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

SturmChain sturm_chain(const IntPoly &p) {
  SturmChain ch;
  IntPoly f = squarefree_part(p);
  if (is_zero(f) || f.degree() == 0) {
    ch.seq.push_back(f);
    return ch;
  }
  ch.seq.push_back(f);
  ch.seq.push_back(shrink_keep_sign(f.derivative()));
  while (true) {
    const IntPoly &a = ch.seq[ch.seq.size() - 2];
    const IntPoly &b = ch.seq.back();
    if (is_zero(b) || b.degree() == 0) break;
    IntPoly r = signed_prem(a, b);
    if (is_zero(r)) break;  // cannot happen for squarefree input
    ch.seq.push_back(shrink_keep_sign(-r));
    if (ch.seq.back().degree() == 0) break;
  }
  return ch;
}

int SturmChain::sign_changes(const Rat &x) const {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto &p : seq) signs.push_back(sign_at(p, x));
  return count_changes(signs);
}

int SturmChain::sign_changes_at_inf(int dir) const {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto &p : seq) signs.push_back(sign_at_inf(p, dir));
  return count_changes(signs);
}

int SturmChain::count(const Rat &a, const Rat &b) const {
  return sign_changes(a) - sign_changes(b);
}

int SturmChain::count_above(const Rat &a) const {
  return sign_changes(a) - sign_changes_at_inf(+1);
}

Rat cauchy_bound(const IntPoly &p) {
  if (is_zero(p) || p.degree() == 0) return Rat(1);
  Int lead = abs(p.lead());
  Int big(0);
  for (int i = 0; i < p.degree(); ++i) {
    Int a = abs(p.coeff(i));
    if (a > big) big = a;
  }
  Rat b = Rat(big) / Rat(lead) + 1;
  b.canonicalize();
  return b;
}

namespace {

// Shrink [lo, hi] (containing exactly one root of ch.seq[0]) to width <= tol.
// Exact rational roots hit by a midpoint switch the bracket to exact mode.
// positive_lo additionally forces lo > 0 (for smallest-positive-root use).
void bisect_to(RootBracket &rb, const SturmChain &ch, const Rat &tol, bool positive_lo = false) {
  const IntPoly &f = rb.poly;
  while (rb.hi - rb.lo > tol || (positive_lo && sgn(rb.lo) <= 0)) {
    if (rb.exact) {
      Rat half = (rb.hi - rb.lo) / 4;
      Rat lo = rb.value - half, hi = rb.value + half;
      if (sign_at(f, lo) == 0 || sign_at(f, hi) == 0 || sign_at(f, lo) == sign_at(f, hi)) {
        // fall back: nudge closer to the exact value
        lo = (rb.lo + rb.value) / 2;
        hi = (rb.hi + rb.value) / 2;
      }
      rb.lo = lo;
      rb.hi = hi;
      if (rb.hi - rb.lo <= tol && (!positive_lo || sgn(rb.lo) > 0)) break;
      continue;
    }
    Rat mid = (rb.lo + rb.hi) / 2;
    mid.canonicalize();
    int s = sign_at(f, mid);
    if (s == 0) {
      rb.exact = true;
      rb.value = mid;
      Rat q = (rb.hi - rb.lo) / 4;
      rb.lo = mid - q;
      rb.hi = mid + q;
      continue;
    }
    if (ch.count(rb.lo, mid) == 1)
      rb.hi = mid;
    else
      rb.lo = mid;
  }
}

// Decide whether the isolated root is rational. Any rational root p/q of the
// primitive certificate f has q | lc(f), so lc(f) * root is an integer. Narrow
// the bracket until the scaled interval holds at most one integer, then test
// that single candidate; this detects every rational root deterministically.
void detect_rational_root(RootBracket &rb, const SturmChain &ch, bool positive_lo = false) {
  if (rb.exact) return;
  const IntPoly &f = rb.poly;
  Int lead = abs(f.lead());
  bisect_to(rb, ch, Rat(Int(1), Int(2 * lead)), positive_lo);
  if (rb.exact) return;
  Rat a = rb.lo * Rat(lead);
  Rat b = rb.hi * Rat(lead);
  Int x;
  mpz_fdiv_q(x.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
  ++x;  // smallest integer strictly above lo * lead; endpoints are never roots
  if (Rat(x) >= b) return;
  Rat cand(x, lead);
  cand.canonicalize();
  if (sign_at(f, cand) == 0) {
    rb.exact = true;
    rb.value = cand;
  }
}

}  // namespace

RootBracket isolate_smallest_positive_root(const IntPoly &p, const Rat &tol) {
  if (is_zero(p)) throw std::runtime_error("no positive root");
  IntPoly f = squarefree_part(p);
  // strip roots at t = 0
  while (!is_zero(f) && is_zero(f.coeff(0))) {
    f.c.erase(f.c.begin());
    f.trim();
  }
  if (is_zero(f) || f.degree() == 0) throw std::runtime_error("no positive root");
  SturmChain ch = sturm_chain(f);
  f = ch.seq[0];
  if (ch.count_above(Rat(0)) == 0) throw std::runtime_error("no positive root");

  // degree-1: exact rational root
  if (f.degree() == 1) {
    Rat v = Rat(-f.coeff(0)) / Rat(f.coeff(1));
    v.canonicalize();
    RootBracket rb;
    rb.poly = f;
    rb.exact = true;
    rb.value = v;
    rb.lo = v / 2;
    rb.hi = v * 2;
    if (sgn(v) <= 0) throw std::runtime_error("no positive root");
    bisect_to(rb, ch, tol, true);
    return rb;
  }

  Rat lo(0), hi = cauchy_bound(f);
  // Find an interval (lo, hi] that contains the smallest positive root only.
  while (true) {
    Rat mid = (lo + hi) / 2;
    mid.canonicalize();
    int s = sign_at(f, mid);
    if (s == 0) {
      // mid is a root; is it the smallest positive one?
      if (ch.count(Rat(0), mid) == 1) {
        RootBracket rb;
        rb.poly = f;
        rb.exact = true;
        rb.value = mid;
        Rat d = mid / 2;
        rb.lo = mid - d;
        rb.hi = mid + d;
        // shrink until the bracket isolates this root alone
        while (ch.count(rb.lo, rb.hi) != 1 || sign_at(f, rb.lo) == 0 ||
               sign_at(f, rb.hi) == 0) {
          d /= 2;
          rb.lo = mid - d;
          rb.hi = mid + d;
        }
        bisect_to(rb, ch, tol, true);
        return rb;
      }
      hi = mid;  // smaller roots exist below mid
      continue;
    }
    int below = ch.count(Rat(0), mid);
    if (below >= 1)
      hi = mid;
    else
      lo = mid;
    if (ch.count(lo, hi) == 1 && sign_at(f, lo) != 0) break;
  }

  RootBracket rb;
  rb.poly = f;
  rb.lo = lo;
  rb.hi = hi;
  bisect_to(rb, ch, tol, true);
  detect_rational_root(rb, ch, true);
  return rb;
}

void refine_bracket(RootBracket &rb, const Rat &tol) {
  if (rb.hi - rb.lo <= tol) return;
  SturmChain ch = sturm_chain(rb.poly);
  bisect_to(rb, ch, tol);
}

std::vector<RootBracket> isolate_real_roots(const IntPoly &p, const Rat &tol) {
  std::vector<RootBracket> out;
  if (is_zero(p)) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  SturmChain ch = sturm_chain(p);
  const IntPoly &f = ch.seq[0];
  if (f.degree() == 0) return out;

  Rat bound = cauchy_bound(f);
  struct Item {
    Rat a, b;
    int count;
  };
  std::vector<Item> stack;
  {
    Rat a = -bound, b = bound;
    int c = ch.count(a, b);
    if (c > 0) stack.push_back({a, b, c});
  }
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (it.count == 1 && sign_at(f, it.a) != 0 && sign_at(f, it.b) != 0 &&
        sign_at(f, it.a) != sign_at(f, it.b)) {
      RootBracket rb;
      rb.poly = f;
      rb.lo = it.a;
      rb.hi = it.b;
      // local refinement: plain sign bisection is valid with one root inside
      while (rb.hi - rb.lo > tol) {
        Rat mid = (rb.lo + rb.hi) / 2;
        mid.canonicalize();
        int s = sign_at(f, mid);
        if (s == 0) {
          rb.exact = true;
          rb.value = mid;
          Rat d = (rb.hi - rb.lo) / 4;
          rb.lo = mid - d;
          rb.hi = mid + d;
          continue;
        }
        if (s == sign_at(f, rb.lo))
          rb.lo = mid;
        else
          rb.hi = mid;
      }
      detect_rational_root(rb, ch);
      out.push_back(rb);
      continue;
    }
    Rat mid = (it.a + it.b) / 2;
    mid.canonicalize();
    if (sign_at(f, mid) == 0) {
      RootBracket rb;
      rb.poly = f;
      rb.exact = true;
      rb.value = mid;
      Rat d = (it.b - it.a) / 4;
      while (ch.count(mid - d, mid + d) != 1 || sign_at(f, mid - d) == 0 ||
             sign_at(f, mid + d) == 0)
        d /= 2;
      rb.lo = mid - d;
      rb.hi = mid + d;
      SturmChain chf = ch;
      bisect_to(rb, chf, tol);
      out.push_back(rb);
      int left = ch.count(it.a, mid - d);
      int right = ch.count(mid + d, it.b);
      if (left > 0) stack.push_back({it.a, mid - d, left});
      if (right > 0) stack.push_back({mid + d, it.b, right});
      continue;
    }
    int left = ch.count(it.a, mid);
    int right = it.count - left;
    if (left > 0) stack.push_back({it.a, mid, left});
    if (right > 0) stack.push_back({mid, it.b, right});
  }
  std::sort(out.begin(), out.end(),
            [](const RootBracket &x, const RootBracket &y) { return x.lo < y.lo; });
  return out;
}

namespace {

// Truncate |v| toward zero keeping `sig` significant decimal digits; returns
// the digit string, a decimal exponent e such that value = 0.digits * 10^e,
// and whether v was negative. v must be nonzero.
struct TruncParts {
  bool neg;
  std::string digits;
  long e;  // value = 0.d1d2... * 10^e
};

TruncParts truncate_parts(const Rat &v, int sig) {
  TruncParts tp;
  tp.neg = sgn(v) < 0;
  Rat a = tp.neg ? Rat(-v) : v;
  // find e with 10^(e-1) <= a < 10^e
  long e = 0;
  Rat ten(10);
  Rat x = a;
  while (x >= 1) {
    x /= 10;
    ++e;
  }
  while (x < Rat(1, 10)) {
    x *= 10;
    --e;
  }
  // digits = floor(a * 10^(sig - e))
  Rat scaled = a;
  long shift = sig - e;
  for (long i = 0; i < shift; ++i) scaled *= ten;
  for (long i = 0; i < -shift; ++i) scaled /= ten;
  Int digits = Int(scaled.get_num() / scaled.get_den());  // floor for positive
  std::string d = digits.get_str();
  if (static_cast<long>(d.size()) > sig) {  // a was an exact power of 10
    ++e;
    d = d.substr(0, sig);
  }
  while (static_cast<long>(d.size()) < sig) d = "0" + d;
  tp.digits = d;
  tp.e = e;
  return tp;
}

std::string render_parts(const TruncParts &tp) {
  std::string s = tp.neg ? "-" : "";
  long e = tp.e;
  const std::string &d = tp.digits;
  long n = static_cast<long>(d.size());
  if (e <= 0) {
    s += "0.";
    for (long i = 0; i < -e; ++i) s += '0';
    s += d;
  } else if (e >= n) {
    s += d;
    for (long i = 0; i < e - n; ++i) s += '0';
  } else {
    s += d.substr(0, e) + "." + d.substr(e);
  }
  return s;
}

std::string truncate_decimal(const Rat &v, int sig) {
  if (sgn(v) == 0) return "0";
  return render_parts(truncate_parts(v, sig));
}

}  // namespace

std::string rational_decimal(const Rat &v, int sig_digits) {
  Rat w = v;
  w.canonicalize();
  if (sgn(w) == 0) return "0";
  if (w.get_den() == 1) return w.get_num().get_str();
  // A denominator of the form 2^a * 5^b terminates: print every digit. In
  // lowest terms the scaled numerator is never divisible by 10, so the
  // expansion carries no trailing zeros.
  Int rest = w.get_den();
  long two = 0, five = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++two;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++five;
  }
  if (rest == 1) {
    long k = std::max(two, five);
    Int scaled = abs(Int(w.get_num())) * int_pow(Int(2), static_cast<unsigned long>(k - two)) *
                 int_pow(Int(5), static_cast<unsigned long>(k - five));
    std::string digits = scaled.get_str();
    std::string s = sgn(w) < 0 ? "-" : "";
    long n = static_cast<long>(digits.size());
    if (n <= k) {
      s += "0.";
      s += std::string(static_cast<size_t>(k - n), '0');
      s += digits;
    } else {
      s += digits.substr(0, static_cast<size_t>(n - k)) + "." +
           digits.substr(static_cast<size_t>(n - k));
    }
    return s;
  }
  return truncate_decimal(w, sig_digits);
}

std::string bracket_decimal(RootBracket &rb, int sig_digits) {
  if (rb.exact) return rational_decimal(rb.value, sig_digits);
  for (int iter = 0; iter < 512; ++iter) {
    if (sgn(rb.lo) == sgn(rb.hi)) {
      std::string a = truncate_decimal(rb.lo, sig_digits);
      std::string b = truncate_decimal(rb.hi, sig_digits);
      if (a == b) return a;
      // If a truncation boundary is itself the root, bisection never settles;
      // detect it exactly.
      for (const Rat &end : {rb.lo, rb.hi}) {
        TruncParts tp = truncate_parts(end < 0 ? Rat(-end) : end, sig_digits);
        Rat boundary(Int(tp.digits.c_str()), 1);
        Rat ten(10);
        long shift = tp.e - sig_digits;
        for (long i = 0; i < shift; ++i) boundary *= ten;
        for (long i = 0; i < -shift; ++i) boundary /= ten;
        if (sgn(end) < 0) boundary = -boundary;
        if (boundary > rb.lo && boundary < rb.hi && sign_at(rb.poly, boundary) == 0) {
          rb.exact = true;
          rb.value = boundary;
          return rational_decimal(boundary, sig_digits);
        }
      }
    }
    refine_bracket(rb, rb.width() / 16);
    if (rb.exact) return rational_decimal(rb.value, sig_digits);
  }
  throw std::runtime_error("bracket_decimal: failed to settle digits");
}

}  // namespace specrad
