#include "specrad/extremal.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"
#include "specrad/resultant.hpp"
#include "specrad/spectral.hpp"
#include "specrad/walkgen.hpp"

namespace specrad {

namespace {

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

Int binom(long long n, long long k) {
  if (k < 0 || k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// dgm text squashed onto one line for key:value reports
std::string dgm_compact(const Digraph &g) {
  std::string s = to_dgm(g);
  std::string out;
  for (char ch : s) {
    if (ch == '\n') {
      if (!out.empty() && out.back() != '/') out.push_back('/');
    } else {
      out.push_back(ch);
    }
  }
  if (!out.empty() && out.back() == '/') out.pop_back();
  return out;
}

// ---------------------------------------------------------------------------
// partitions and Young-diagram seeds
// ---------------------------------------------------------------------------

void partitions_rec(int remaining, int max_part, int max_len, std::vector<int> &cur,
                    std::vector<std::vector<int>> &out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  if (max_len == 0) return;
  for (int p = std::min(max_part, remaining); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, max_len - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> partitions(int s, int max_part, int max_len) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(s, max_part, max_len, cur, out);
  return out;
}

// row r has out-edges to columns 1..lambda_r
Digraph young_digraph(const std::vector<int> &lambda) {
  const int rows = static_cast<int>(lambda.size());
  const int cols = lambda.empty() ? 0 : lambda[0];
  Digraph g(std::max(rows, cols));
  for (int r = 0; r < rows; ++r)
    for (int j = 1; j <= lambda[r]; ++j) g.set_edge(r + 1, j);
  return g;
}

// partition of the complement of a partition-shaped member (row sizes, sorted)
std::vector<int> complement_partition(const Digraph &member) {
  Digraph co = complement(member);
  std::vector<int> parts;
  for (int i = 0; i < co.n; ++i) {
    int cnt = __builtin_popcountll(co.rows[i]);
    if (cnt > 0) parts.push_back(cnt);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

std::string partition_string(const std::vector<int> &parts) {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// SearchReport serialization
// ---------------------------------------------------------------------------

std::string SearchReport::to_text() const {
  std::ostringstream os;
  os << "universe: " << universe << "\n";
  os << "count_examined: " << count_examined.get_str() << "\n";
  os << "value_exact: " << (value_exact ? "true" : "false") << "\n";
  if (value_exact) os << "value_int: " << value_int.get_str() << "\n";
  os << "value_lo: " << value_lo.get_str() << "\n";
  os << "value_hi: " << value_hi.get_str() << "\n";
  os << "argmax_count: " << argmax.size() << "\n";
  for (size_t i = 0; i < argmax.size(); ++i)
    os << "argmax[" << i << "]: " << dgm_compact(argmax[i]) << "\n";
  for (size_t i = 0; i < violations.size(); ++i)
    os << "violation[" << i << "]: " << violations[i] << "\n";
  for (size_t i = 0; i < notes.size(); ++i) os << "note[" << i << "]: " << notes[i] << "\n";
  return os.str();
}

std::string SearchReport::to_json() const {
  nlohmann::ordered_json j;
  j["universe"] = universe;
  j["count_examined"] = count_examined.get_str();
  j["value_exact"] = value_exact;
  if (value_exact) j["value_int"] = value_int.get_str();
  j["value_lo"] = value_lo.get_str();
  j["value_hi"] = value_hi.get_str();
  j["argmax"] = nlohmann::ordered_json::array();
  for (const auto &g : argmax) j["argmax"].push_back(to_dgm(g));
  j["violations"] = violations;
  j["notes"] = notes;
  return j.dump(2);
}

// ---------------------------------------------------------------------------
// enumerate_pdi
// ---------------------------------------------------------------------------

std::vector<Digraph> enumerate_pdi(int m, int s) {
  if (m < 1 || s < 1) throw std::invalid_argument("enumerate_pdi: m and s must be positive");
  if (!(s < 2 * m))
    throw std::invalid_argument(
        "enumerate_pdi: requires (m+1)^2 - s > m^2 + 1, i.e. s < 2m");
  std::vector<Digraph> out;
  for (const auto &lambda : partitions(s, m, m)) {
    Digraph member = embed_complement(young_digraph(lambda), m);
    if (!is_partition_shaped(member))
      throw std::logic_error("enumerate_pdi: member not partition-shaped");
    if (!is_strongly_connected(member))
      throw std::logic_error("enumerate_pdi: member not strongly connected");
    out.push_back(std::move(member));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// backelin_argmax
// ---------------------------------------------------------------------------

namespace {

struct BackelinAcc {
  long long best = -1;
  std::vector<Digraph> argmax;  // raw digraphs; compacted to canonical on overflow

  void compact() {
    for (auto &g : argmax) g = canonical_form(g);
    std::sort(argmax.begin(), argmax.end());
    argmax.erase(std::unique(argmax.begin(), argmax.end()), argmax.end());
  }

  void hit(long long value, const std::vector<int> &cells, int vbound) {
    if (value < best) return;
    if (value > best) {
      best = value;
      argmax.clear();
    }
    Digraph g(vbound);
    for (int c : cells) g.set_edge(c / vbound + 1, c % vbound + 1);
    argmax.push_back(std::move(g));
    if (argmax.size() > 4096) compact();
  }
};

void backelin_dfs(int vbound, int cells, int start, int remaining, long long walks2,
                  std::vector<int> &in_deg, std::vector<int> &out_deg, std::vector<int> &chosen,
                  BackelinAcc &acc) {
  if (remaining == 0) {
    acc.hit(walks2, chosen, vbound);
    return;
  }
  for (int c = start; c <= cells - remaining; ++c) {
    const int i = c / vbound, j = c % vbound;
    const long long delta = in_deg[i] + out_deg[j] + (i == j ? 1 : 0);
    ++out_deg[i];
    ++in_deg[j];
    chosen.push_back(c);
    backelin_dfs(vbound, cells, c + 1, remaining - 1, walks2 + delta, in_deg, out_deg, chosen,
                 acc);
    chosen.pop_back();
    --out_deg[i];
    --in_deg[j];
  }
}

SearchReport backelin_report_shell(int s, int vbound, const Int &universe_size) {
  SearchReport rep;
  std::ostringstream os;
  os << "edge subsets of size " << s << " on " << vbound << " labeled vertices (C("
     << vbound * vbound << "," << s << ") = " << universe_size.get_str() << ")";
  rep.universe = os.str();
  rep.count_examined = universe_size;
  rep.notes.push_back("vertex bound " + std::to_string(vbound) +
                      " is a heuristic cap, not a proof: the enumeration is exhaustive only "
                      "over digraphs with at most " +
                      std::to_string(vbound) + " non-isolated vertices");
  return rep;
}

void backelin_validate(int s, int vbound, Int &universe_size) {
  if (s < 1) throw std::invalid_argument("backelin_argmax: s must be positive");
  if (vbound < 2 || vbound > 63)
    throw std::invalid_argument("backelin_argmax: vbound must be in [2, 63]");
  if (s > vbound * vbound)
    throw std::invalid_argument("backelin_argmax: s exceeds vbound^2, universe is empty");
  universe_size = binom(static_cast<long long>(vbound) * vbound, s);
  if (universe_size > Int(100000000))
    throw std::runtime_error("backelin_argmax: universe C(" +
                             std::to_string(vbound * vbound) + "," + std::to_string(s) + ") = " +
                             universe_size.get_str() + " exceeds 10^8, refusing");
}

void backelin_finish(SearchReport &rep, long long best, std::vector<Digraph> raw_argmax,
                     double t0) {
  for (auto &g : raw_argmax) g = canonical_form(g);
  std::sort(raw_argmax.begin(), raw_argmax.end());
  raw_argmax.erase(std::unique(raw_argmax.begin(), raw_argmax.end()), raw_argmax.end());
  rep.argmax = std::move(raw_argmax);
  rep.value_exact = true;
  rep.value_int = Int(static_cast<long>(best));
  rep.value_lo = rep.value_hi = Rat(rep.value_int);
  rep.elapsed_seconds = now_seconds() - t0;
}

}  // namespace

SearchReport backelin_argmax_serial(int s, int vbound) {
  Int universe_size;
  backelin_validate(s, vbound, universe_size);
  const double t0 = now_seconds();
  SearchReport rep = backelin_report_shell(s, vbound, universe_size);

  const int cells = vbound * vbound;
  std::vector<int> in_deg(vbound, 0), out_deg(vbound, 0), chosen;
  BackelinAcc acc;
  backelin_dfs(vbound, cells, 0, s, 0, in_deg, out_deg, chosen, acc);

  rep.threads = 1;
  backelin_finish(rep, acc.best, std::move(acc.argmax), t0);
  return rep;
}

SearchReport backelin_argmax(int s, int vbound) {
  Int universe_size;
  backelin_validate(s, vbound, universe_size);
  const double t0 = now_seconds();
  SearchReport rep = backelin_report_shell(s, vbound, universe_size);

  const int cells = vbound * vbound;
  // partition the enumeration by the smallest chosen cell; merge in index order
  std::vector<BackelinAcc> per_first(cells);
  std::string first_error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int f = 0; f <= cells - s; ++f) {
    try {
      std::vector<int> in_deg(vbound, 0), out_deg(vbound, 0), chosen;
      const int i = f / vbound, j = f % vbound;
      const long long delta = (i == j) ? 1 : 0;
      ++out_deg[i];
      ++in_deg[j];
      chosen.push_back(f);
      backelin_dfs(vbound, cells, f + 1, s - 1, delta, in_deg, out_deg, chosen, per_first[f]);
    } catch (const std::exception &ex) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (first_error.empty()) first_error = ex.what();
    }
  }
  if (!first_error.empty()) throw std::runtime_error("backelin_argmax: " + first_error);

  long long best = -1;
  std::vector<Digraph> argmax;
  for (const auto &acc : per_first) {
    if (acc.best < best) continue;
    if (acc.best > best) {
      best = acc.best;
      argmax.clear();
    }
    argmax.insert(argmax.end(), acc.argmax.begin(), acc.argmax.end());
  }

  rep.threads = max_threads();
  backelin_finish(rep, best, std::move(argmax), t0);
  return rep;
}

// ---------------------------------------------------------------------------
// exhaustive_rho_max
// ---------------------------------------------------------------------------

namespace {

void tighten(SpectralResult &r) {
  if (r.exact || r.is_zero) return;
  refine_bracket(r.pole, r.pole.width() / 4);
  r.rho_lo = Rat(1) / r.pole.hi;
  r.rho_hi = Rat(1) / r.pole.lo;
}

// certified three-way comparison; refines brackets, proves ties exactly
int compare_rho(SpectralResult &a, SpectralResult &b) {
  if (a.is_zero && b.is_zero) return 0;
  for (int iter = 0; iter < 256; ++iter) {
    if (a.rho_hi < b.rho_lo) return -1;
    if (b.rho_hi < a.rho_lo) return 1;
    if (a.exact && b.exact) {
      if (a.rho_lo == b.rho_lo) return 0;
      return a.rho_lo < b.rho_lo ? -1 : 1;
    }
    if (!a.is_zero && !b.is_zero) {
      // a tie is proven when a common factor of the certifying polynomials
      // has a root inside both pole brackets (each holds exactly one root)
      IntPoly g = intpoly_gcd(a.pole.poly, b.pole.poly);
      if (g.degree() >= 1) {
        Rat lo = std::max(a.pole.lo, b.pole.lo);
        Rat hi = std::min(a.pole.hi, b.pole.hi);
        if (lo < hi) {
          int roots = sturm_chain(g).count(lo, hi) + (sign_at(g, lo) == 0 ? 1 : 0);
          if (roots >= 1) return 0;
        }
      }
    }
    tighten(a);
    tighten(b);
  }
  throw std::logic_error("compare_rho: comparison did not converge");
}

struct RhoCand {
  Digraph g;
  SpectralResult r;
};

// fold candidate into the running argmax list (all members proven rho-equal)
void rho_fold(std::vector<RhoCand> &bests, RhoCand cand) {
  if (bests.empty()) {
    bests.push_back(std::move(cand));
    return;
  }
  int c = compare_rho(cand.r, bests.front().r);
  if (c < 0) return;
  if (c > 0) bests.clear();
  bests.push_back(std::move(cand));
}

void rho_enumerate(int n, int k, const Rat &tol, int first_cell, std::vector<RhoCand> &bests) {
  const int cells = n * n;
  std::vector<int> chosen;
  chosen.reserve(k);
  chosen.push_back(first_cell);
  // iterative DFS over increasing cell indices
  std::vector<int> stack_next;
  std::function<void(int, int)> rec = [&](int start, int remaining) {
    if (remaining == 0) {
      Digraph g(n);
      for (int c : chosen) g.set_edge(c / n + 1, c % n + 1);
      rho_fold(bests, RhoCand{g, spectral_radius(g, tol)});
      return;
    }
    for (int c = start; c <= cells - remaining; ++c) {
      chosen.push_back(c);
      rec(c + 1, remaining - 1);
      chosen.pop_back();
    }
  };
  rec(first_cell + 1, k - 1);
}

SearchReport rho_report_shell(int n, int k, const Int &universe_size) {
  SearchReport rep;
  std::ostringstream os;
  os << "all " << n << "-vertex digraphs with " << k << " edges (C(" << n * n << "," << k
     << ") = " << universe_size.get_str() << ")";
  rep.universe = os.str();
  rep.count_examined = universe_size;
  return rep;
}

void rho_validate(int n, int k, const Rat &tol, Int &universe_size) {
  if (n < 1 || n > 63)
    throw std::invalid_argument("exhaustive_rho_max: n must be in [1, 63]");
  if (k < 1 || k > n * n)
    throw std::invalid_argument("exhaustive_rho_max: k must satisfy 1 <= k <= n^2");
  if (sgn(tol) <= 0) throw std::invalid_argument("exhaustive_rho_max: tol must be positive");
  universe_size = binom(static_cast<long long>(n) * n, k);
  if (universe_size > Int(10000000))
    throw std::runtime_error("exhaustive_rho_max: universe C(" + std::to_string(n * n) + "," +
                             std::to_string(k) + ") = " + universe_size.get_str() +
                             " exceeds 10^7, refusing");
}

void rho_finish(SearchReport &rep, std::vector<RhoCand> &bests, int n, int k, const Rat &tol,
                double t0) {
  rep.value_exact = false;
  for (auto &cand : bests) {
    if (cand.r.exact && !rep.value_exact) {
      rep.value_exact = true;
      rep.value_int = Int(cand.r.rho_lo.get_num());
    }
  }
  rep.value_lo = bests.front().r.rho_lo;
  rep.value_hi = bests.front().r.rho_hi;
  for (auto &cand : bests) {
    rep.value_lo = std::max(rep.value_lo, cand.r.rho_lo);
    rep.value_hi = std::min(rep.value_hi, cand.r.rho_hi);
  }
  std::vector<Digraph> arg;
  arg.reserve(bests.size());
  for (auto &cand : bests) arg.push_back(canonical_form(cand.g));
  std::sort(arg.begin(), arg.end());
  arg.erase(std::unique(arg.begin(), arg.end()), arg.end());
  rep.argmax = std::move(arg);

  if (k == n * n - 4 && n >= 3) {
    // the two competing near-complete constructions at s = 4
    const int m = n - 1;
    Digraph blocks = embed_complement(complete_with_loops(2), m);
    Digraph ml = make_ml(m, 2 * m - 3);
    SpectralResult rb = spectral_radius(blocks, tol);
    SpectralResult rm = spectral_radius(ml, tol);
    int c = compare_rho(rb, rm);
    std::ostringstream os;
    os << "k = n^2 - 4: embedded complete-2-block construction rho in [" << rb.rho_lo.get_str()
       << ", " << rb.rho_hi.get_str() << "] vs M(" << m << "," << 2 * m - 3 << ") rho in ["
       << rm.rho_lo.get_str() << ", " << rm.rho_hi.get_str() << "]: "
       << (c > 0 ? "block construction strictly larger"
                 : (c < 0 ? "M(m,2m-3) strictly larger" : "proven equal"));
    rep.notes.push_back(os.str());
  }
  rep.elapsed_seconds = now_seconds() - t0;
}

}  // namespace

SearchReport exhaustive_rho_max_serial(int n, int k, const Rat &tol) {
  Int universe_size;
  rho_validate(n, k, tol, universe_size);
  const double t0 = now_seconds();
  SearchReport rep = rho_report_shell(n, k, universe_size);

  std::vector<RhoCand> bests;
  for (int f = 0; f <= n * n - k; ++f) rho_enumerate(n, k, tol, f, bests);
  rep.threads = 1;
  rho_finish(rep, bests, n, k, tol, t0);
  return rep;
}

SearchReport exhaustive_rho_max(int n, int k, const Rat &tol) {
  Int universe_size;
  rho_validate(n, k, tol, universe_size);
  const double t0 = now_seconds();
  SearchReport rep = rho_report_shell(n, k, universe_size);

  const int cells = n * n;
  std::vector<std::vector<RhoCand>> per_first(cells);
  std::string first_error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int f = 0; f <= cells - k; ++f) {
    try {
      rho_enumerate(n, k, tol, f, per_first[f]);
    } catch (const std::exception &ex) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (first_error.empty()) first_error = ex.what();
    }
  }
  if (!first_error.empty()) throw std::runtime_error("exhaustive_rho_max: " + first_error);

  std::vector<RhoCand> bests;
  for (auto &part : per_first)
    for (auto &cand : part) rho_fold(bests, std::move(cand));
  rep.threads = max_threads();
  rho_finish(rep, bests, n, k, tol, t0);
  return rep;
}

// ---------------------------------------------------------------------------
// dominance_check
// ---------------------------------------------------------------------------

SearchReport dominance_check(int mVal, int s, int order) {
  if (s == 4)
    throw std::invalid_argument("dominance_check: s = 4 is the exceptional case, not covered");
  if (order < 1) throw std::invalid_argument("dominance_check: order must be positive");
  const double t0 = now_seconds();

  std::vector<Digraph> members = enumerate_pdi(mVal, s);
  Digraph star_member = embed_complement(saturated_star(s), mVal);
  const Int c = walk_count(saturated_star(s), 2);
  WalkSeries star_series = walk_series(star_member, order);

  SearchReport rep;
  {
    std::ostringstream os;
    os << "PDI(" << mVal << "," << s << ") coefficient dominance against the saturated-star "
       << "member through order " << order;
    rep.universe = os.str();
  }
  rep.count_examined = Int(static_cast<long>(members.size()));
  rep.notes.push_back("saturated-star member has seed walk-of-length-2 count c = " +
                      c.get_str());

  for (size_t bi = 0; bi < members.size(); ++bi) {
    const Digraph &B = members[bi];
    const Int d = walk_count(complement(B), 2);
    WalkSeries ws = walk_series(B, order);
    const std::string tag =
        "competitor " + std::to_string(bi) + " " + partition_string(complement_partition(B));
    for (int i = 0; i <= order; ++i) {
      if (star_series.chi[i] < ws.chi[i]) {
        std::ostringstream os;
        os << tag << ": chi_" << i << " = " << ws.chi[i].get_str() << " exceeds star's "
           << star_series.chi[i].get_str();
        rep.violations.push_back(os.str());
      } else if (star_series.chi[i] == ws.chi[i] && i >= 3 && d < c) {
        std::ostringstream os;
        os << tag << ": chi_" << i << " ties at " << ws.chi[i].get_str()
           << " where strict dominance is required (d = " << d.get_str() << " < c)";
        rep.violations.push_back(os.str());
      }
    }
    if (order >= 3) {
      std::ostringstream os;
      os << tag << ": d = " << d.get_str() << ", chi_3 gap = "
         << Int(star_series.chi[3] - ws.chi[3]).get_str();
      rep.notes.push_back(os.str());
    }
  }

  rep.value_exact = true;
  rep.value_int = Int(static_cast<long>(rep.violations.size()));
  rep.value_lo = rep.value_hi = Rat(rep.value_int);
  rep.argmax.push_back(star_member);
  rep.threads = 1;
  rep.elapsed_seconds = now_seconds() - t0;
  return rep;
}

// ---------------------------------------------------------------------------
// family_chi_poly
// ---------------------------------------------------------------------------

IntPoly family_chi_poly(const FamilySpec &family, int chi_index, int m_lo, int m_hi) {
  if (chi_index < 0) throw std::invalid_argument("family_chi_poly: chi_index must be >= 0");
  if (m_hi - m_lo + 1 < chi_index + 1)
    throw std::invalid_argument("family_chi_poly: m range must oversample the degree");
  std::vector<std::pair<Int, Int>> points;
  for (int m = m_lo; m <= m_hi; ++m) {
    Digraph member = family.member(m);
    Int chi = chi_index == 0 ? Int(1) : walk_count(member, chi_index - 1);
    points.emplace_back(Int(m), std::move(chi));
  }
  return interpolate_integer_polynomial(points);
}

// ---------------------------------------------------------------------------
// no_crossing_certificate
// ---------------------------------------------------------------------------

namespace {

struct Iv {
  Rat lo, hi;
};

Iv iv_point(const Rat &x) { return {x, x}; }

Iv iv_add(const Iv &a, const Iv &b) { return {a.lo + b.lo, a.hi + b.hi}; }

Iv iv_mul(const Iv &a, const Iv &b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

Iv iv_pow(const Iv &x, int k) {
  Iv r = iv_point(Rat(1));
  for (int i = 0; i < k; ++i) r = iv_mul(r, x);
  return r;
}

// range enclosure of an integer polynomial over an interval
Iv poly_over(const IntPoly &p, const Iv &x) {
  Iv r = iv_point(Rat(0));
  for (int i = 0; i <= p.degree(); ++i) {
    if (is_zero(p.coeff(i))) continue;
    r = iv_add(r, iv_mul(iv_point(Rat(p.coeff(i))), iv_pow(x, i)));
  }
  return r;
}

// range enclosure of D(t, m) over a box
Iv bivar_over(const BivarPoly &D, const Iv &t, const Iv &m) {
  Iv r = iv_point(Rat(0));
  for (int k = 0; k <= D.degree(); ++k) {
    if (is_zero(D.coeff(k))) continue;
    r = iv_add(r, iv_mul(poly_over(D.coeff(k), m), iv_pow(t, k)));
  }
  return r;
}

// specialize at a rational m, clearing denominators (roots in t unchanged)
IntPoly bivar_at_rat(const BivarPoly &p, const Rat &m0) {
  RatPoly r;
  for (int k = 0; k <= p.degree(); ++k) r.c.push_back(p.coeff(k).eval(m0));
  r.trim();
  return to_primitive_int(r);
}

// squarefree-in-t part, normalized so the constant term stays 1
BivarPoly t_squarefree_den(BivarPoly D) {
  BivarPoly g = bivar_gcd_t(D, D.derivative());
  if (g.degree() >= 1) D = poly_exact_div(D, g);
  if (D.coeff(0) == IntPoly{Int(-1)}) D = -D;
  if (!(D.coeff(0) == IntPoly::one()))
    throw std::logic_error("no_crossing_certificate: denominator lost its unit constant term");
  return D;
}

struct PolePair {
  RootBracket a, b;
  bool separated = false;
  bool failed = false;
  std::string error;
};

// isolate both dominant poles at rational m0 and refine until disjoint
PolePair poles_at(const BivarPoly &DA, const BivarPoly &DB, const Rat &m0) {
  PolePair pp;
  try {
    // squarefree parts keep the isolation honest when a specialization
    // happens to carry a repeated factor
    pp.a = isolate_smallest_positive_root(squarefree_part(bivar_at_rat(DA, m0)), Rat(1, 1024));
    pp.b = isolate_smallest_positive_root(squarefree_part(bivar_at_rat(DB, m0)), Rat(1, 1024));
  } catch (const std::exception &ex) {
    pp.failed = true;
    pp.error = ex.what();
    return pp;
  }
  for (int round = 0; round < 400; ++round) {
    if (pp.a.hi < pp.b.lo || pp.b.hi < pp.a.lo) {
      pp.separated = true;
      return pp;
    }
    refine_bracket(pp.a, pp.a.width() / 4);
    refine_bracket(pp.b, pp.b.width() / 4);
  }
  pp.failed = true;
  pp.error = "could not separate the dominant poles";
  return pp;
}

std::string iv_str(const Rat &lo, const Rat &hi) {
  return "[" + lo.get_str() + ", " + hi.get_str() + "]";
}

// certify that the dominant poles of DA and DB stay disjoint for every m in I
bool clear_interval(const BivarPoly &DA, const BivarPoly &DB, const Iv &I, int want_sign,
                    std::string &how, std::string &why_not) {
  Rat mid = (I.lo + I.hi) / 2;
  // sample away from the critical value itself so both specializations stay
  // squarefree and the poles are honest simple roots
  PolePair pp = poles_at(DA, DB, mid);
  if (pp.failed) {
    Rat nudged = (I.lo + mid) / 2;
    pp = poles_at(DA, DB, nudged);
  }
  if (pp.failed) {
    why_not = "pole isolation failed over " + iv_str(I.lo, I.hi) + ": " + pp.error;
    return false;
  }
  const bool a_low = pp.a.hi < pp.b.lo;
  if ((a_low ? -1 : 1) != want_sign) {
    why_not = "pole order flips inside " + iv_str(I.lo, I.hi);
    return false;
  }
  const BivarPoly &DLow = a_low ? DA : DB;
  const BivarPoly &DHigh = a_low ? DB : DA;
  const RootBracket &rLow = a_low ? pp.a : pp.b;
  const RootBracket &rHigh = a_low ? pp.b : pp.a;
  const Rat w = (rLow.hi + rHigh.lo) / 2;

  // D(0,m) = 1: push u below both poles with D > 0 certified on [0,u] x I
  Rat u = std::min(rLow.lo, rHigh.lo);
  bool u_ok = false;
  for (int halvings = 0; halvings < 200 && !u_ok; ++halvings) {
    Iv tband{Rat(0), u};
    if (sgn(bivar_over(DA, tband, I).lo) > 0 && sgn(bivar_over(DB, tband, I).lo) > 0)
      u_ok = true;
    else
      u /= 2;
  }
  if (!u_ok) {
    why_not = "no certified pole-free initial band over " + iv_str(I.lo, I.hi);
    return false;
  }

  // the lower pole stays below w: D_low(w, m) < 0 throughout I
  if (!(sgn(bivar_over(DLow, iv_point(w), I).hi) < 0)) {
    why_not = "could not certify the lower pole below the split point over " +
              iv_str(I.lo, I.hi);
    return false;
  }

  // the higher pole stays above w: D_high > 0 on [u, w] x I, adaptively
  int segments = 0;
  std::vector<Iv> stack{{u, w}};
  while (!stack.empty()) {
    Iv seg = stack.back();
    stack.pop_back();
    if (sgn(bivar_over(DHigh, seg, I).lo) > 0) continue;
    if (++segments > 512) {
      why_not = "t-subdivision budget exhausted over " + iv_str(I.lo, I.hi);
      return false;
    }
    Rat half = (seg.lo + seg.hi) / 2;
    stack.push_back({seg.lo, half});
    stack.push_back({half, seg.hi});
  }

  how = "critical interval " + iv_str(I.lo, I.hi) + ": poles separated by t = " + w.get_str();
  return true;
}

}  // namespace

std::string NoCrossingCertificate::to_text() const {
  std::ostringstream os;
  os << "granted: " << (granted ? "true" : "false") << "\n";
  os << "sign: " << sign << "\n";
  os << "resultant_m: " << to_string(resultant_m, "m") << "\n";
  os << "real_root_count: " << real_roots.size() << "\n";
  for (size_t i = 0; i < real_roots.size(); ++i)
    os << "real_root[" << i << "]: " << iv_str(real_roots[i].lo, real_roots[i].hi) << "\n";
  for (size_t i = 0; i < checkpoints.size(); ++i)
    os << "checkpoint[" << i << "]: " << checkpoints[i].get_str() << "\n";
  for (size_t i = 0; i < cleared.size(); ++i) os << "cleared[" << i << "]: " << cleared[i] << "\n";
  os << "detail: " << detail << "\n";
  return os.str();
}

NoCrossingCertificate no_crossing_certificate(const FamilySpec &famA, const FamilySpec &famB,
                                              int mMin) {
  NoCrossingCertificate cert;

  BivarPoly DA = family_series_symbolic(famA.seed).den;
  BivarPoly DB = family_series_symbolic(famB.seed).den;
  IntPoly res_orig = resultant(DA, DB);
  if (is_zero(res_orig)) throw std::runtime_error("families share a pole branch");
  cert.resultant_m = primitive_part(res_orig);

  DA = t_squarefree_den(DA);
  DB = t_squarefree_den(DB);
  if (DA == DB) throw std::runtime_error("families share a pole branch");
  IntPoly res_sf = resultant(DA, DB);
  if (is_zero(res_sf)) throw std::runtime_error("families share a pole branch");

  const Rat root_tol = Rat(1, 1 << 24);
  {
    IntPoly rsq = squarefree_part(cert.resultant_m);
    if (rsq.degree() >= 1) cert.real_roots = isolate_real_roots(rsq, root_tol);
  }

  // critical set: resultant, leading coefficients, and both discriminants
  // (the dominant pole can jump only where one of these vanishes)
  IntPoly crit = primitive_part(res_sf);
  auto fold_factor = [&crit](const IntPoly &f) {
    if (f.degree() >= 1) crit = crit * primitive_part(f);
  };
  fold_factor(DA.lead());
  fold_factor(DB.lead());
  if (DA.degree() >= 2) fold_factor(resultant(DA, DA.derivative()));
  if (DB.degree() >= 2) fold_factor(resultant(DB, DB.derivative()));
  crit = squarefree_part(crit);

  const Rat mmin_rat(mMin);
  if (sign_at(crit, mmin_rat) == 0) {
    cert.detail = "refused: critical point exactly at m = " + mmin_rat.get_str();
    return cert;
  }

  std::vector<RootBracket> crit_roots;
  if (crit.degree() >= 1) crit_roots = isolate_real_roots(crit, root_tol);

  // keep only critical points strictly above mMin; push brackets off mMin
  std::vector<RootBracket> relevant;
  for (auto &rb : crit_roots) {
    while (rb.lo <= mmin_rat && mmin_rat <= rb.hi) refine_bracket(rb, rb.width() / 4);
    if (rb.hi < mmin_rat) continue;
    relevant.push_back(rb);
  }

  // checkpoints: mMin, each gap between consecutive critical brackets, and
  // one point beyond the last critical bracket
  std::vector<Rat> check_ms{mmin_rat};
  for (size_t i = 0; i + 1 < relevant.size(); ++i)
    check_ms.push_back((relevant[i].hi + relevant[i + 1].lo) / 2);
  if (!relevant.empty()) check_ms.push_back(relevant.back().hi + 1);

  int sign = 0;
  for (const Rat &m0 : check_ms) {
    PolePair pp = poles_at(DA, DB, m0);
    if (pp.failed) {
      cert.detail = "refused: checkpoint m = " + m0.get_str() + ": " + pp.error;
      return cert;
    }
    int s0 = pp.a.hi < pp.b.lo ? -1 : 1;
    if (sign == 0) sign = s0;
    if (s0 != sign) {
      cert.detail = "refused: sign differs between checkpoints (crossing before m = " +
                    m0.get_str() + ")";
      return cert;
    }
    cert.checkpoints.push_back(m0);
  }

  for (auto rb : relevant) {
    bool done = false;
    std::string how, why_not;
    for (int attempt = 0; attempt < 8 && !done; ++attempt) {
      done = clear_interval(DA, DB, Iv{rb.lo, rb.hi}, sign, how, why_not);
      if (!done) refine_bracket(rb, rb.width() / 16);
    }
    if (!done) {
      cert.detail = "refused: " + why_not;
      return cert;
    }
    cert.cleared.push_back(how);
  }

  cert.granted = true;
  cert.sign = sign;
  {
    std::ostringstream os;
    os << "granted: r_A(m) - r_B(m) keeps sign " << sign << " for all m >= " << mMin << " ("
       << cert.cleared.size() << " critical interval(s) cleared, " << cert.checkpoints.size()
       << " checkpoint(s))";
    cert.detail = os.str();
  }
  return cert;
}

}  // namespace specrad
