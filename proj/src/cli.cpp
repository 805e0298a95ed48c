#include "specrad/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "specrad/asympt.hpp"
#include "specrad/digraph.hpp"
#include "specrad/extremal.hpp"
#include "specrad/poly.hpp"
#include "specrad/roots.hpp"
#include "specrad/spectral.hpp"
#include "specrad/walkgen.hpp"

namespace specrad {

namespace {

// thrown for mathematically meaningful violations: mapped to exit code 1
struct Violation {
  std::string message;
};

Rat parse_rat(const std::string &s) {
  if (s.find('/') != std::string::npos) {
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0 || sgn(Rat(r.get_den())) == 0)
      throw std::runtime_error("cannot parse rational '" + s + "'");
    r.canonicalize();
    return r;
  }
  // [sign] digits [. digits] [e|E exponent]
  std::string body = s;
  long exp10 = 0;
  size_t epos = body.find_first_of("eE");
  if (epos != std::string::npos) {
    exp10 = std::stol(body.substr(epos + 1));
    body = body.substr(0, epos);
  }
  bool neg = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    neg = body[0] == '-';
    body = body.substr(1);
  }
  std::string digits;
  long frac = 0;
  bool seen_dot = false;
  for (char c : body) {
    if (c == '.') {
      if (seen_dot) throw std::runtime_error("cannot parse number '" + s + "'");
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_dot) ++frac;
    } else {
      throw std::runtime_error("cannot parse number '" + s + "'");
    }
  }
  if (digits.empty()) throw std::runtime_error("cannot parse number '" + s + "'");
  Rat v(Int(digits.c_str()));
  long shift = exp10 - frac;
  for (long i = 0; i < shift; ++i) v *= 10;
  for (long i = 0; i < -shift; ++i) v /= 10;
  if (neg) v = -v;
  v.canonicalize();
  return v;
}

std::pair<int, int> parse_range(const std::string &s) {
  size_t pos = s.find("..");
  if (pos == std::string::npos)
    throw std::runtime_error("range must look like A..B, got '" + s + "'");
  int a = std::stoi(s.substr(0, pos));
  int b = std::stoi(s.substr(pos + 2));
  if (a > b) throw std::runtime_error("empty range '" + s + "'");
  return {a, b};
}

Digraph load_digraph(const std::string &in_path, std::istream &in) {
  std::string text;
  if (!in_path.empty()) {
    std::ifstream f(in_path);
    if (!f) throw std::runtime_error("cannot open input file '" + in_path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    text = buf.str();
  } else {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return from_dgm(text);
}

// value truncated toward zero to exactly `sig` significant digits
std::string fixed_digits(const Rat &v, int sig) {
  if (sgn(v) == 0) return "0";
  const bool neg = sgn(v) < 0;
  Rat a = neg ? Rat(-v) : v;
  long e = 0;
  Rat x = a;
  while (x >= 1) {
    x /= 10;
    ++e;
  }
  while (x < Rat(1, 10)) {
    x *= 10;
    --e;
  }
  Rat scaled = a;
  const long shift = sig - e;
  for (long i = 0; i < shift; ++i) scaled *= 10;
  for (long i = 0; i < -shift; ++i) scaled /= 10;
  Int digits = Int(scaled.get_num() / scaled.get_den());
  std::string d = digits.get_str();
  if (static_cast<long>(d.size()) > sig) {
    ++e;
    d = d.substr(0, sig);
  }
  while (static_cast<long>(d.size()) < sig) d.insert(d.begin(), '0');

  std::string out = neg ? "-" : "";
  if (e <= 0) {
    out += "0.";
    out.append(static_cast<size_t>(-e), '0');
    out += d;
  } else if (e >= sig) {
    out += d;
    out.append(static_cast<size_t>(e - sig), '0');
  } else {
    out += d.substr(0, e) + "." + d.substr(e);
  }
  return out;
}

// the two near-complete s=6 seeds: the saturated star and its competitor
Digraph s6_second_seed() {
  Digraph g(3);
  g.set_edge(1, 1);
  g.set_edge(1, 2);
  g.set_edge(1, 3);
  g.set_edge(2, 1);
  g.set_edge(2, 2);
  g.set_edge(3, 1);
  return g;
}

std::string report_out(const SearchReport &rep, bool json) {
  return json ? rep.to_json() + "\n" : rep.to_text();
}

void report_stats(std::ostringstream &err, const SearchReport &rep) {
  err << "elapsed: " << rep.elapsed_seconds << " s, threads: " << rep.threads << "\n";
}

}  // namespace

CommandResult run_command(const std::vector<std::string> &argv, std::istream &in) {
  CommandResult res;
  std::ostringstream out, err;

  CLI::App app{"exact walk series, spectral radii, and extremal searches for digraphs"};
  app.name("specrad");
  app.require_subcommand(1);

  std::string in_path;
  int mval = 0, pval = 0, qval = 0, sval = 0, nval = 0, kval = 0, ell = 0;
  int series_order = 10, recip_order = 12, eps_order = 4, dom_order = 12;
  int orders = 5, digits = 10, vbound = 0, mmin = 4;
  std::string tol_str = "1/1000000000", range_str, out_path;
  bool symbolic = false, json = false;

  auto *gen = app.add_subcommand("gen", "construct a digraph, print dgm text");
  gen->require_subcommand(1);
  auto *gen_gmpq = gen->add_subcommand("gmpq", "complete on m vertices plus an attached vertex");
  gen_gmpq->add_option("-m,--m", mval)->required();
  gen_gmpq->add_option("-p,--p", pval, "out-edges of the attached vertex")->required();
  gen_gmpq->add_option("-q,--q", qval, "in-edges of the attached vertex")->required();
  auto *gen_ml = gen->add_subcommand("ml", "near-complete member with ell attachment edges");
  gen_ml->add_option("-m,--m", mval)->required();
  gen_ml->add_option("--ell", ell)->required();
  auto *gen_star = gen->add_subcommand("star", "saturated star with s edges");
  gen_star->add_option("-s,--s", sval)->required();

  auto *walks = app.add_subcommand("walks", "count walks with n edges in a dgm digraph");
  walks->add_option("--in", in_path, "dgm file (default: stdin)");
  walks->add_option("-n,--n", nval, "walk length in edges")->required();

  auto *series = app.add_subcommand("series", "walk generating series of a dgm digraph");
  series->add_option("--in", in_path, "dgm file (default: stdin)");
  series->add_option("--order", series_order, "series order");
  series->add_flag("--symbolic", symbolic,
                   "treat the input as a family seed; print the symbolic series in m");

  auto *rho = app.add_subcommand("rho", "certified spectral radius of a dgm digraph");
  rho->add_option("--in", in_path, "dgm file (default: stdin)");
  rho->add_option("--digits", digits, "significant digits");
  rho->add_option("--tol", tol_str, "certification tolerance (rational or decimal)");

  auto *recip = app.add_subcommand("reciprocity", "verify the complement-series identity");
  recip->add_option("--in", in_path, "dgm file (default: stdin)");
  recip->add_option("--order", recip_order, "orders to check");

  auto *expand = app.add_subcommand("expand", "dominant-pole expansions of a family seed");
  expand->require_subcommand(1);
  auto *expand_eps = expand->add_subcommand("eps", "symbolic expansion in eps = 1/(m+1)");
  expand_eps->add_option("--in", in_path, "seed dgm file (default: stdin)");
  expand_eps->add_option("--order", eps_order, "expansion order");
  auto *expand_fit = expand->add_subcommand("fit", "certified integer Laurent fit in 1/m");
  expand_fit->add_option("--in", in_path, "seed dgm file (default: stdin)");
  expand_fit->add_option("--orders", orders, "number of 1/m coefficients");
  expand_fit->add_option("--m-range", range_str, "sample values A..B")->required();

  auto *search = app.add_subcommand("search", "exhaustive desk-scale searches");
  search->require_subcommand(1);
  auto *sb = search->add_subcommand("backelin", "maximize walks of length 2 at s edges");
  sb->add_option("-s,--s", sval)->required();
  sb->add_option("--vbound", vbound, "vertex cap (default min(s+1,7))");
  sb->add_flag("--json", json);
  auto *sp = search->add_subcommand("pdi", "partition-shaped near-complete members");
  sp->add_option("-m,--m", mval)->required();
  sp->add_option("-s,--s", sval)->required();
  auto *se = search->add_subcommand("exhaustive", "maximize rho over all (n,k) digraphs");
  se->add_option("-n,--n", nval)->required();
  se->add_option("-k,--k", kval)->required();
  se->add_option("--tol", tol_str, "certification tolerance");
  se->add_flag("--json", json);
  auto *sd = search->add_subcommand("dominance", "saturated-star coefficient dominance");
  sd->add_option("-m,--m", mval)->required();
  sd->add_option("-s,--s", sval)->required();
  sd->add_option("--order", dom_order, "orders to check");
  sd->add_flag("--json", json);

  auto *certify = app.add_subcommand("certify", "no-crossing certificates");
  certify->require_subcommand(1);
  auto *cs6 = certify->add_subcommand("s6", "the two s=6 family poles never cross");
  cs6->add_option("--mmin", mmin, "left end of the certified range");

  auto *table = app.add_subcommand("table", "CSV emission");
  table->require_subcommand(1);
  auto *td = table->add_subcommand("diffe", "s=6 pole difference r1(m) - r2(m)");
  td->add_option("--m-range", range_str, "integer range A..B")->required();
  td->add_option("--out", out_path, "output CSV file (default: stdout)");

  std::vector<const char *> cargv;
  cargv.push_back("specrad");
  for (const auto &a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError &e) {
    std::ostringstream perr;
    int code = app.exit(e, out, perr);
    res.exit_code = code == 0 ? 0 : 2;
    res.output = out.str();
    res.diagnostics = perr.str();
    return res;
  }

  try {
    if (gen_gmpq->parsed()) {
      out << to_dgm(make_gmpq(mval, pval, qval));
    } else if (gen_ml->parsed()) {
      out << to_dgm(make_ml(mval, ell));
    } else if (gen_star->parsed()) {
      out << to_dgm(saturated_star(sval));
    } else if (walks->parsed()) {
      Digraph A = load_digraph(in_path, in);
      if (nval < 0) throw std::runtime_error("walk length must be nonnegative");
      out << walk_count(A, nval).get_str() << "\n";
    } else if (series->parsed()) {
      Digraph A = load_digraph(in_path, in);
      if (symbolic) {
        RatFnM H = family_series_symbolic(A);
        out << "num: " << to_string(H.num) << "\n";
        out << "den: " << to_string(H.den) << "\n";
      } else {
        WalkSeries ws = walk_series(A, series_order);
        for (size_t i = 0; i < ws.chi.size(); ++i)
          out << "chi_" << i << ": " << ws.chi[i].get_str() << "\n";
      }
    } else if (rho->parsed()) {
      Digraph A = load_digraph(in_path, in);
      SpectralResult r = spectral_radius(A, parse_rat(tol_str));
      out << r.decimal(digits) << "\n";
      err << "pole: " << r.pole_method << "; check: " << r.check_method << "\n";
    } else if (recip->parsed()) {
      Digraph A = load_digraph(in_path, in);
      std::vector<Rat> defect = reciprocity_defect(A, recip_order);
      bool clean = true;
      std::ostringstream witness;
      for (size_t k = 0; k < defect.size(); ++k)
        if (sgn(defect[k]) != 0) {
          clean = false;
          witness << "defect at order " << k << ": " << defect[k].get_str() << "\n";
        }
      if (!clean) throw Violation{"reciprocity defect nonzero\n" + witness.str()};
      out << "reciprocity defect is zero through order " << recip_order << "\n";
    } else if (expand_eps->parsed()) {
      Digraph A = load_digraph(in_path, in);
      PoleProblem P = pole_problem_from_family(A);
      out << "s: " << P.s.get_str() << "\n";
      out << "c: " << P.c.get_str() << "\n";
      out << "A: " << to_string(P.A()) << "\n";
      out << "B: " << to_string(P.B()) << "\n";
      EpsilonExpansion e = epsilon_expansion(P, eps_order);
      for (size_t i = 0; i < e.w.size(); ++i)
        out << "w" << (i + 1) << ": " << e.w[i].get_str() << "\n";
      std::vector<Rat> d = to_inverse_m(e, eps_order);
      for (size_t j = 0; j < d.size(); ++j)
        out << "d" << (j + 1) << ": " << d[j].get_str() << "\n";
    } else if (expand_fit->parsed()) {
      Digraph A = load_digraph(in_path, in);
      auto [a, b] = parse_range(range_str);
      std::vector<int> samples;
      for (int m = a; m <= b; ++m) samples.push_back(m);
      LaurentFit fit = laurent_fit(FamilySpec(A), orders, samples);
      for (size_t j = 0; j < fit.coeffs.size(); ++j)
        out << "d" << (j + 1) << ": " << fit.coeffs[j].get_str() << "\n";
      for (size_t j = 0; j < fit.residual_bounds.size(); ++j)
        out << "residual_bound" << (j + 1) << ": " << fit.residual_bounds[j].get_str() << "\n";
    } else if (sb->parsed()) {
      int vb = sb->count("--vbound") ? vbound : std::min(sval + 1, 7);
      SearchReport rep = backelin_argmax(sval, vb);
      out << report_out(rep, json);
      report_stats(err, rep);
    } else if (sp->parsed()) {
      std::vector<Digraph> members = enumerate_pdi(mval, sval);
      out << "count: " << members.size() << "\n";
      for (const auto &g : members) out << to_dgm(g);
    } else if (se->parsed()) {
      SearchReport rep = exhaustive_rho_max(nval, kval, parse_rat(tol_str));
      out << report_out(rep, json);
      report_stats(err, rep);
    } else if (sd->parsed()) {
      SearchReport rep = dominance_check(mval, sval, dom_order);
      out << report_out(rep, json);
      report_stats(err, rep);
      if (!rep.violations.empty())
        throw Violation{std::to_string(rep.violations.size()) + " dominance violation(s) found"};
    } else if (cs6->parsed()) {
      FamilySpec famA{saturated_star(6)}, famB{s6_second_seed()};
      NoCrossingCertificate cert = no_crossing_certificate(famA, famB, mmin);
      out << cert.to_text();
      if (!cert.granted) throw Violation{"certificate refused: " + cert.detail};
    } else if (td->parsed()) {
      auto [a, b] = parse_range(range_str);
      FamilySpec famA{saturated_star(6)}, famB{s6_second_seed()};
      std::ostringstream csv;
      csv << "m,r1,r2,diff\n";
      const int sig = 12;
      for (int m = a; m <= b; ++m) {
        RootBracket r1 = family_pole(famA, m, Rat(1, 1 << 30));
        RootBracket r2 = family_pole(famB, m, Rat(1, 1 << 30));
        std::string s1 = bracket_decimal(r1, sig);
        std::string s2 = bracket_decimal(r2, sig);
        std::string sd_str;
        for (int iter = 0; iter < 500; ++iter) {
          Rat dlo = r1.lo - r2.hi, dhi = r1.hi - r2.lo;
          if (sgn(dlo) == sgn(dhi) && fixed_digits(dlo, sig) == fixed_digits(dhi, sig)) {
            sd_str = fixed_digits(dlo, sig);
            break;
          }
          refine_bracket(r1, r1.width() / 16);
          refine_bracket(r2, r2.width() / 16);
        }
        if (sd_str.empty())
          throw std::runtime_error("difference did not settle at 12 digits for m = " +
                                   std::to_string(m));
        csv << m << "," << s1 << "," << s2 << "," << sd_str << "\n";
      }
      if (out_path.empty()) {
        out << csv.str();
      } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open output file '" + out_path + "'");
        f << csv.str();
        err << "wrote " << (b - a + 1) << " rows to " << out_path << "\n";
      }
    }
    res.exit_code = 0;
  } catch (const Violation &v) {
    err << v.message << "\n";
    res.exit_code = 1;
  } catch (const std::exception &ex) {
    err << "error: " << ex.what() << "\n";
    res.exit_code = 2;
  }

  res.output = out.str();
  res.diagnostics = err.str();
  return res;
}

}  // namespace specrad
