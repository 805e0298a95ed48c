#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "specrad/cli.hpp"
#include "specrad/digraph.hpp"

using namespace specrad;

namespace {

CommandResult run(const std::vector<std::string> &args, const std::string &stdin_text = "") {
  std::istringstream in(stdin_text);
  return run_command(args, in);
}

long lines(const std::string &s) { return std::count(s.begin(), s.end(), '\n'); }

const char *kStar9 =
    "5\n"
    "11111\n"
    "10000\n"
    "10000\n"
    "10000\n"
    "10000\n";

const char *kStar6 =
    "4\n"
    "1111\n"
    "1000\n"
    "1000\n"
    "0000\n";

const char *kFib = "2\n11\n10\n";

}  // namespace

TEST_CASE("gen prints dgm text") {
  CommandResult r = run({"gen", "gmpq", "-m", "5", "-p", "2", "-q", "1"});
  CHECK(r.exit_code == 0);
  CHECK(r.output == "6\n111111\n111110\n111110\n111110\n111110\n110000\n");
  CHECK(r.diagnostics.empty());

  CHECK(run({"gen", "star", "-s", "9"}).output == to_dgm(saturated_star(9)));
  CHECK(run({"gen", "ml", "-m", "5", "--ell", "7"}).output == to_dgm(make_ml(5, 7)));

  SUBCASE("construction errors exit 2 with a message") {
    CommandResult bad = run({"gen", "gmpq", "-m", "5", "-p", "6", "-q", "0"});
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.empty());
    CHECK(bad.diagnostics == "error: make_gmpq: p and q must be in [0,m]\n");
  }
}

TEST_CASE("walks reads dgm from stdin or a file") {
  CommandResult r = run({"walks", "-n", "2"}, kStar9);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "29\n");

  SUBCASE("--in file") {
    const char *path = "/tmp/specrad_cli_in.dgm";
    {
      std::ofstream f(path);
      f << kStar9;
    }
    CHECK(run({"walks", "--in", path, "-n", "2"}).output == "29\n");
    std::remove(path);
    CommandResult miss = run({"walks", "--in", "/tmp/specrad_cli_missing.dgm", "-n", "2"});
    CHECK(miss.exit_code == 2);
    CHECK(miss.diagnostics.find("cannot open input file") != std::string::npos);
  }

  SUBCASE("bad input exits 2") {
    CommandResult neg = run({"walks", "-n", "-1"}, kStar9);
    CHECK(neg.exit_code == 2);
    CHECK(neg.diagnostics == "error: walk length must be nonnegative\n");
    CommandResult garbage = run({"walks", "-n", "2"}, "garbage");
    CHECK(garbage.exit_code == 2);
    CHECK(garbage.diagnostics.find("dgm parse") != std::string::npos);
  }
}

TEST_CASE("series prints walk coefficients or the symbolic family form") {
  CommandResult r = run({"series", "--order", "4"}, "2\n11\n11\n");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "chi_0: 1\nchi_1: 2\nchi_2: 4\nchi_3: 8\nchi_4: 16\n");

  CommandResult sym = run({"series", "--symbolic"}, kStar6);
  CHECK(sym.exit_code == 0);
  CHECK(sym.output ==
        "num: (1) + (1)*t + (-2)*t^2\n"
        "den: (1) + (-m)*t + (3 - m)*t^2 + (-6 + 2*m)*t^3\n");
}

TEST_CASE("rho prints certified decimals") {
  CommandResult r = run({"rho"}, "3\n111\n111\n111\n");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "3\n");
  CHECK(r.diagnostics ==
        "pole: rational root of det(I-tM), certified smallest positive; check: exact arithmetic\n");

  CommandResult fib = run({"rho"}, kFib);
  CHECK(fib.output == "1.618033988\n");  // ten significant digits by default
  CHECK(fib.diagnostics ==
        "pole: Sturm isolation + rational bisection of det(I-tM); check: reciprocal bracket, "
        "width within tolerance\n");
  CHECK(run({"rho", "--digits", "12"}, kFib).output == "1.61803398874\n");

  SUBCASE("tolerance accepts rational, decimal, and scientific forms") {
    CHECK(run({"rho", "--tol", "1/1000000"}, kFib).output == "1.618033988\n");
    CHECK(run({"rho", "--tol", "0.000001"}, kFib).output == "1.618033988\n");
    CHECK(run({"rho", "--tol", "1e-12"}, kFib).output == "1.618033988\n");
    CHECK(run({"rho", "--tol", "0"}, kFib).exit_code == 2);
    CHECK(run({"rho", "--tol", "abc"}, kFib).exit_code == 2);
  }
}

TEST_CASE("reciprocity reports the verified order") {
  CommandResult r = run({"reciprocity"}, kStar9);
  CHECK(r.exit_code == 0);
  CHECK(r.output == "reciprocity defect is zero through order 12\n");
  CHECK(run({"reciprocity", "--order", "20"}, kStar9).output ==
        "reciprocity defect is zero through order 20\n");
}

TEST_CASE("expand eps prints the symbolic pole expansion") {
  CommandResult r = run({"expand", "eps"}, kStar6);
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "s: 6\n"
        "c: 14\n"
        "A: 1 + t - 2*t^2\n"
        "B: 26 - 28*t\n"
        "w1: 0\n"
        "w2: 6\n"
        "w3: -14\n"
        "w4: 98\n"
        "d1: 1\n"
        "d2: -1\n"
        "d3: 7\n"
        "d4: -33\n");
}

TEST_CASE("expand fit prints certified Laurent coefficients") {
  CommandResult r = run({"expand", "fit", "--orders", "5", "--m-range", "40..60"}, kStar6);
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("d1: 1\nd2: -1\nd3: 7\nd4: -33\nd5: 191\n", 0) == 0);
  CHECK(r.output.find("residual_bound5: ") != std::string::npos);
  CHECK(lines(r.output) == 10);

  SUBCASE("insufficient sample precision exits 2") {
    CommandResult bad = run({"expand", "fit", "--orders", "6", "--m-range", "40..46"}, kStar6);
    CHECK(bad.exit_code == 2);
    CHECK(bad.diagnostics == "error: expansion order too high for sample precision\n");
  }

  SUBCASE("the m-range option is required") {
    CHECK(run({"expand", "fit", "--orders", "5"}, kStar6).exit_code == 2);
  }
}

TEST_CASE("search backelin") {
  CommandResult r = run({"search", "backelin", "-s", "3"});
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "universe: edge subsets of size 3 on 4 labeled vertices (C(16,3) = 560)\n"
        "count_examined: 560\n"
        "value_exact: true\n"
        "value_int: 5\n"
        "value_lo: 5\n"
        "value_hi: 5\n"
        "argmax_count: 1\n"
        "argmax[0]: 2/01/11\n"
        "note[0]: vertex bound 4 is a heuristic cap, not a proof: the enumeration is exhaustive "
        "only over digraphs with at most 4 non-isolated vertices\n");
  // timing stays on the diagnostic stream so stdout is deterministic
  CHECK(r.output.find("elapsed") == std::string::npos);
  CHECK(r.diagnostics.find("elapsed: ") != std::string::npos);
  CHECK(r.diagnostics.find("threads: ") != std::string::npos);

  SUBCASE("json form") {
    CommandResult j = run({"search", "backelin", "-s", "3", "--json"});
    nlohmann::json doc = nlohmann::json::parse(j.output);
    CHECK(doc["value_int"] == "5");
    CHECK(doc["argmax"][0] == "2\n01\n11\n");
    CHECK(doc["universe"] == "edge subsets of size 3 on 4 labeled vertices (C(16,3) = 560)");
  }
}

TEST_CASE("search pdi lists the members") {
  CommandResult r = run({"search", "pdi", "-m", "4", "-s", "3"});
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("count: 3\n", 0) == 0);
  CHECK(lines(r.output) == 1 + 3 * 6);  // count line plus three 5-vertex dgm blocks
}

TEST_CASE("search exhaustive") {
  CommandResult nine = run({"search", "exhaustive", "-n", "3", "-k", "9"});
  CHECK(nine.exit_code == 0);
  CHECK(nine.output.find("value_exact: true\n") != std::string::npos);
  CHECK(nine.output.find("value_int: 3\n") != std::string::npos);

  CommandResult seven = run({"search", "exhaustive", "-n", "3", "-k", "7"});
  CHECK(seven.output.find("value_exact: false\n") != std::string::npos);
  CHECK(seven.output.find("argmax_count: 4\n") != std::string::npos);

  SUBCASE("json form") {
    CommandResult j = run({"search", "exhaustive", "-n", "3", "-k", "7", "--json"});
    nlohmann::json doc = nlohmann::json::parse(j.output);
    CHECK(doc["value_exact"] == false);
    CHECK(doc["argmax"].size() == 4);
  }
}

TEST_CASE("search dominance") {
  CommandResult r = run({"search", "dominance", "-m", "12", "-s", "7"});
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("value_int: 0\n") != std::string::npos);

  CommandResult exceptional = run({"search", "dominance", "-m", "12", "-s", "4"});
  CHECK(exceptional.exit_code == 2);
  CHECK(exceptional.diagnostics.find("exceptional case") != std::string::npos);
}

TEST_CASE("certify s6") {
  CommandResult r = run({"certify", "s6"});
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("granted: true\n") != std::string::npos);
  CHECK(r.output.find("sign: -1\n") != std::string::npos);
  CHECK(r.output.find("resultant_m: 82 - 41*m + 5*m^2\n") != std::string::npos);

  SUBCASE("a critical point on the interval edge is a refusal, exit 1") {
    CommandResult refused = run({"certify", "s6", "--mmin", "3"});
    CHECK(refused.exit_code == 1);
    CHECK(refused.output.find("granted: false\n") != std::string::npos);
    CHECK(refused.diagnostics.find("certificate refused") != std::string::npos);
  }
}

TEST_CASE("table diffe emits truncated 12-digit CSV") {
  CommandResult r = run({"table", "diffe", "--m-range", "4..10"});
  CHECK(r.exit_code == 0);
  REQUIRE(lines(r.output) == 8);
  std::istringstream is(r.output);
  std::string line;
  std::getline(is, line);
  CHECK(line == "m,r1,r2,diff");
  std::getline(is, line);
  CHECK(line == "4,0.242430976435,0.245300269041,-0.00286929260594");
  // the star pole stays below the competitor on the whole sampled range
  while (std::getline(is, line)) CHECK(line.find(",-") != std::string::npos);

  SUBCASE("--out writes the same rows to a file") {
    const char *path = "/tmp/specrad_cli_diffe.csv";
    CommandResult w = run({"table", "diffe", "--m-range", "4..10", "--out", path});
    CHECK(w.exit_code == 0);
    CHECK(w.output.empty());
    CHECK(w.diagnostics == std::string("wrote 7 rows to ") + path + "\n");
    std::ifstream f(path);
    std::ostringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == r.output);
    std::remove(path);
  }

  SUBCASE("range validation") {
    CHECK(run({"table", "diffe", "--m-range", "10..4"}).exit_code == 2);
    CommandResult bad = run({"table", "diffe", "--m-range", "garbage"});
    CHECK(bad.exit_code == 2);
    CHECK(bad.diagnostics.find("range must look like A..B") != std::string::npos);
  }
}

TEST_CASE("exit codes and determinism") {
  CHECK(run({"nosuch"}).exit_code == 2);
  CHECK(run({}).exit_code == 2);
  CHECK(run({"gen", "gmpq", "-m", "5"}).exit_code == 2);  // missing required options

  CommandResult help = run({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.output.find("specrad") != std::string::npos);

  SUBCASE("repeated runs are byte-identical on stdout") {
    CHECK(run({"search", "exhaustive", "-n", "3", "-k", "7"}).output ==
          run({"search", "exhaustive", "-n", "3", "-k", "7"}).output);
    CHECK(run({"rho"}, kFib).output == run({"rho"}, kFib).output);
  }
}
