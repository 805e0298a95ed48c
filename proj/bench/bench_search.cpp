// Benchmark: parallel search kernels against their serial reference
// implementations.  Each pair must produce byte-identical reports (timing
// fields are not part of the report text); the benchmark fails loudly if
// they diverge.

#include <chrono>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "specrad/extremal.hpp"

namespace {

double wall_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

template <typename F>
double timed(F &&f, std::string &text) {
  double t0 = wall_seconds();
  specrad::SearchReport rep = f();
  double t1 = wall_seconds();
  text = rep.to_text();
  return t1 - t0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"search kernel benchmark: serial reference vs parallel"};
  int s = 6;
  int vbound = 6;
  int n = 4;
  int k = 13;
  int repeat = 1;
  app.add_option("-s", s, "edge count for the walk-of-length-2 search");
  app.add_option("--vbound", vbound, "vertex bound for the walk-of-length-2 search");
  app.add_option("-n", n, "vertex count for the exhaustive rho search");
  app.add_option("-k", k, "edge count for the exhaustive rho search");
  app.add_option("--repeat", repeat, "repetitions per kernel (best time reported)");
  CLI11_PARSE(app, argc, argv);

  const specrad::Rat tol(specrad::Int(1), specrad::Int(1000000000));
  int failures = 0;

  auto run_pair = [&](const std::string &name, auto serial, auto parallel) {
    std::string serial_text, parallel_text;
    double best_serial = -1.0, best_parallel = -1.0;
    for (int r = 0; r < repeat; ++r) {
      std::string txt;
      double ts = timed(serial, txt);
      if (r == 0) serial_text = txt;
      if (best_serial < 0 || ts < best_serial) best_serial = ts;
      double tp = timed(parallel, txt);
      if (r == 0) parallel_text = txt;
      if (best_parallel < 0 || tp < best_parallel) best_parallel = tp;
    }
    bool same = serial_text == parallel_text;
    if (!same) ++failures;
    std::cout << name << ": serial " << best_serial << " s, parallel " << best_parallel
              << " s, speedup " << (best_parallel > 0 ? best_serial / best_parallel : 0.0)
              << "x, reports " << (same ? "identical" : "DIFFER") << "\n";
    if (!same) {
      std::cout << "--- serial ---\n" << serial_text << "--- parallel ---\n" << parallel_text;
    }
  };

  run_pair(
      "backelin(s=" + std::to_string(s) + ", vbound=" + std::to_string(vbound) + ")",
      [&] { return specrad::backelin_argmax_serial(s, vbound); },
      [&] { return specrad::backelin_argmax(s, vbound); });
  run_pair(
      "exhaustive_rho(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")",
      [&] { return specrad::exhaustive_rho_max_serial(n, k, tol); },
      [&] { return specrad::exhaustive_rho_max(n, k, tol); });

  return failures == 0 ? 0 : 1;
}
