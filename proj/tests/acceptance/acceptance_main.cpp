// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exits nonzero on any failure.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "polysnake/enumerate.hpp"
#include "polysnake/verify.hpp"

using namespace polysnake;

namespace {

struct Criterion {
  int id;
  std::string label;
  CheckResult result;
  double time_limit_seconds = 0.0;  // 0 = no limit
};

int g_failures = 0;

void report(const Criterion& c) {
  bool pass = c.result.pass;
  if (pass && c.time_limit_seconds > 0.0 && c.result.seconds > c.time_limit_seconds)
    pass = false;
  std::printf("[%s] criterion %2d: %s (%.1fs)\n", pass ? "PASS" : "FAIL", c.id,
              c.label.c_str(), c.result.seconds);
  if (!pass) {
    ++g_failures;
    if (!c.result.detail.empty())
      std::printf("        %s\n", c.result.detail.c_str());
    if (c.time_limit_seconds > 0.0 && c.result.seconds > c.time_limit_seconds)
      std::printf("        exceeded the %.0fs budget\n", c.time_limit_seconds);
  } else if (!c.result.detail.empty()) {
    std::printf("        %s\n", c.result.detail.c_str());
  }
  std::fflush(stdout);
}

}  // namespace

int main() {
  EnumOptions opts;
  opts.workers = 2;
  const std::uint64_t node_budget = 20'000'000'000ull;

  // 1. Table of snake totals, n <= 16; the n <= 12 subset must be fast.
  {
    CheckResult quick = check_table1(12, opts);
    CheckResult full = check_table1(16, opts);
    Criterion c{1, "snake totals s(1)..s(16), n<=12 within 10s, full within 600s",
                full, 600.0};
    if (quick.seconds > 10.0) {
      c.result.pass = false;
      c.result.detail = "n<=12 subset took " + std::to_string(quick.seconds) + "s";
    }
    if (!quick.pass) c.result = quick;
    report(c);
  }

  report({2, "2D series coefficients equal enumerated counts, n<=14",
          check_gf_2d_vs_oracle(14, opts)});
  report({3, "3D series coefficients equal enumerated counts, n<=10",
          check_gf_3d_vs_oracle(10, opts)});
  report({4, "N-dimensional specializations (N=2,3 exact; N=4 vs oracle, n<=8)",
          check_nd_specialization(8, opts)});
  report({5, "partition identities S1+S2=PDS for N=2..5, exact",
          check_partition_identities(5)});
  report({6, "closed forms: single-axis counts n<=60; root sums 2<=n<=30",
          check_closed_forms(60, 30)});
  report({7, "inscribed families vs enumeration, b<=5, k<=6, n<=14",
          check_inscribed_master(5, 6, 14, opts), 300.0});
  report({8, "bubble series vs enumeration and fixed point, n<=14",
          check_bubbles(4, 14, opts)});
  report({9, "bijection: round trips, injectivity, widths h<=5",
          check_bijection(8, 4, 5, 12, opts)});
  report({10, "extremal lengths: formula, conjecture grid 6x6, general excess",
          check_extremal(6, node_budget, 2, 64), 900.0});
  report({11, "determinism for worker counts 1, 2, 8",
          check_determinism({1, 2, 8}, 16, 14, 6, node_budget)});

  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", g_failures);
  return 1;
}
