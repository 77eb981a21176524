/*
   Copyright 2026 The polysnake authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef POLYSNAKE_VERIFY_HPP
#define POLYSNAKE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polysnake/enumerate.hpp"

namespace polysnake {

struct CheckResult {
  std::string name;
  bool pass = false;
  bool budget_exhausted = false;
  std::string detail;  // on failure: a compact JSON diff of the first mismatch
  double seconds = 0.0;
};

/// Reference values frozen from the literature.
const std::vector<std::uint64_t>& snake_counts_reference();  // s(1)..s(16)

CheckResult check_table1(int n_max, const EnumOptions& opts);
CheckResult check_gf_2d_vs_oracle(int n_max, const EnumOptions& opts);
CheckResult check_gf_3d_vs_oracle(int n_max, const EnumOptions& opts);
CheckResult check_nd_specialization(int n4_max, const EnumOptions& opts);
CheckResult check_partition_identities(int max_dim);
CheckResult check_closed_forms(int x1plus_n_max, int numeric_n_max);
CheckResult check_inscribed_master(int b_max, int k_max, int n_max,
                                   const EnumOptions& opts);
CheckResult check_bubbles(int r_max, int n_max, const EnumOptions& opts);
CheckResult check_bijection(int max_cells, int max_width, int oracle_width_max,
                            int oracle_n_max, const EnumOptions& opts);
/// Conjecture grid up to bk_max, plus (when hunt_area_limit > 0) a hunt for
/// a general snake longer than the formula over rectangles of growing area.
CheckResult check_extremal(int bk_max, std::uint64_t node_budget, int workers,
                           int hunt_area_limit);
/// Re-runs the enumeration, the inscribed oracle and the extremal report
/// with each listed worker count and verifies identical outputs.
CheckResult check_determinism(const std::vector<int>& worker_counts,
                              int table1_n_max, int inscribed_n_max,
                              int report_bk, std::uint64_t node_budget);

struct VerifyOptions {
  bool full = false;  // quick: n<=12, b<=4, 5x5; full: n<=16, b<=5, 6x6
  int workers = 1;
  std::uint64_t memory_budget = default_memory_budget();
  std::uint64_t node_budget = 50'000'000'000ull;
};

/// The end-to-end verification pipeline; one entry per check.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace polysnake

#endif  // POLYSNAKE_VERIFY_HPP
