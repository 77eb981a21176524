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

#ifndef POLYSNAKE_MAXIMAL_HPP
#define POLYSNAKE_MAXIMAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polysnake/lattice.hpp"

namespace polysnake {

enum class SnakeClass { pds, kiss_free, general };

std::string to_string(SnakeClass cls);
SnakeClass snake_class_from_string(const std::string& name);

struct SearchSpec {
  int b = 1;
  int k = 1;
  SnakeClass cls = SnakeClass::general;
  std::uint64_t node_budget = 50'000'000'000ull;
  int workers = 1;
};

enum class SearchStatus { proven, budget_exhausted };

struct SearchResult {
  int n_max = 0;
  CellPath witness;      // lexicographically least maximal cell sequence
  SearchStatus status = SearchStatus::proven;
  std::uint64_t nodes = 0;
};

/// Exact maximum length over snakes inscribed in (bounding box exactly)
/// b x k that satisfy the class predicate, with one witness path. The DFS
/// grows snake paths clipped to the rectangle; branches are cut by a
/// reachable-free-cells bound and by incremental class checks (a kiss window
/// test on the windows around each added cell; the monotone test for PDS).
/// Requires b*k <= 64. Budget exhaustion is reported in the result status,
/// distinctly from a proven optimum.
SearchResult max_snake_length(const SearchSpec& spec);

/// floor((b+1)(k+1)/2) - 1, the maximal inscribed PDS length.
int formula_max_pds(int b, int k);

struct ConjectureRow {
  int b = 0, k = 0;
  int formula = 0;
  SearchResult pds, kiss_free, general;
  bool kiss_free_matches_formula = false;
  bool general_exceeds_formula = false;
};

struct ConjectureReport {
  std::vector<ConjectureRow> rows;  // b-major order, b <= b_max, k <= k_max
  bool conjecture_holds = true;     // kiss-free max == formula everywhere
  bool found_general_excess = false;
  int excess_b = 0, excess_k = 0;   // smallest-area witness of an excess
};

/// Tabulates formula / max PDS / max kiss-free / max general over the grid
/// of rectangles, flags every kiss-free mismatch and the smallest case where
/// a general snake beats the formula. Containment between classes is checked
/// and a violation throws std::logic_error.
ConjectureReport conjecture_report(int b_max, int k_max,
                                   std::uint64_t node_budget, int workers = 1);

}  // namespace polysnake

#endif  // POLYSNAKE_MAXIMAL_HPP
