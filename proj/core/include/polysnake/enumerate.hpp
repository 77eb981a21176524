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

#ifndef POLYSNAKE_ENUMERATE_HPP
#define POLYSNAKE_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>

#include "polysnake/lattice.hpp"

namespace polysnake {

/// Raised when an enumeration or search would exceed its configured budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t default_memory_budget();  // honors POLYSNAKE_MEMORY_BUDGET

struct EnumOptions {
  int workers = 1;
  std::uint64_t memory_budget = default_memory_budget();
};

/// Count key; unused fields stay zero. Meaning per table:
///   inscribed: (b,k,n); bubbles: (b=r,k,n,w); crossings/endings: (b,k,n).
struct StatKey {
  int b = 0, k = 0, n = 0, w = 0;
  auto operator<=>(const StatKey&) const = default;
};

using CountTable = std::map<StatKey, std::uint64_t>;

/// Visits every fixed non-oriented snake of n cells exactly once, as a
/// translation-normalized CellSet. Snakes are grown as paths by depth-first
/// search from a root cell and deduplicated through canonical cell-set
/// hashing. Work is split deterministically over DFS prefixes; results are
/// identical for any worker count. Throws BudgetError when the dedup store
/// would exceed the memory budget.
void for_each_snake(int dim, int n, const EnumOptions& opts,
                    const std::function<void(const CellSet&)>& visit);

/// Number of fixed non-oriented snakes of n cells.
std::uint64_t enumerate_snakes(int dim, int n, const EnumOptions& opts = {});

/// Number of fixed snakes of n cells admitting a partially directed
/// traversal; n = 0 counts the empty snake as 1.
std::uint64_t count_pds(int dim, int n, const EnumOptions& opts = {});

/// Number of kiss-free snakes of n cells (dim 2).
std::uint64_t count_kiss_free(int n, const EnumOptions& opts = {});

/// (b,k,n) -> number of fixed 2D PDS of length n with bounding box exactly
/// b x k, for all n <= n_max. Zero counts are omitted from the table.
CountTable inscribed_pds_table(int n_max, const EnumOptions& opts = {});

/// Bubbles of width exactly r: snakes whose only two cells in the leftmost
/// column are the two path endpoints. Keyed by (b=r, k, n, w) where w is the
/// horizontal half-perimeter.
CountTable bubble_table(int r, int n_max, const EnumOptions& opts = {});

/// Crossings of width b in the stacking orientation: the single cell in the
/// leftmost column is an endpoint on the bottom row and the single cell in
/// column b is the other endpoint. Keyed by (b, k, n).
CountTable crossing_table(int b, int n_max, const EnumOptions& opts = {});

/// Endings for a rectangle of width b finishing on column c (1 < c < b):
/// the single cell in the leftmost column is an endpoint on the bottom row,
/// the other endpoint lies in column c, and no cell reaches column b.
/// Keyed by (b, k, n).
CountTable ending_table(int b, int c, int n_max, const EnumOptions& opts = {});

}  // namespace polysnake

#endif  // POLYSNAKE_ENUMERATE_HPP
