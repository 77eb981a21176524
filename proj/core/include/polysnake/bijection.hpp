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

#ifndef POLYSNAKE_BIJECTION_HPP
#define POLYSNAKE_BIJECTION_HPP

#include <vector>

#include "polysnake/lattice.hpp"

namespace polysnake {

/// Bargraph in the rotated frame: rows listed bottom to top, each row
/// left-justified against the wall at column 1. Characterized by its row
/// lengths; width is the longest row.
struct Bargraph {
  std::vector<int> rows;

  int width() const;
  int cell_count() const;
  friend bool operator==(const Bargraph&, const Bargraph&) = default;
  friend auto operator<=>(const Bargraph&, const Bargraph&) = default;
};

/// A maximal run of k equal rows of length h1 strictly shorter than both
/// flanking rows (h0 > h1 < h2).
struct Well {
  int start_row = 0;  // index of the first well row
  int height = 0;     // k, number of rows in the run
  int h0 = 0, h1 = 0, h2 = 0;
  friend bool operator==(const Well&, const Well&) = default;
};

/// All maximal wells, in bottom-to-top order.
std::vector<Well> find_wells(const Bargraph& g);

/// Inserts two extra rows of length h1 inside every well, so that every well
/// of the output has height >= 3. Well positions are unchanged.
Bargraph stretch_wells(const Bargraph& g);

/// The set of cells off the bargraph at Chebyshev distance 1, restricted to
/// columns >= 1 (nothing crosses the wall). Requires every well to have
/// height >= 3; throws std::invalid_argument when the result is not a valid
/// bubble (which indicates an unstretched well).
CellSet envelope(const Bargraph& g);

/// The full bijection: envelope after stretching. Maps bargraphs of width
/// h-1 onto bubbles of width h.
CellSet bargraph_to_bubble(const Bargraph& g);

/// Inverse: the interior of the bubble against the wall, with two rows
/// removed from each well. Throws std::invalid_argument when the cell set is
/// not a bubble.
Bargraph bubble_to_bargraph(const CellSet& s);

/// Bubble validity: a snake whose only two cells in the leftmost column are
/// its two endpoints.
bool is_bubble(const CellSet& s);

}  // namespace polysnake

#endif  // POLYSNAKE_BIJECTION_HPP
