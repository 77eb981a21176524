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

#ifndef POLYSNAKE_LATTICE_HPP
#define POLYSNAKE_LATTICE_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace polysnake {

inline constexpr int kMaxDim = 4;

/// Lattice cell; coordinates beyond the active dimension stay zero.
struct Cell {
  std::array<std::int16_t, kMaxDim> x{0, 0, 0, 0};

  auto operator<=>(const Cell&) const = default;
};

/// Set of lattice cells, translation-normalized so the coordinate-wise
/// minimum is the origin and stored sorted. Two CellSets are equal iff the
/// polyominoes are equal up to translation (fixed-polyomino convention).
class CellSet {
 public:
  CellSet() = default;
  /// Normalizes (translates and sorts) and rejects duplicate cells.
  CellSet(int dim, std::vector<Cell> cells);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(cells_.size()); }
  const std::vector<Cell>& cells() const { return cells_; }
  bool contains(const Cell& c) const;

  friend bool operator==(const CellSet&, const CellSet&) = default;
  friend auto operator<=>(const CellSet&, const CellSet&) = default;

  /// {"dim":D,"cells":[[x,y,...],...]} using dim coordinates per cell.
  std::string to_json() const;
  static CellSet from_json(const std::string& json_text);

 private:
  int dim_ = 2;
  std::vector<Cell> cells_;  // sorted, min corner at origin
};

/// Ordered cell sequence. A valid snake path has unit steps, no repeated
/// cells, and no edge contact between non-consecutive cells (that is exactly
/// the degree <= 2, cycle-free condition).
class CellPath {
 public:
  CellPath() = default;
  CellPath(int dim, std::vector<Cell> cells) : dim_(dim), cells_(std::move(cells)) {}

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(cells_.size()); }
  const std::vector<Cell>& cells() const { return cells_; }

  bool is_valid_snake_path() const;
  CellSet to_cell_set() const { return CellSet(dim_, cells_); }

  std::string to_json() const;

 private:
  int dim_ = 2;
  std::vector<Cell> cells_;
};

/// Width (columns spanned), height (rows spanned), length, and horizontal
/// half-perimeter of a 2D object.
struct StatTriple {
  int b = 0;
  int k = 0;
  int n = 0;
  int w = 0;
};

bool cells_adjacent(const Cell& a, const Cell& b, int dim);

/// True iff the cells form a path graph under edge adjacency (no cycle,
/// every cell of degree at most two, connected).
bool is_snake(const CellSet& s);

/// The cell sequence from one degree-1 endpoint; throws std::invalid_argument
/// when the set is not a snake. The starting endpoint is the lexicographically
/// smaller of the two, so the result is canonical.
CellPath snake_path(const CellSet& s);

/// True iff some tail-to-head traversal never steps negatively along axes
/// 2..N (in 2D: north, east, west steps only). Single cells qualify.
/// Both endpoints are tried. Throws when the set is not a snake.
bool is_pds_shape(const CellSet& s);

/// 2D only: true iff no 2x2 window holds two snake cells on one diagonal
/// with the other diagonal entirely empty.
bool is_kiss_free(const CellSet& s);

/// Bounding-box statistics; a snake is inscribed in b x k iff its bounding
/// box is exactly b x k. The half-perimeter field is filled for dim 2.
StatTriple classify_inscribed(const CellSet& s);

/// Half the number of horizontal unit edges on the boundary, which equals
/// the total number of maximal vertical runs over all columns (dim 2).
int horizontal_half_perimeter(const CellSet& s);

}  // namespace polysnake

#endif  // POLYSNAKE_LATTICE_HPP
