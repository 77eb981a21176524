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

#include "polysnake/bijection.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace polysnake {

int Bargraph::width() const {
  int w = 0;
  for (int r : rows) w = std::max(w, r);
  return w;
}

int Bargraph::cell_count() const {
  int n = 0;
  for (int r : rows) n += r;
  return n;
}

std::vector<Well> find_wells(const Bargraph& g) {
  for (int r : g.rows)
    if (r < 1) throw std::invalid_argument("bargraph rows must be positive");
  std::vector<Well> wells;
  const auto& rows = g.rows;
  int m = static_cast<int>(rows.size());
  int i = 1;
  while (i < m - 1) {
    if (rows[i] >= rows[i - 1]) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 < m && rows[j + 1] == rows[i]) ++j;
    if (j < m - 1 && rows[j + 1] > rows[i]) {
      wells.push_back(Well{i, j - i + 1, rows[i - 1], rows[i], rows[j + 1]});
    }
    i = j + 1;
  }
  return wells;
}

Bargraph stretch_wells(const Bargraph& g) {
  auto wells = find_wells(g);
  Bargraph out;
  out.rows.reserve(g.rows.size() + 2 * wells.size());
  std::size_t next_well = 0;
  for (int i = 0; i < static_cast<int>(g.rows.size()); ++i) {
    out.rows.push_back(g.rows[i]);
    if (next_well < wells.size() && wells[next_well].start_row == i) {
      out.rows.push_back(g.rows[i]);
      out.rows.push_back(g.rows[i]);
      ++next_well;
    }
  }
  return out;
}

bool is_bubble(const CellSet& s) {
  if (s.size() < 2 || s.dim() != 2) return false;
  if (!is_snake(s)) return false;
  int leftmost = 0;
  int width = 0;
  for (const Cell& c : s.cells()) {
    leftmost += c.x[0] == 0;
    width = std::max(width, c.x[0] + 1);
  }
  // Tail and head sit in the first column, every other cell to its right.
  if (leftmost != 2 || width < 2) return false;
  CellPath path = snake_path(s);
  return path.cells().front().x[0] == 0 && path.cells().back().x[0] == 0;
}

CellSet envelope(const Bargraph& g) {
  if (g.rows.empty()) throw std::invalid_argument("bargraph must be nonempty");
  // Bargraph cells at columns 1..len, rows 0..m-1; the wall sits at column 0.
  std::set<std::pair<int, int>> body;
  for (int y = 0; y < static_cast<int>(g.rows.size()); ++y)
    for (int x = 1; x <= g.rows[y]; ++x) body.insert({x, y});

  std::set<std::pair<int, int>> wrap;
  for (const auto& [x, y] : body) {
    for (int dx = -1; dx <= 1; ++dx) {
      for (int dy = -1; dy <= 1; ++dy) {
        std::pair<int, int> c{x + dx, y + dy};
        if (c.first < 1) continue;  // never crosses the wall
        if (!body.count(c)) wrap.insert(c);
      }
    }
  }

  std::vector<Cell> cells;
  cells.reserve(wrap.size());
  for (const auto& [x, y] : wrap)
    cells.push_back(Cell{{static_cast<std::int16_t>(x), static_cast<std::int16_t>(y)}});
  CellSet result(2, std::move(cells));
  if (!is_bubble(result))
    throw std::invalid_argument(
        "envelope is not a bubble snake; the bargraph has an unstretched well");
  return result;
}

CellSet bargraph_to_bubble(const Bargraph& g) {
  return envelope(stretch_wells(g));
}

Bargraph bubble_to_bargraph(const CellSet& s) {
  if (!is_bubble(s)) throw std::invalid_argument("cell set is not a bubble");
  StatTriple st = classify_inscribed(s);
  // Exterior flood over the region [0, b] x [-1, k], with the wall closing
  // the region to the left of column 0; the unflooded free cells are the
  // interior.
  auto inside = [&](int x, int y) {
    return x >= 0 && x <= st.b && y >= -1 && y <= st.k;
  };
  std::set<std::pair<int, int>> blocked;
  for (const Cell& c : s.cells()) blocked.insert({c.x[0], c.x[1]});

  std::set<std::pair<int, int>> exterior;
  std::vector<std::pair<int, int>> stack;
  auto seed = [&](int x, int y) {
    if (inside(x, y) && !blocked.count({x, y}) && exterior.insert({x, y}).second)
      stack.push_back({x, y});
  };
  for (int x = 0; x <= st.b; ++x) {
    seed(x, -1);
    seed(x, st.k);
  }
  for (int y = -1; y <= st.k; ++y) seed(st.b, y);
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    seed(x + 1, y);
    seed(x - 1, y);
    seed(x, y + 1);
    seed(x, y - 1);
  }

  // Interior cells, grouped into left-justified rows.
  std::vector<int> row_len;
  int first_row = -1;
  for (int y = 0; y < st.k; ++y) {
    int len = 0;
    bool any = false;
    for (int x = 0; x < st.b; ++x) {
      bool interior = !blocked.count({x, y}) && !exterior.count({x, y});
      if (interior) {
        any = true;
        if (x != len)
          throw std::invalid_argument("bubble interior is not left-justified");
        ++len;
      }
    }
    if (any) {
      if (first_row == -1) first_row = y;
      if (y - first_row != static_cast<int>(row_len.size()))
        throw std::invalid_argument("bubble interior rows are not contiguous");
      row_len.push_back(len);
    }
  }
  if (row_len.empty())
    throw std::invalid_argument("bubble has an empty interior");

  Bargraph stretched{row_len};
  // Undo the stretching: drop two rows from each well, which must have
  // height >= 3 in any valid bubble interior.
  std::set<int> drop;
  for (const Well& w : find_wells(stretched)) {
    if (w.height < 3)
      throw std::invalid_argument("bubble interior has a well of height < 3");
    drop.insert(w.start_row);
    drop.insert(w.start_row + 1);
  }
  Bargraph out;
  out.rows.reserve(stretched.rows.size());
  for (int i = 0; i < static_cast<int>(stretched.rows.size()); ++i)
    if (!drop.count(i)) out.rows.push_back(stretched.rows[i]);
  return out;
}

}  // namespace polysnake
