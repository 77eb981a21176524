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

#include "polysnake/lattice.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace polysnake {

CellSet::CellSet(int dim, std::vector<Cell> cells) : dim_(dim), cells_(std::move(cells)) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("unsupported dimension");
  if (cells_.empty()) return;
  Cell min = cells_.front();
  for (const Cell& c : cells_)
    for (int i = 0; i < dim_; ++i) min.x[i] = std::min(min.x[i], c.x[i]);
  for (Cell& c : cells_)
    for (int i = 0; i < dim_; ++i) c.x[i] = static_cast<std::int16_t>(c.x[i] - min.x[i]);
  std::sort(cells_.begin(), cells_.end());
  if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end())
    throw std::invalid_argument("duplicate cells in cell set");
}

bool CellSet::contains(const Cell& c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

std::string CellSet::to_json() const {
  nlohmann::json j;
  j["dim"] = dim_;
  nlohmann::json cells = nlohmann::json::array();
  for (const Cell& c : cells_) {
    nlohmann::json coords = nlohmann::json::array();
    for (int i = 0; i < dim_; ++i) coords.push_back(c.x[i]);
    cells.push_back(std::move(coords));
  }
  j["cells"] = std::move(cells);
  return j.dump();
}

CellSet CellSet::from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  int dim = j.at("dim").get<int>();
  std::vector<Cell> cells;
  for (const auto& coords : j.at("cells")) {
    Cell c;
    for (int i = 0; i < dim && i < static_cast<int>(coords.size()); ++i)
      c.x[i] = coords.at(i).get<std::int16_t>();
    cells.push_back(c);
  }
  return CellSet(dim, std::move(cells));
}

bool cells_adjacent(const Cell& a, const Cell& b, int dim) {
  int dist = 0;
  for (int i = 0; i < dim; ++i) dist += std::abs(a.x[i] - b.x[i]);
  return dist == 1;
}

bool CellPath::is_valid_snake_path() const {
  for (std::size_t i = 1; i < cells_.size(); ++i)
    if (!cells_adjacent(cells_[i - 1], cells_[i], dim_)) return false;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    for (std::size_t j = i + 1; j < cells_.size(); ++j) {
      if (cells_[i] == cells_[j]) return false;
      if (j > i + 1 && cells_adjacent(cells_[i], cells_[j], dim_)) return false;
    }
  }
  return true;
}

std::string CellPath::to_json() const {
  nlohmann::json j;
  j["dim"] = dim_;
  nlohmann::json cells = nlohmann::json::array();
  for (const Cell& c : cells_) {
    nlohmann::json coords = nlohmann::json::array();
    for (int i = 0; i < dim_; ++i) coords.push_back(c.x[i]);
    cells.push_back(std::move(coords));
  }
  j["cells"] = std::move(cells);
  return j.dump();
}

namespace {

// Adjacency lists under edge contact; indices into s.cells().
std::vector<std::vector<int>> adjacency(const CellSet& s) {
  const auto& cells = s.cells();
  std::vector<std::vector<int>> adj(cells.size());
  for (int i = 0; i < s.size(); ++i) {
    for (int axis = 0; axis < s.dim(); ++axis) {
      Cell nb = cells[i];
      nb.x[axis] = static_cast<std::int16_t>(nb.x[axis] + 1);
      auto it = std::lower_bound(cells.begin(), cells.end(), nb);
      if (it != cells.end() && *it == nb) {
        int j = static_cast<int>(it - cells.begin());
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  return adj;
}

}  // namespace

bool is_snake(const CellSet& s) {
  if (s.size() == 0) return false;
  if (s.size() == 1) return true;
  auto adj = adjacency(s);
  int degree_one = 0;
  std::size_t edges = 0;
  for (const auto& nbrs : adj) {
    if (nbrs.size() > 2) return false;
    if (nbrs.size() == 1) ++degree_one;
    edges += nbrs.size();
  }
  if (degree_one != 2 || edges != 2 * (s.cells().size() - 1)) return false;
  // Path graph: connected follows from n-1 edges and no vertex above degree
  // 2 only if there is no cycle component; walk from one endpoint instead.
  std::vector<char> seen(s.size(), 0);
  int cur = 0;
  while (adj[cur].size() != 1) ++cur;
  int visited = 0;
  int prev = -1;
  while (true) {
    seen[cur] = 1;
    ++visited;
    int next = -1;
    for (int nb : adj[cur])
      if (nb != prev && !seen[nb]) next = nb;
    if (next == -1) break;
    prev = cur;
    cur = next;
  }
  return visited == s.size();
}

CellPath snake_path(const CellSet& s) {
  if (!is_snake(s)) throw std::invalid_argument("cell set is not a snake");
  const auto& cells = s.cells();
  if (s.size() == 1) return CellPath(s.dim(), {cells[0]});
  auto adj = adjacency(s);
  std::vector<int> ends;
  for (int i = 0; i < s.size(); ++i)
    if (adj[i].size() == 1) ends.push_back(i);
  int start = std::min(ends[0], ends[1]);  // cells are sorted, so lex-least end
  std::vector<Cell> order;
  order.reserve(cells.size());
  int prev = -1, cur = start;
  while (true) {
    order.push_back(cells[cur]);
    int next = -1;
    for (int nb : adj[cur])
      if (nb != prev) next = nb;
    if (next == -1) break;
    prev = cur;
    cur = next;
  }
  return CellPath(s.dim(), std::move(order));
}

namespace {

bool traversal_is_monotone(const std::vector<Cell>& seq, int dim) {
  for (std::size_t i = 1; i < seq.size(); ++i)
    for (int axis = 1; axis < dim; ++axis)
      if (seq[i].x[axis] < seq[i - 1].x[axis]) return false;
  return true;
}

}  // namespace

bool is_pds_shape(const CellSet& s) {
  CellPath path = snake_path(s);
  if (path.size() <= 1) return true;
  std::vector<Cell> seq = path.cells();
  if (traversal_is_monotone(seq, s.dim())) return true;
  std::reverse(seq.begin(), seq.end());
  return traversal_is_monotone(seq, s.dim());
}

bool is_kiss_free(const CellSet& s) {
  if (s.dim() != 2) throw std::invalid_argument("kiss detection is 2D only");
  for (const Cell& c : s.cells()) {
    // c as the lower-left corner of a 2x2 window.
    for (int dx = -1; dx <= 0; ++dx) {
      for (int dy = -1; dy <= 0; ++dy) {
        Cell ll{{static_cast<std::int16_t>(c.x[0] + dx),
                 static_cast<std::int16_t>(c.x[1] + dy)}};
        Cell lr{{static_cast<std::int16_t>(ll.x[0] + 1), ll.x[1]}};
        Cell ul{{ll.x[0], static_cast<std::int16_t>(ll.x[1] + 1)}};
        Cell ur{{lr.x[0], ul.x[1]}};
        bool in_ll = s.contains(ll), in_lr = s.contains(lr);
        bool in_ul = s.contains(ul), in_ur = s.contains(ur);
        if (in_ll && in_ur && !in_lr && !in_ul) return false;
        if (in_lr && in_ul && !in_ll && !in_ur) return false;
      }
    }
  }
  return true;
}

StatTriple classify_inscribed(const CellSet& s) {
  StatTriple st;
  st.n = s.size();
  if (s.size() == 0) return st;
  std::array<int, kMaxDim> max{0, 0, 0, 0};
  for (const Cell& c : s.cells())
    for (int i = 0; i < s.dim(); ++i) max[i] = std::max(max[i], (int)c.x[i]);
  st.b = max[0] + 1;
  st.k = s.dim() >= 2 ? max[1] + 1 : 1;
  if (s.dim() == 2) st.w = horizontal_half_perimeter(s);
  return st;
}

int horizontal_half_perimeter(const CellSet& s) {
  if (s.dim() != 2) throw std::invalid_argument("half-perimeter is 2D only");
  // Cells are sorted by (x, y): a run begins wherever the cell below is
  // absent, i.e. at a jump within a column.
  int runs = 0;
  const auto& cells = s.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i == 0 || cells[i - 1].x[0] != cells[i].x[0] ||
        cells[i - 1].x[1] + 1 != cells[i].x[1])
      ++runs;
  }
  return runs;
}

}  // namespace polysnake
