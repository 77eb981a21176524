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

#include "polysnake/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

namespace polysnake {

std::uint64_t default_memory_budget() {
  if (const char* env = std::getenv("POLYSNAKE_MEMORY_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 2ull << 30;  // 2 GiB of stored cell sets
}

namespace {

// Growth state for one DFS over snake paths rooted at the origin. The grid
// is a dense occupancy array of side 2n+1 per axis, so every neighbour probe
// stays in bounds.
class PathDfs {
 public:
  PathDfs(int dim, int n) : dim_(dim), n_(n), side_(2 * n + 1) {
    std::size_t total = 1;
    for (int i = 0; i < dim_; ++i) total *= side_;
    occ_.assign(total, 0);
    strides_[0] = 1;
    for (int i = 1; i < dim_; ++i) strides_[i] = strides_[i - 1] * side_;
    Cell origin{};
    for (int i = 0; i < dim_; ++i) origin.x[i] = static_cast<std::int16_t>(n_);
    path_.reserve(n);
    push(origin);
  }

  int dim() const { return dim_; }
  int depth() const { return static_cast<int>(path_.size()); }
  const std::vector<Cell>& path() const { return path_; }

  void push(const Cell& c) {
    path_.push_back(c);
    occ_[index(c)] = 1;
  }

  void pop() {
    occ_[index(path_.back())] = 0;
    path_.pop_back();
  }

  // A cell extends the snake iff it is free and its only occupied neighbour
  // is the current head.
  bool can_extend(const Cell& c) const {
    if (occ_[index(c)]) return false;
    int occupied = 0;
    for (int axis = 0; axis < dim_; ++axis) {
      Cell nb = c;
      nb.x[axis] = static_cast<std::int16_t>(c.x[axis] + 1);
      occupied += occ_[index(nb)];
      nb.x[axis] = static_cast<std::int16_t>(c.x[axis] - 1);
      occupied += occ_[index(nb)];
    }
    return occupied == 1;
  }

  // Canonical dedup key: cells translated to the origin, sorted, one byte
  // per coordinate.
  std::string canonical_key() const {
    std::array<std::int16_t, kMaxDim> min = path_[0].x;
    for (const Cell& c : path_)
      for (int i = 0; i < dim_; ++i) min[i] = std::min(min[i], c.x[i]);
    std::vector<Cell> normalized = path_;
    for (Cell& c : normalized)
      for (int i = 0; i < dim_; ++i)
        c.x[i] = static_cast<std::int16_t>(c.x[i] - min[i]);
    std::sort(normalized.begin(), normalized.end());
    std::string key;
    key.reserve(normalized.size() * dim_);
    for (const Cell& c : normalized)
      for (int i = 0; i < dim_; ++i) key.push_back(static_cast<char>(c.x[i]));
    return key;
  }

 private:
  std::size_t index(const Cell& c) const {
    std::size_t idx = 0;
    for (int i = 0; i < dim_; ++i) idx += static_cast<std::size_t>(c.x[i]) * strides_[i];
    return idx;
  }

  int dim_, n_, side_;
  std::array<std::size_t, kMaxDim> strides_{};
  std::vector<std::uint8_t> occ_;
  std::vector<Cell> path_;
};

void extend_all(PathDfs& dfs, int n, std::vector<std::string>& out) {
  if (dfs.depth() == n) {
    out.push_back(dfs.canonical_key());
    return;
  }
  const Cell head = dfs.path().back();
  for (int axis = 0; axis < dfs.dim(); ++axis) {
    for (int delta : {1, -1}) {
      Cell c = head;
      c.x[axis] = static_cast<std::int16_t>(head.x[axis] + delta);
      if (!dfs.can_extend(c)) continue;
      dfs.push(c);
      extend_all(dfs, n, out);
      dfs.pop();
    }
  }
}

// All oriented partial paths of exactly `depth` cells (cell sequences
// starting at the origin), used as deterministic work units.
std::vector<std::vector<Cell>> dfs_prefixes(int dim, int n, int depth) {
  PathDfs dfs(dim, n);
  std::vector<std::vector<Cell>> prefixes;
  std::function<void()> rec = [&]() {
    if (dfs.depth() == depth) {
      prefixes.push_back(dfs.path());
      return;
    }
    const Cell head = dfs.path().back();
    for (int axis = 0; axis < dfs.dim(); ++axis) {
      for (int delta : {1, -1}) {
        Cell c = head;
        c.x[axis] = static_cast<std::int16_t>(head.x[axis] + delta);
        if (!dfs.can_extend(c)) continue;
        dfs.push(c);
        rec();
        dfs.pop();
      }
    }
  };
  rec();
  return prefixes;
}

CellSet decode_key(const std::string& key, int dim, int n) {
  std::vector<Cell> cells(n);
  std::size_t pos = 0;
  for (int i = 0; i < n; ++i)
    for (int d = 0; d < dim; ++d)
      cells[i].x[d] = static_cast<std::int16_t>(key[pos++]);
  return CellSet(dim, std::move(cells));
}

}  // namespace

void for_each_snake(int dim, int n, const EnumOptions& opts,
                    const std::function<void(const CellSet&)>& visit) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("unsupported dimension");
  if (n < 1) throw std::invalid_argument("snake length must be >= 1");

  int workers = std::max(1, opts.workers);
  // Split the DFS prefix tree; depth 1 means a single sequential task.
  int prefix_depth = 1;
  if (workers > 1 && n > 4) prefix_depth = std::min(n - 1, 5);

  std::vector<std::vector<Cell>> prefixes = dfs_prefixes(dim, n, prefix_depth);
  std::vector<std::vector<std::string>> task_keys(prefixes.size());

  std::atomic<std::size_t> next_task{0};
  std::atomic<std::uint64_t> stored_bytes{0};
  std::atomic<bool> over_budget{false};
  const std::uint64_t per_key_overhead = 64;

  auto run_tasks = [&]() {
    for (;;) {
      std::size_t task = next_task.fetch_add(1);
      if (task >= prefixes.size() || over_budget.load()) return;
      PathDfs dfs(dim, n);
      for (std::size_t i = 1; i < prefixes[task].size(); ++i)
        dfs.push(prefixes[task][i]);
      extend_all(dfs, n, task_keys[task]);
      std::uint64_t bytes = 0;
      for (const auto& key : task_keys[task])
        bytes += key.size() + per_key_overhead;
      if (stored_bytes.fetch_add(bytes) + bytes > opts.memory_budget)
        over_budget.store(true);
    }
  };

  if (workers == 1) {
    run_tasks();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(run_tasks);
    for (auto& t : pool) t.join();
  }
  if (over_budget.load())
    throw BudgetError("snake enumeration exceeded the memory budget of " +
                      std::to_string(opts.memory_budget) + " bytes");

  // Merge in task order so the visit sequence is identical for any worker
  // count. Each canonical set appears at most twice (once per endpoint).
  std::unordered_set<std::string> seen;
  std::uint64_t merge_bytes = 0;
  for (const auto& keys : task_keys) {
    for (const auto& key : keys) {
      auto [it, inserted] = seen.insert(key);
      if (!inserted) continue;
      merge_bytes += key.size() + per_key_overhead;
      if (stored_bytes.load() + merge_bytes > opts.memory_budget)
        throw BudgetError("snake enumeration exceeded the memory budget of " +
                          std::to_string(opts.memory_budget) + " bytes");
      visit(decode_key(key, dim, n));
    }
  }
}

std::uint64_t enumerate_snakes(int dim, int n, const EnumOptions& opts) {
  std::uint64_t count = 0;
  for_each_snake(dim, n, opts, [&](const CellSet&) { ++count; });
  return count;
}

std::uint64_t count_pds(int dim, int n, const EnumOptions& opts) {
  if (n == 0) return 1;  // the empty snake
  std::uint64_t count = 0;
  for_each_snake(dim, n, opts, [&](const CellSet& s) {
    if (is_pds_shape(s)) ++count;
  });
  return count;
}

std::uint64_t count_kiss_free(int n, const EnumOptions& opts) {
  if (n == 0) return 1;
  std::uint64_t count = 0;
  for_each_snake(2, n, opts, [&](const CellSet& s) {
    if (is_kiss_free(s)) ++count;
  });
  return count;
}

CountTable inscribed_pds_table(int n_max, const EnumOptions& opts) {
  CountTable table;
  for (int n = 1; n <= n_max; ++n) {
    for_each_snake(2, n, opts, [&](const CellSet& s) {
      if (!is_pds_shape(s)) return;
      StatTriple st = classify_inscribed(s);
      ++table[StatKey{st.b, st.k, st.n, 0}];
    });
  }
  return table;
}

namespace {

// Endpoint cells (degree-1 under edge adjacency); a single cell reports
// itself twice.
std::vector<Cell> endpoints(const CellSet& s) {
  if (s.size() == 1) return {s.cells()[0], s.cells()[0]};
  std::vector<Cell> ends;
  for (const Cell& c : s.cells()) {
    int degree = 0;
    for (int axis = 0; axis < s.dim(); ++axis) {
      Cell nb = c;
      nb.x[axis] = static_cast<std::int16_t>(c.x[axis] + 1);
      degree += s.contains(nb);
      nb.x[axis] = static_cast<std::int16_t>(c.x[axis] - 1);
      degree += s.contains(nb);
    }
    if (degree == 1) ends.push_back(c);
  }
  return ends;
}

int count_in_column(const CellSet& s, int column) {
  int count = 0;
  for (const Cell& c : s.cells()) count += c.x[0] == column;
  return count;
}

}  // namespace

CountTable bubble_table(int r, int n_max, const EnumOptions& opts) {
  if (r < 2) throw std::invalid_argument("bubble width must be >= 2");
  CountTable table;
  for (int n = 1; n <= n_max; ++n) {
    for_each_snake(2, n, opts, [&](const CellSet& s) {
      StatTriple st = classify_inscribed(s);
      if (st.b != r) return;
      if (count_in_column(s, 0) != 2) return;
      auto ends = endpoints(s);
      if (ends.size() != 2 || ends[0].x[0] != 0 || ends[1].x[0] != 0) return;
      if (!is_pds_shape(s)) return;
      ++table[StatKey{r, st.k, st.n, st.w}];
    });
  }
  return table;
}

CountTable crossing_table(int b, int n_max, const EnumOptions& opts) {
  if (b < 2) throw std::invalid_argument("crossing width must be >= 2");
  CountTable table;
  for (int n = 1; n <= n_max; ++n) {
    for_each_snake(2, n, opts, [&](const CellSet& s) {
      StatTriple st = classify_inscribed(s);
      if (st.b != b) return;
      if (count_in_column(s, 0) != 1 || count_in_column(s, b - 1) != 1) return;
      auto ends = endpoints(s);
      if (ends.size() != 2) return;
      // Stacking orientation: tail in the left column on the bottom row.
      const Cell* tail = nullptr;
      const Cell* head = nullptr;
      for (const Cell& e : ends) {
        if (e.x[0] == 0) tail = &e;
        if (e.x[0] == b - 1) head = &e;
      }
      if (!tail || !head || tail->x[1] != 0) return;
      if (!is_pds_shape(s)) return;
      ++table[StatKey{b, st.k, st.n, 0}];
    });
  }
  return table;
}

CountTable ending_table(int b, int c, int n_max, const EnumOptions& opts) {
  if (!(1 < c && c < b)) throw std::invalid_argument("endings need 1 < c < b");
  CountTable table;
  for (int n = 1; n <= n_max; ++n) {
    for_each_snake(2, n, opts, [&](const CellSet& s) {
      StatTriple st = classify_inscribed(s);
      if (st.b > b - 1) return;  // must not reach the far side
      if (count_in_column(s, 0) != 1) return;
      auto ends = endpoints(s);
      if (ends.size() != 2) return;
      const Cell* tail = nullptr;
      const Cell* head = nullptr;
      for (const Cell& e : ends) {
        if (e.x[0] == 0 && !tail)
          tail = &e;
        else
          head = &e;
      }
      if (!tail || !head) return;
      if (tail->x[1] != 0) return;        // tail on the bottom row
      if (head->x[0] != c - 1) return;    // finish on column c
      if (!is_pds_shape(s)) return;
      ++table[StatKey{b, st.k, st.n, 0}];
    });
  }
  return table;
}

}  // namespace polysnake
