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

#include "polysnake/maximal.hpp"

#include <atomic>
#include <bit>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace polysnake {

std::string to_string(SnakeClass cls) {
  switch (cls) {
    case SnakeClass::pds: return "pds";
    case SnakeClass::kiss_free: return "kiss-free";
    case SnakeClass::general: return "general";
  }
  return "?";
}

SnakeClass snake_class_from_string(const std::string& name) {
  if (name == "pds") return SnakeClass::pds;
  if (name == "kiss-free" || name == "kiss_free") return SnakeClass::kiss_free;
  if (name == "general" || name == "snake") return SnakeClass::general;
  throw std::invalid_argument("unknown snake class: " + name);
}

int formula_max_pds(int b, int k) {
  if (b < 1 || k < 1) throw std::invalid_argument("rectangle sides must be >= 1");
  return (b + 1) * (k + 1) / 2 - 1;
}

namespace {

using Mask = std::uint64_t;

struct Board {
  int b, k, cells;
  Mask full;
  Mask col_left, col_right, row_bottom, row_top;

  explicit Board(int b_, int k_) : b(b_), k(k_), cells(b_ * k_) {
    if (b < 1 || k < 1) throw std::invalid_argument("rectangle sides must be >= 1");
    if (cells > 64)
      throw std::invalid_argument("rectangle too large for the bitboard search");
    full = cells == 64 ? ~Mask(0) : (Mask(1) << cells) - 1;
    col_left = col_right = row_bottom = row_top = 0;
    for (int y = 0; y < k; ++y) {
      col_left |= Mask(1) << (y * b);
      col_right |= Mask(1) << (y * b + b - 1);
    }
    for (int x = 0; x < b; ++x) {
      row_bottom |= Mask(1) << x;
      row_top |= Mask(1) << ((k - 1) * b + x);
    }
  }

  Mask east(Mask m) const { return (m & ~col_right) << 1; }
  Mask west(Mask m) const { return (m & ~col_left) >> 1; }
  Mask north(Mask m) const { return (m << b) & full; }
  Mask south(Mask m) const { return m >> b; }
  Mask spread(Mask m) const { return east(m) | west(m) | north(m) | south(m); }

  // Free cells that already have two or more occupied neighbours can never
  // be added to this branch again.
  Mask dead(Mask occ) const {
    Mask a = east(occ), bb = west(occ), c = north(occ), d = south(occ);
    return (a & bb) | (a & c) | (a & d) | (bb & c) | (bb & d) | (c & d);
  }

  Mask flood(Mask seeds, Mask allowed) const {
    Mask r = seeds & allowed;
    for (;;) {
      Mask next = r | (spread(r) & allowed);
      if (next == r) return r;
      r = next;
    }
  }

  int x_of(int cell) const { return cell % b; }
  int y_of(int cell) const { return cell / b; }
};

struct BestEntry {
  int len = 0;
  std::vector<std::int8_t> seq;

  // Longer wins; ties go to the lexicographically smaller (x,y) sequence.
  bool offer(int n, const std::vector<std::int8_t>& cells, const Board& bd) {
    if (n < len) return false;
    if (n > len) {
      len = n;
      seq.assign(cells.begin(), cells.begin() + n);
      return true;
    }
    for (int i = 0; i < n; ++i) {
      auto key = [&](std::int8_t c) {
        return std::pair<int, int>(bd.x_of(c), bd.y_of(c));
      };
      if (key(cells[i]) < key(seq[i])) {
        seq.assign(cells.begin(), cells.begin() + n);
        return true;
      }
      if (key(seq[i]) < key(cells[i])) return false;
    }
    return false;
  }
};

struct SearchShared {
  std::atomic<int> best_len{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> exhausted{false};
  std::uint64_t budget = 0;
};

class Searcher {
 public:
  Searcher(const Board& bd, SnakeClass cls, SearchShared& shared)
      : bd_(bd), cls_(cls), shared_(shared) {
    path_.reserve(bd.cells);
  }

  void run_from(int start, BestEntry& best) {
    best_ = &best;
    path_.clear();
    path_.push_back(static_cast<std::int8_t>(start));
    dfs(Mask(1) << start, start, 1, touched_of(Mask(1) << start));
  }

 private:
  Mask touched_of(Mask occ) const {
    Mask t = 0;
    if (occ & bd_.col_left) t |= 1;
    if (occ & bd_.col_right) t |= 2;
    if (occ & bd_.row_bottom) t |= 4;
    if (occ & bd_.row_top) t |= 8;
    return t;
  }

  // Would adding `cell` create a kiss: some diagonal neighbour occupied with
  // both shared edge-neighbours empty.
  bool creates_kiss(Mask occ, int cell) const {
    int x = bd_.x_of(cell), y = bd_.y_of(cell);
    for (int dx : {-1, 1}) {
      for (int dy : {-1, 1}) {
        int nx = x + dx, ny = y + dy;
        if (nx < 0 || nx >= bd_.b || ny < 0 || ny >= bd_.k) continue;
        Mask diag = Mask(1) << (ny * bd_.b + nx);
        if (!(occ & diag)) continue;
        Mask anti1 = Mask(1) << (y * bd_.b + nx);
        Mask anti2 = Mask(1) << (ny * bd_.b + x);
        if (!(occ & anti1) && !(occ & anti2)) return true;
      }
    }
    return false;
  }

  void dfs(Mask occ, int head, int len, Mask touched) {
    std::uint64_t n = shared_.nodes.fetch_add(1, std::memory_order_relaxed);
    if (n >= shared_.budget) {
      shared_.exhausted.store(true, std::memory_order_relaxed);
      return;
    }

    if (touched == 0xF) {
      int cur = shared_.best_len.load(std::memory_order_relaxed);
      while (len > cur &&
             !shared_.best_len.compare_exchange_weak(cur, len,
                                                     std::memory_order_relaxed)) {
      }
      best_->offer(len, path_, bd_);
    }

    Mask free = bd_.full & ~occ;
    Mask allowed = free & ~bd_.dead(occ);
    Mask head_bit = Mask(1) << head;
    Mask reach = bd_.flood(bd_.spread(head_bit) & allowed, allowed);

    int bound = len + std::popcount(reach);
    if (bound < shared_.best_len.load(std::memory_order_relaxed)) return;
    // Untouched sides must still be reachable for the path to inscribe.
    Mask cover = occ | reach;
    if (!(touched & 1) && !(cover & bd_.col_left)) return;
    if (!(touched & 2) && !(cover & bd_.col_right)) return;
    if (!(touched & 4) && !(cover & bd_.row_bottom)) return;
    if (!(touched & 8) && !(cover & bd_.row_top)) return;

    int x = bd_.x_of(head), y = bd_.y_of(head);
    struct Move {
      int dx, dy;
    };
    static constexpr Move kMoves[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (const Move& mv : kMoves) {
      if (cls_ == SnakeClass::pds && mv.dy < 0) continue;  // grow monotone
      int nx = x + mv.dx, ny = y + mv.dy;
      if (nx < 0 || nx >= bd_.b || ny < 0 || ny >= bd_.k) continue;
      int cell = ny * bd_.b + nx;
      Mask bit = Mask(1) << cell;
      if (occ & bit) continue;
      // Snake growth: the new cell's only occupied neighbour is the head.
      if ((bd_.spread(bit) & occ) != head_bit) continue;
      if (cls_ == SnakeClass::kiss_free && creates_kiss(occ, cell)) continue;
      path_.push_back(static_cast<std::int8_t>(cell));
      Mask ntouched = touched;
      if (bit & bd_.col_left) ntouched |= 1;
      if (bit & bd_.col_right) ntouched |= 2;
      if (bit & bd_.row_bottom) ntouched |= 4;
      if (bit & bd_.row_top) ntouched |= 8;
      dfs(occ | bit, cell, len + 1, ntouched);
      path_.pop_back();
      if (shared_.exhausted.load(std::memory_order_relaxed)) return;
    }
  }

  const Board& bd_;
  SnakeClass cls_;
  SearchShared& shared_;
  BestEntry* best_ = nullptr;
  std::vector<std::int8_t> path_;
};

}  // namespace

SearchResult max_snake_length(const SearchSpec& spec) {
  Board bd(spec.b, spec.k);
  SearchShared shared;
  shared.budget = spec.node_budget;

  int tasks = bd.cells;
  std::vector<BestEntry> task_best(tasks);
  std::atomic<int> next{0};
  auto worker = [&]() {
    Searcher searcher(bd, spec.cls, shared);
    for (;;) {
      int task = next.fetch_add(1);
      if (task >= tasks) return;
      searcher.run_from(task, task_best[task]);
    }
  };

  int workers = std::max(1, spec.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Deterministic merge across tasks, independent of scheduling.
  BestEntry best;
  for (const BestEntry& e : task_best)
    if (e.len > 0) best.offer(e.len, e.seq, bd);

  SearchResult result;
  result.n_max = best.len;
  result.nodes = shared.nodes.load();
  result.status = shared.exhausted.load() ? SearchStatus::budget_exhausted
                                          : SearchStatus::proven;
  std::vector<Cell> cells;
  cells.reserve(best.seq.size());
  for (std::int8_t c : best.seq)
    cells.push_back(Cell{{static_cast<std::int16_t>(bd.x_of(c)),
                          static_cast<std::int16_t>(bd.y_of(c))}});
  result.witness = CellPath(2, std::move(cells));
  return result;
}

ConjectureReport conjecture_report(int b_max, int k_max,
                                   std::uint64_t node_budget, int workers) {
  ConjectureReport report;
  for (int b = 1; b <= b_max; ++b) {
    for (int k = 1; k <= k_max; ++k) {
      ConjectureRow row;
      row.b = b;
      row.k = k;
      row.formula = formula_max_pds(b, k);
      row.pds = max_snake_length({b, k, SnakeClass::pds, node_budget, workers});
      row.kiss_free =
          max_snake_length({b, k, SnakeClass::kiss_free, node_budget, workers});
      row.general =
          max_snake_length({b, k, SnakeClass::general, node_budget, workers});

      if (row.general.n_max < row.kiss_free.n_max ||
          row.general.n_max < row.pds.n_max)
        throw std::logic_error("class containment violated by search results");
      CellSet pds_shape = row.pds.witness.to_cell_set();
      if (is_kiss_free(pds_shape) && row.kiss_free.n_max < row.pds.n_max)
        throw std::logic_error("kiss-free maximum below a kiss-free PDS witness");

      row.kiss_free_matches_formula = row.kiss_free.n_max == row.formula;
      row.general_exceeds_formula = row.general.n_max > row.formula;
      if (!row.kiss_free_matches_formula) report.conjecture_holds = false;
      report.rows.push_back(std::move(row));
    }
  }
  // Flag the smallest violating rectangle, ordered by area then (b,k).
  for (const ConjectureRow& row : report.rows) {
    if (!row.general_exceeds_formula) continue;
    if (!report.found_general_excess ||
        std::tuple(row.b * row.k, row.b, row.k) <
            std::tuple(report.excess_b * report.excess_k, report.excess_b,
                       report.excess_k)) {
      report.found_general_excess = true;
      report.excess_b = row.b;
      report.excess_k = row.k;
    }
  }
  return report;
}

}  // namespace polysnake
