#include <doctest.h>

#include <set>

#include "polysnake/enumerate.hpp"
#include "polysnake/gf_catalog.hpp"
#include "polysnake/series.hpp"
#include "polysnake/lattice.hpp"
#include "polysnake/verify.hpp"

using namespace polysnake;

TEST_CASE("snake totals match the reference table up to n=10") {
  const auto& expected = snake_counts_reference();
  for (int n = 1; n <= 10; ++n) CHECK(enumerate_snakes(2, n) == expected[n - 1]);
}

TEST_CASE("every snake is visited exactly once and is a snake") {
  std::set<CellSet> seen;
  for_each_snake(2, 6, {}, [&](const CellSet& s) {
    CHECK(is_snake(s));
    CHECK(s.size() == 6);
    CHECK(seen.insert(s).second);
  });
  CHECK(seen.size() == 82);
}

TEST_CASE("pds counts match the generating function") {
  auto coeffs = expand_coefficients(gf_pds_2d(), 10);
  for (int n = 0; n <= 10; ++n)
    CHECK(BigInt(count_pds(2, n)) == coeffs[n]);
  CHECK(count_pds(2, 5) == 32);
  CHECK(enumerate_snakes(2, 5) == 34);

  auto coeffs3 = expand_coefficients(gf_pds_3d(), 7);
  for (int n = 0; n <= 7; ++n)
    CHECK(BigInt(count_pds(3, n)) == coeffs3[n]);
  CHECK(count_pds(3, 4) == 45);
}

TEST_CASE("kiss-free counts") {
  // a kiss needs a 6-step detour around the touching corner, so every snake
  // with at most 6 cells is kiss-free and the first kissers appear at n = 7
  for (int n = 1; n <= 6; ++n)
    CHECK(count_kiss_free(n) == enumerate_snakes(2, n));
  CHECK(count_kiss_free(7) < enumerate_snakes(2, 7));
}

TEST_CASE("inscribed table") {
  CountTable table = inscribed_pds_table(6);
  // 1 x k rectangles hold exactly the vertical bar
  for (int k = 1; k <= 6; ++k)
    CHECK(table[StatKey{1, k, k, 0}] == 1);
  // the four L-triominoes in a 2x2 box
  CHECK(table[StatKey{2, 2, 3, 0}] == 4);
  // nothing below n = b + k - 1
  for (const auto& [key, count] : table) {
    CHECK(key.n >= key.b + key.k - 1);
    CHECK(count > 0);
  }
  // sums over (b,k) reproduce the totals
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t total = 0;
    for (const auto& [key, count] : table)
      if (key.n == n) total += count;
    CHECK(total == count_pds(2, n));
  }
}

TEST_CASE("bubble oracle") {
  CountTable b2 = bubble_table(2, 9);
  // minimal bubble: height 3, length 5, half-perimeter 3
  CHECK(b2[StatKey{2, 3, 5, 3}] == 1);
  // one bubble per extra height, always half-perimeter 3
  CHECK(b2[StatKey{2, 4, 6, 3}] == 1);
  CHECK(b2[StatKey{2, 5, 7, 3}] == 1);
  CHECK(b2.size() == 5);  // heights 3..7 within n <= 9

  CountTable b3 = bubble_table(3, 9);
  std::uint64_t n7 = 0;
  for (const auto& [key, count] : b3)
    if (key.n == 7) n7 += count;
  CHECK(n7 == 1);  // the minimal width-3 bubble
}

TEST_CASE("crossing oracle") {
  CountTable c2 = crossing_table(2, 6);
  CHECK(c2.size() == 1);
  CHECK(c2[StatKey{2, 1, 2, 0}] == 1);

  CountTable c3 = crossing_table(3, 8);
  for (int k = 1; k <= 6; ++k) CHECK(c3[StatKey{3, k, k + 2, 0}] == 1);
  CHECK(c3.size() == 6);

  CountTable c4 = crossing_table(4, 7);
  CHECK(c4[StatKey{4, 1, 4, 0}] == 1);  // the smallest width-4 crossing
}

TEST_CASE("ending oracle") {
  // width 3, finish on column 2: the bare hook and its taller versions
  CountTable e32 = ending_table(3, 2, 6);
  for (int k = 1; k <= 5; ++k) CHECK(e32[StatKey{3, k, k + 1, 0}] == 1);
  CHECK(e32.size() == 5);
  CHECK_THROWS_AS(ending_table(3, 3, 5), std::invalid_argument);
}

namespace {

// A partially directed shape avoids two consecutive north steps iff some
// monotone traversal has no two consecutive y-increments.
bool in_no_double_north_class(const CellSet& s) {
  CellPath path = snake_path(s);
  if (path.size() <= 1) return true;
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<Cell> seq = path.cells();
    if (dir == 1) std::reverse(seq.begin(), seq.end());
    bool monotone = true, double_north = false;
    for (std::size_t i = 1; i < seq.size(); ++i) {
      if (seq[i].x[1] < seq[i - 1].x[1]) monotone = false;
      if (i >= 2 && seq[i].x[1] == seq[i - 1].x[1] + 1 &&
          seq[i - 1].x[1] == seq[i - 2].x[1] + 1)
        double_north = true;
    }
    if (monotone && !double_north) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("partition classes match their generating functions") {
  auto s1 = expand_coefficients(gf_s1_2d(), 10);
  auto s2 = expand_coefficients(gf_s2_2d(gf_pds_2d()), 10);
  for (int n = 1; n <= 10; ++n) {
    std::uint64_t class1 = 0, pds = 0;
    for_each_snake(2, n, {}, [&](const CellSet& s) {
      if (!is_pds_shape(s)) return;
      ++pds;
      if (in_no_double_north_class(s)) ++class1;
    });
    CHECK(BigInt(class1) == s1[n]);
    CHECK(BigInt(pds - class1) == s2[n]);
  }
}

TEST_CASE("deterministic results for any worker count") {
  EnumOptions serial;
  serial.workers = 1;
  EnumOptions parallel;
  parallel.workers = 3;
  std::vector<CellSet> order1, order3;
  for_each_snake(2, 8, serial, [&](const CellSet& s) { order1.push_back(s); });
  for_each_snake(2, 8, parallel, [&](const CellSet& s) { order3.push_back(s); });
  CHECK(order1 == order3);
}

TEST_CASE("memory guard") {
  EnumOptions tiny;
  tiny.memory_budget = 512;
  CHECK_THROWS_AS(enumerate_snakes(2, 9, tiny), BudgetError);
}

TEST_CASE("4D sanity: three-cell snakes") {
  CHECK(enumerate_snakes(4, 2) == 4);
  CHECK(enumerate_snakes(4, 3) == 28);
  CHECK(count_pds(4, 3) == 22);
  auto coeffs = expand_coefficients(gf_pds_nd({4}), 5);
  for (int n = 0; n <= 5; ++n) CHECK(BigInt(count_pds(4, n)) == coeffs[n]);
}
