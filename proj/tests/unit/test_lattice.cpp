#include <doctest.h>

#include <stdexcept>

#include "polysnake/lattice.hpp"

using namespace polysnake;

namespace {

CellSet cells2(std::initializer_list<std::pair<int, int>> list) {
  std::vector<Cell> cells;
  for (auto [x, y] : list)
    cells.push_back(Cell{{static_cast<std::int16_t>(x), static_cast<std::int16_t>(y)}});
  return CellSet(2, std::move(cells));
}

}  // namespace

TEST_CASE("cell sets normalize translation and order") {
  CellSet a = cells2({{5, 7}, {6, 7}, {6, 8}});
  CellSet b = cells2({{0, 0}, {1, 0}, {1, 1}});
  CHECK(a == b);
  CHECK_THROWS_AS(cells2({{0, 0}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("snake recognition") {
  CHECK(is_snake(cells2({{0, 0}})));
  CHECK(is_snake(cells2({{0, 0}, {1, 0}, {2, 0}})));
  CHECK(is_snake(cells2({{0, 0}, {1, 0}, {1, 1}})));
  // 2x2 square has a cycle
  CHECK_FALSE(is_snake(cells2({{0, 0}, {1, 0}, {0, 1}, {1, 1}})));
  // T-tetromino has a degree-3 cell
  CHECK_FALSE(is_snake(cells2({{0, 1}, {1, 1}, {2, 1}, {1, 0}})));
  // disconnected pair
  CHECK_FALSE(is_snake(cells2({{0, 0}, {2, 0}})));
}

TEST_CASE("snake path extraction") {
  CellSet l_shape = cells2({{0, 0}, {0, 1}, {1, 1}});
  CellPath path = snake_path(l_shape);
  CHECK(path.size() == 3);
  CHECK(path.is_valid_snake_path());
  CHECK_THROWS_AS(snake_path(cells2({{0, 0}, {1, 0}, {0, 1}, {1, 1}})),
                  std::invalid_argument);
}

TEST_CASE("partially directed shapes in 2D") {
  // straight rows and columns always qualify
  CHECK(is_pds_shape(cells2({{0, 0}, {1, 0}, {2, 0}, {3, 0}})));
  CHECK(is_pds_shape(cells2({{0, 0}, {0, 1}, {0, 2}})));
  // all six triomino snakes are partially directed
  CHECK(is_pds_shape(cells2({{0, 0}, {1, 0}, {1, 1}})));
  // the width-3 arch needs a south step from either end
  CHECK_FALSE(is_pds_shape(cells2({{0, 0}, {0, 1}, {1, 1}, {2, 1}, {2, 0}})));
  // the width-3 valley is its mirror
  CHECK_FALSE(is_pds_shape(cells2({{0, 1}, {0, 0}, {1, 0}, {2, 0}, {2, 1}})));
  // single cell
  CHECK(is_pds_shape(cells2({{0, 0}})));
}

TEST_CASE("partially directed shapes in higher dimensions") {
  // bent in two monotone axes: never partially directed
  std::vector<Cell> bent = {Cell{{0, 1, 0, 0}}, Cell{{0, 0, 0, 0}}, Cell{{0, 0, 1, 0}}};
  CHECK_FALSE(is_pds_shape(CellSet(3, bent)));
  // bent with the free axis involved: fine
  std::vector<Cell> ok = {Cell{{1, 0, 0, 0}}, Cell{{0, 0, 0, 0}}, Cell{{0, 1, 0, 0}}};
  CHECK(is_pds_shape(CellSet(3, ok)));
}

TEST_CASE("kiss detection") {
  // straight row never kisses
  CHECK(is_kiss_free(cells2({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}})));
  // corner contact between head and body
  CellSet kissing = cells2({{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 2}});
  CHECK(is_kiss_free(kissing));  // bracket shape: antidiagonal cells present
  CellSet spiral = cells2({{0, 1}, {0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {1, 2}});
  // head (0,1) corner-touches (1,2) with (1,1) and (0,2) empty
  CHECK_FALSE(is_kiss_free(spiral));
}

TEST_CASE("inscription statistics") {
  StatTriple single = classify_inscribed(cells2({{0, 0}}));
  CHECK(single.b == 1);
  CHECK(single.k == 1);
  CHECK(single.n == 1);

  StatTriple l_shape = classify_inscribed(cells2({{0, 0}, {0, 1}, {1, 1}}));
  CHECK(l_shape.b == 2);
  CHECK(l_shape.k == 2);
  CHECK(l_shape.n == 3);

  StatTriple row = classify_inscribed(cells2({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}}));
  CHECK(row.b == 5);
  CHECK(row.k == 1);
  CHECK(row.n == 5);
}

TEST_CASE("horizontal half-perimeter counts vertical runs") {
  // minimal bubble: two single-cell runs in column 0, one run in column 1
  CellSet bubble = cells2({{0, 0}, {1, 0}, {1, 1}, {1, 2}, {0, 2}});
  CHECK(horizontal_half_perimeter(bubble) == 3);
  // straight column: one run
  CHECK(horizontal_half_perimeter(cells2({{0, 0}, {0, 1}, {0, 2}})) == 1);
  // straight row: one run per column
  CHECK(horizontal_half_perimeter(cells2({{0, 0}, {1, 0}, {2, 0}})) == 3);
}

TEST_CASE("cell set json round trip") {
  CellSet s = cells2({{0, 0}, {1, 0}, {1, 1}});
  CHECK(CellSet::from_json(s.to_json()) == s);
}
