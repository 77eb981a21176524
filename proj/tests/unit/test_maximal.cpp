#include <doctest.h>

#include "polysnake/maximal.hpp"

using namespace polysnake;

TEST_CASE("formula for maximal inscribed PDS length") {
  CHECK(formula_max_pds(1, 1) == 1);
  CHECK(formula_max_pds(2, 3) == 5);
  CHECK(formula_max_pds(3, 3) == 7);
  CHECK(formula_max_pds(4, 4) == 11);
}

TEST_CASE("single rows and columns") {
  for (SnakeClass cls : {SnakeClass::pds, SnakeClass::kiss_free, SnakeClass::general}) {
    SearchResult r = max_snake_length({5, 1, cls, 1'000'000, 1});
    CHECK(r.n_max == 5);
    CHECK(r.status == SearchStatus::proven);
  }
}

TEST_CASE("small rectangles") {
  // the 2x2 square tetromino has a cycle, so 3 is maximal
  CHECK(max_snake_length({2, 2, SnakeClass::kiss_free, 1'000'000, 1}).n_max == 3);
  CHECK(max_snake_length({2, 2, SnakeClass::general, 1'000'000, 1}).n_max == 3);
  // A north-monotone snake occupies one contiguous run per row and
  // consecutive runs share exactly one column, so at most b+1 cells fit in
  // any two consecutive rows: the 4x4 maximum is 10, not the formula's 11.
  // Confirmed independently by exhaustive enumeration of inscribed shapes.
  CHECK(max_snake_length({4, 4, SnakeClass::pds, 10'000'000, 1}).n_max == 10);
  CHECK(max_snake_length({3, 2, SnakeClass::pds, 1'000'000, 1}).n_max == 4);
  CHECK(max_snake_length({4, 3, SnakeClass::pds, 10'000'000, 1}).n_max == 9);
}

TEST_CASE("maximal monotone snakes follow the row-run bound") {
  for (int b = 1; b <= 4; ++b) {
    for (int k = 1; k <= 4; ++k) {
      int expected = (b + 1) * (k / 2) + (k % 2 ? b : 0);
      CHECK(max_snake_length({b, k, SnakeClass::pds, 100'000'000, 1}).n_max ==
            expected);
    }
  }
}

TEST_CASE("witnesses are inscribed snakes of their class") {
  for (SnakeClass cls : {SnakeClass::pds, SnakeClass::kiss_free, SnakeClass::general}) {
    SearchSpec spec{4, 3, cls, 10'000'000, 1};
    SearchResult r = max_snake_length(spec);
    CHECK(r.status == SearchStatus::proven);
    CHECK(r.witness.is_valid_snake_path());
    CHECK(r.witness.size() == r.n_max);
    CellSet shape = r.witness.to_cell_set();
    StatTriple st = classify_inscribed(shape);
    CHECK(st.b == 4);
    CHECK(st.k == 3);
    if (cls == SnakeClass::pds) CHECK(is_pds_shape(shape));
    if (cls == SnakeClass::kiss_free) CHECK(is_kiss_free(shape));
  }
}

TEST_CASE("budget exhaustion is reported distinctly") {
  SearchResult r = max_snake_length({5, 5, SnakeClass::general, 10, 1});
  CHECK(r.status == SearchStatus::budget_exhausted);
}

TEST_CASE("search results are deterministic across worker counts") {
  for (SnakeClass cls : {SnakeClass::pds, SnakeClass::kiss_free, SnakeClass::general}) {
    SearchResult serial = max_snake_length({4, 4, cls, 100'000'000, 1});
    SearchResult parallel = max_snake_length({4, 4, cls, 100'000'000, 4});
    CHECK(serial.n_max == parallel.n_max);
    CHECK(serial.witness.cells() == parallel.witness.cells());
  }
}

TEST_CASE("containments hold on a small report") {
  ConjectureReport report = conjecture_report(4, 4, 100'000'000, 2);
  for (const ConjectureRow& row : report.rows) {
    CHECK(row.general.n_max >= row.kiss_free.n_max);
    CHECK(row.general.n_max >= row.pds.n_max);
    int run_bound = (row.b + 1) * (row.k / 2) + (row.k % 2 ? row.b : 0);
    CHECK(row.pds.n_max == run_bound);
    CHECK(row.kiss_free_matches_formula);
  }
  CHECK(report.conjecture_holds);
}
