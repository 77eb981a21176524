#include <doctest.h>

#include <stdexcept>

#include "polysnake/gf_catalog.hpp"
#include "polysnake/series.hpp"

using namespace polysnake;

TEST_CASE("North-East snakes are Fibonacci") {
  auto coeffs = expand_coefficients(gf_sne(), 12);
  CHECK(coeffs[0] == 1);
  CHECK(coeffs[1] == 1);
  CHECK(coeffs[5] == 8);
  for (int n = 2; n <= 12; ++n) CHECK(coeffs[n] == coeffs[n - 1] + coeffs[n - 2]);
}

TEST_CASE("partition classes add up to the full 2D series") {
  RationalGF pds = gf_pds_2d();
  RationalGF sum = gf_s1_2d() + gf_s2_2d(pds);
  CHECK(sum.equals(pds));

  auto s1 = expand_coefficients(gf_s1_2d(), 4);
  CHECK(s1[0] == 1);  // the empty snake
  CHECK(s1[2] == 2);  // horizontal and vertical domino
  CHECK(s1[3] == 5);  // row and the four bent triominoes, no double north
}

TEST_CASE("2D series matches the published coefficients") {
  auto coeffs = expand_coefficients(gf_pds_2d(), 8);
  std::vector<long long> expected = {1, 1, 2, 6, 14, 32, 72, 160, 354};
  for (int n = 0; n <= 8; ++n) CHECK(coeffs[n] == expected[n]);
}

TEST_CASE("3D series matches the published coefficients") {
  auto coeffs = expand_coefficients(gf_pds_3d(), 8);
  std::vector<long long> expected = {1, 1, 3, 13, 45, 153, 517, 1737, 5829};
  for (int n = 0; n <= 8; ++n) CHECK(coeffs[n] == expected[n]);
  CHECK(gf_pds_nd({3}).equals(gf_pds_3d()));
}

TEST_CASE("N-dimensional series specializes to the 2D and 3D ones") {
  CHECK(gf_pds_nd({2}).equals(gf_pds_2d()));
  CHECK(gf_pds_nd({3}).equals(gf_pds_3d()));
  CHECK_THROWS_AS(gf_pds_nd({1}), std::invalid_argument);
}

TEST_CASE("N-dimensional partition identity holds exactly") {
  for (int dim : {2, 3, 4, 5, 6}) {
    RationalGF pds = gf_pds_nd({dim});
    CHECK((gf_s1_nd({dim}) + gf_s2_nd({dim}, pds)).equals(pds));
  }
}

TEST_CASE("ND coefficients are positive and obey the denominator recurrence") {
  for (int dim = 2; dim <= 6; ++dim) {
    RationalGF r = gf_pds_nd({dim});
    auto coeffs = expand_coefficients(r, 40);
    auto den = r.den().coeffs_by_q();
    for (int n = 0; n <= 40; ++n) CHECK(coeffs[n] > 0);
    for (int n = 6; n <= 40; ++n) {
      BigInt acc = 0;
      for (int j = 0; j < static_cast<int>(den.size()); ++j)
        acc += den[j].constant_term() * coeffs[n - j];
      CHECK(acc == 0);
    }
  }
}

TEST_CASE("single-free-axis snakes") {
  CHECK(count_pds_x1plus(4, {3}) == 11);  // (2^5 + 1)/3
  CHECK(count_pds_x1plus(0, {3}) == 1);
  CHECK(count_pds_x1plus(1, {3}) == 1);
  CHECK(gf_pds_x1plus({2}).equals(gf_sne()));

  // closed form (2^{n+1} + (-1)^n)/3 for N = 3, exactly
  BigInt power(1);
  for (int n = 0; n <= 60; ++n) {
    BigInt expected = (power * 2 + (n % 2 == 0 ? 1 : -1)) / 3;
    CHECK(count_pds_x1plus(n, {3}) == expected);
    power *= 2;
  }

  // the generating function agrees with the recurrence
  auto coeffs = expand_coefficients(gf_pds_x1plus({5}), 30);
  for (int n = 0; n <= 30; ++n) CHECK(coeffs[n] == count_pds_x1plus(n, {5}));
}

TEST_CASE("numeric root-sum formulas round to the exact counts") {
  CHECK(eval_closed_form_numeric(ClosedForm::pds2d, 2) == 2);
  CHECK(eval_closed_form_numeric(ClosedForm::pds2d, 8) == 354);
  CHECK(eval_closed_form_numeric(ClosedForm::pds3d, 8) == 5829);
  for (int n = 2; n <= 30; ++n) {
    CHECK_NOTHROW(eval_closed_form_numeric(ClosedForm::pds2d, n));
    CHECK_NOTHROW(eval_closed_form_numeric(ClosedForm::pds3d, n));
  }
  CHECK_THROWS_AS(eval_closed_form_numeric(ClosedForm::pds2d, 1),
                  std::invalid_argument);
}
