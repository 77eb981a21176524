#include <doctest.h>

#include <stdexcept>

#include "polysnake/enumerate.hpp"
#include "polysnake/inscribed_gf.hpp"

using namespace polysnake;

TEST_CASE("pillar series") {
  TruncatedSeries p = gf_pillar(8).series;
  CHECK(p.coeff_tq(3, 3) == 1);
  CHECK(p.coeff_tq(2, 3) == 0);
  CHECK(p.q_valuation() == 1);
}

TEST_CASE("width-2 and width-3 bubbles match their closed forms") {
  int order = 12;
  TruncatedSeries b2 = gf_bubble_width(2, order).series;
  // t^3 q^5 / (1 - tq)
  for (int k = 3; k + 2 <= order; ++k) CHECK(b2.coeff_tq(k, k + 2) == 1);
  CHECK(b2.q_valuation() == 5);
  CHECK(b2.coeff_tq(3, 6) == 0);

  // B_3 = t^3 q^7 / (((1-tq)^2 - t^4 q^6)(1-tq))
  TruncatedSeries b3 = gf_bubble_width(3, order).series;
  CHECK(b3.q_valuation() == 7);
  Polynomial tq = Polynomial::var(Var::t) * Polynomial::var(Var::q);
  Polynomial t4q6 = Polynomial::var(Var::t, 4) * Polynomial::var(Var::q, 6);
  Polynomial one_minus_tq = Polynomial::one() - tq;
  TruncatedSeries den = TruncatedSeries::from_polynomial(
      (one_minus_tq * one_minus_tq - t4q6) * one_minus_tq, order);
  TruncatedSeries closed =
      TruncatedSeries::from_polynomial(
          Polynomial::var(Var::t, 3) * Polynomial::var(Var::q, 7), order)
          .divide(den);
  CHECK(b3 == closed);
}

TEST_CASE("bubble widths match the enumeration oracle") {
  int order = 12;
  for (int r : {2, 3, 4}) {
    TruncatedSeries series = gf_bubble_width(r, order).series;
    CountTable oracle = bubble_table(r, order);
    for (int k = 1; k <= order; ++k) {
      for (int n = 0; n <= order; ++n) {
        BigInt expected(0);
        for (const auto& [key, count] : oracle)
          if (key.k == k && key.n == n) expected += count;
        CHECK(series.coeff_tq(k, n) == expected);
      }
    }
  }
}

TEST_CASE("arbitrary-width bubble fixed point") {
  int order = 10;
  TruncatedSeries b = gf_bubble_all(order);
  // minimal term w^3 t^3 q^5
  CHECK(b.coeff_tqw(3, 5, 3) == 1);
  CHECK(b.coeff(5).term_count() == 1);
  for (int n = 0; n < 5; ++n) CHECK(b.coeff(n).is_zero());
  // solves its own equation
  CHECK(bubble_equation_residual(b).is_zero());
  // aggregated lengths: 1, 1, 2, 4, 8, 16 from q^5 on
  auto totals = b.specialize_tw1();
  CHECK(totals[5] == 1);
  CHECK(totals[6] == 1);
  CHECK(totals[7] == 2);
  CHECK(totals[8] == 4);
  CHECK(totals[9] == 8);
  CHECK(totals[10] == 16);
}

TEST_CASE("bubble fixed point matches the oracle sum over widths") {
  int order = 11;
  auto totals = gf_bubble_all(order).specialize_tw1();
  std::vector<std::uint64_t> oracle(order + 1, 0);
  for (int r = 2; 2 * r + 1 <= order; ++r)
    for (const auto& [key, count] : bubble_table(r, order))
      oracle[key.n] += count;
  for (int n = 0; n <= order; ++n) CHECK(totals[n] == BigInt(oracle[n]));
}

TEST_CASE("crossing series") {
  int order = 12;
  TruncatedSeries c2 = gf_crossing(2, order).series;
  CHECK(c2.coeff_tq(1, 2) == 1);
  CHECK(c2.to_polynomial() ==
        Polynomial::var(Var::t) * Polynomial::var(Var::q, 2));

  TruncatedSeries c3 = gf_crossing(3, order).series;
  for (int k = 1; k + 2 <= order; ++k) CHECK(c3.coeff_tq(k, k + 2) == 1);

  // both construction routes agree
  for (int b = 2; b <= 6; ++b)
    CHECK(gf_crossing(b, order).series == gf_crossing_product_form(b, order).series);

  // q-valuation is the width
  for (int b = 2; b <= 6; ++b)
    CHECK(gf_crossing(b, order).series.q_valuation() == b);
}

TEST_CASE("crossing series match the enumeration oracle") {
  int order = 10;
  for (int b : {4, 5, 6}) {
    TruncatedSeries series = gf_crossing(b, order).series;
    CountTable oracle = crossing_table(b, order);
    for (int k = 1; k <= order; ++k)
      for (int n = 0; n <= order; ++n) {
        auto it = oracle.find(StatKey{b, k, n, 0});
        BigInt expected(it == oracle.end() ? 0 : it->second);
        CHECK(series.coeff_tq(k, n) == expected);
      }
  }
}

TEST_CASE("wider bubbles match the enumeration oracle") {
  int order = 13;
  TruncatedSeries series = gf_bubble_width(5, order).series;
  CHECK(series.q_valuation() == 11);
  CountTable oracle = bubble_table(5, order);
  for (int k = 1; k <= order; ++k)
    for (int n = 0; n <= order; ++n) {
      BigInt expected(0);
      for (const auto& [key, count] : oracle)
        if (key.k == k && key.n == n) expected += count;
      CHECK(series.coeff_tq(k, n) == expected);
    }
}

TEST_CASE("crossing-bubble product identities") {
  CrossingIdentityReport report = check_crossing_bubble_identity(3, 20);
  CHECK(report.holds);
  CHECK(report.max_k_checked == 3);
}

TEST_CASE("ending series") {
  int order = 10;
  // E_3^2 = tq^2/(1-tq): the bare hook and taller pillars
  TruncatedSeries e32 = gf_ending_col(3, 2, order).series;
  for (int k = 1; k + 1 <= order; ++k) CHECK(e32.coeff_tq(k, k + 1) == 1);
  CHECK(e32.q_valuation() == 2);

  CHECK_THROWS_AS(gf_ending_col(3, 3, order), std::invalid_argument);
  CHECK(gf_ending(2, order).series.is_zero());

  // oracle comparison for widths 4 and 5, every finishing column
  for (int b : {4, 5}) {
    for (int c = 2; c <= b - 1; ++c) {
      TruncatedSeries series = gf_ending_col(b, c, order).series;
      CountTable oracle = ending_table(b, c, order);
      for (int k = 1; k <= order; ++k)
        for (int n = 0; n <= order; ++n) {
          auto it = oracle.find(StatKey{b, k, n, 0});
          BigInt expected(it == oracle.end() ? 0 : it->second);
          CHECK(series.coeff_tq(k, n) == expected);
        }
    }
  }
}

TEST_CASE("families partition the width-2 inscribed snakes") {
  int order = 10;
  // no bubbles fit in width 2, so families 2 and 3 vanish
  CHECK(gf_family(2, 2, order).series.is_zero());
  CHECK(gf_family(3, 2, order).series.is_zero());

  TruncatedSeries total = gf_inscribed_pds(2, order).series;
  CHECK(total.coeff_tq(1, 2) == 1);  // the horizontal domino
  CHECK(total.coeff_tq(2, 3) == 4);  // the four bent triominoes
  CHECK(total.coeff_tq(3, 4) == 6);
}

TEST_CASE("inscribed totals match the oracle for small widths") {
  int order = 10;
  CountTable oracle = inscribed_pds_table(order);
  for (int b = 2; b <= 4; ++b) {
    TruncatedSeries series = gf_inscribed_pds(b, order).series;
    for (int k = 1; k <= 6; ++k)
      for (int n = 0; n <= order; ++n) {
        auto it = oracle.find(StatKey{b, k, n, 0});
        BigInt expected(it == oracle.end() ? 0 : it->second);
        CHECK(series.coeff_tq(k, n) == expected);
      }
  }
  // width 1 is the pillar column
  TruncatedSeries column = gf_inscribed_pds(1, order).series;
  for (int k = 1; k <= order; ++k) CHECK(column.coeff_tq(k, k) == 1);
}

TEST_CASE("inscribed coefficients vanish below n = b + k - 1") {
  int order = 12;
  for (int b = 2; b <= 5; ++b) {
    TruncatedSeries series = gf_inscribed_pds(b, order).series;
    for (int k = 1; k <= 6; ++k)
      for (int n = 0; n < b + k - 1 && n <= order; ++n)
        CHECK(series.coeff_tq(k, n) == 0);
  }
}
