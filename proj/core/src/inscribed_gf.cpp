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

#include "polysnake/inscribed_gf.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace polysnake {

namespace {

Polynomial mono(long long coeff, int et, int eq, int ew = 0) {
  Monomial m;
  m[Var::t] = static_cast<std::uint32_t>(et);
  m[Var::q] = static_cast<std::uint32_t>(eq);
  m[Var::w] = static_cast<std::uint32_t>(ew);
  return Polynomial::term(BigInt(coeff), m);
}

TruncatedSeries series_of(const Polynomial& p, int order) {
  return TruncatedSeries::from_polynomial(p, order);
}

TruncatedSeries one_series(int order) {
  return series_of(Polynomial::one(), order);
}

// 1/(1-tq)
TruncatedSeries inv_one_minus_tq(int order) {
  return series_of(Polynomial::one() - mono(1, 1, 1), order).inverse();
}

// sum_{i=2}^{hi} PB_i (zero series when hi < 2)
TruncatedSeries pb_sum(int hi, int order) {
  TruncatedSeries sum(order);
  for (int i = 2; i <= hi; ++i) sum = sum + gf_pb(i, order).series;
  return sum;
}

}  // namespace

WidthIndexedGF gf_pillar(int order) {
  return {0, GFKind::pillar,
          series_of(mono(1, 1, 1), order) * inv_one_minus_tq(order)};
}

WidthIndexedGF gf_bubble_width(int r, int order) {
  if (r < 2) throw std::invalid_argument("bubble width must be >= 2");
  TruncatedSeries b = series_of(mono(1, 3, 5), order) * inv_one_minus_tq(order);
  for (int width = 3; width <= r; ++width) {
    TruncatedSeries stack_below = pb_sum(width - 2, order);
    TruncatedSeries stack_above = pb_sum(width - 1, order);
    TruncatedSeries wrap =
        series_of(mono(1, 0, 2), order) * inv_one_minus_tq(order).pow(2);
    b = b.divide(one_series(order) - stack_below)
            .divide(one_series(order) - stack_above) *
        wrap;
  }
  return {r, GFKind::bubble_r, std::move(b)};
}

WidthIndexedGF gf_pb(int r, int order) {
  return {r, GFKind::pb_r, gf_bubble_width(r, order).series * gf_pillar(order).series};
}

namespace {

TruncatedSeries bubble_map(const TruncatedSeries& b, int order) {
  TruncatedSeries inv = inv_one_minus_tq(order);
  TruncatedSeries minimal = series_of(mono(1, 3, 5, 3), order) * inv;
  TruncatedSeries wrap = series_of(mono(1, 0, 1, 1), order) * inv;  // wq/(1-tq)
  TruncatedSeries pillar = gf_pillar(order).series;
  TruncatedSeries stack = b.divide(one_series(order) - pillar * b);
  return minimal + wrap * stack * wrap;
}

}  // namespace

TruncatedSeries gf_bubble_all(int order) {
  return solve_fixed_point(
      [order](const TruncatedSeries& b) { return bubble_map(b, order); }, order);
}

TruncatedSeries bubble_equation_residual(const TruncatedSeries& b) {
  return bubble_map(b, b.order()) - b;
}

WidthIndexedGF gf_crossing(int b, int order) {
  if (b < 2) throw std::invalid_argument("crossing width must be >= 2");
  TruncatedSeries c = series_of(mono(1, 1, 2), order);  // C_2 = tq^2
  for (int width = 3; width <= b; ++width) {
    TruncatedSeries step = series_of(mono(1, 0, 1), order) * inv_one_minus_tq(order);
    c = c.divide(one_series(order) - pb_sum(width - 2, order)) * step;
  }
  return {b, GFKind::crossing, std::move(c)};
}

WidthIndexedGF gf_crossing_product_form(int b, int order) {
  if (b < 2) throw std::invalid_argument("crossing width must be >= 2");
  TruncatedSeries c =
      (series_of(mono(1, 0, 1), order) * inv_one_minus_tq(order))
          .pow(static_cast<std::uint32_t>(b - 2)) *
      series_of(mono(1, 1, 2), order);
  for (int j = 2; j <= b - 2; ++j)
    c = c.divide(one_series(order) - pb_sum(j, order));
  return {b, GFKind::crossing, std::move(c)};
}

CrossingIdentityReport check_crossing_bubble_identity(int k_max, int order) {
  CrossingIdentityReport report;
  report.order = order;
  Monomial t2q2;
  t2q2[Var::t] = 2;
  t2q2[Var::q] = 2;
  Monomial t2q3 = t2q2;
  t2q3[Var::q] = 3;

  std::vector<TruncatedSeries> bubbles;  // bubbles[i] = B_{i+2}
  for (int i = 2; i <= 2 * k_max + 1; ++i)
    bubbles.push_back(gf_bubble_width(i, order).series);
  auto bubble = [&](int i) -> const TruncatedSeries& {
    return bubbles.at(i - 2);
  };

  for (int k = 1; k <= k_max; ++k) {
    // Odd widths: C_{2k+1} * t^2q^2 * prod_{i=2..k} B_{2i-1} = prod_{i=1..k} B_{2i}
    TruncatedSeries lhs =
        gf_crossing(2 * k + 1, order).series * series_of(mono(1, 2, 2), order);
    TruncatedSeries rhs = one_series(order);
    for (int i = 2; i <= k; ++i) lhs = lhs * bubble(2 * i - 1);
    for (int i = 1; i <= k; ++i) rhs = rhs * bubble(2 * i);
    if (!(lhs == rhs)) {
      report.holds = false;
      report.detail = "odd identity fails at k=" + std::to_string(k);
      return report;
    }
    // Even widths (k >= 2): C_{2k} * t^2q^3 * prod_{i=2..k-1} B_{2i}
    //                       = (1-tq) * prod_{i=2..k} B_{2i-1}
    if (k >= 2) {
      TruncatedSeries lhs_even =
          gf_crossing(2 * k, order).series * series_of(mono(1, 2, 3), order);
      TruncatedSeries rhs_even =
          series_of(Polynomial::one() - mono(1, 1, 1), order);
      for (int i = 2; i <= k - 1; ++i) lhs_even = lhs_even * bubble(2 * i);
      for (int i = 2; i <= k; ++i) rhs_even = rhs_even * bubble(2 * i - 1);
      if (!(lhs_even == rhs_even)) {
        report.holds = false;
        report.detail = "even identity fails at k=" + std::to_string(k);
        return report;
      }
    }
    report.max_k_checked = k;
  }
  return report;
}

WidthIndexedGF gf_ending_col(int b, int c, int order) {
  if (!(1 < c && c < b)) throw std::invalid_argument("endings need 1 < c < b");
  TruncatedSeries inv = inv_one_minus_tq(order);
  TruncatedSeries head =
      series_of(mono(1, 1, c), order) * inv.pow(static_cast<std::uint32_t>(c - 1));
  TruncatedSeries column_moves = one_series(order);
  for (int j = 0; j <= c - 3; ++j)
    column_moves =
        column_moves.divide(one_series(order) - pb_sum(b - 2 - j, order));
  // The bubble stack at the final column is divided exactly by t^2 q^2;
  // compute it two orders deep so the quotient still reaches `order`.
  Monomial t2q2;
  t2q2[Var::t] = 2;
  t2q2[Var::q] = 2;
  TruncatedSeries shifted =
      pb_sum(b - c, order + 2).divide_exact_monomial(t2q2);
  TruncatedSeries bracket =
      one_series(order) +
      shifted.divide(one_series(order) - pb_sum(b - c, order));
  return {b, GFKind::ending_col, head * column_moves * bracket};
}

WidthIndexedGF gf_ending(int b, int order) {
  TruncatedSeries sum(order);
  for (int c = 2; c <= b - 1; ++c) sum = sum + gf_ending_col(b, c, order).series;
  return {b, GFKind::ending, std::move(sum)};
}

namespace {

struct FamilyParts {
  TruncatedSeries pillar{0};
  TruncatedSeries caps{0};      // [1 + P(1 + E_b)]^2
  TruncatedSeries crossing{0};  // C_b
  TruncatedSeries bubbles{0};   // sum_{i=2}^{b-1} B_i
};

FamilyParts family_parts(int b, int order) {
  FamilyParts parts{TruncatedSeries(order), TruncatedSeries(order),
                    TruncatedSeries(order), TruncatedSeries(order)};
  parts.pillar = gf_pillar(order).series;
  TruncatedSeries ending = gf_ending(b, order).series;
  parts.caps =
      (one_series(order) + parts.pillar * (one_series(order) + ending)).pow(2);
  parts.crossing = gf_crossing(b, order).series;
  TruncatedSeries bubbles(order);
  for (int i = 2; i <= b - 1; ++i)
    bubbles = bubbles + gf_bubble_width(i, order).series;
  parts.bubbles = std::move(bubbles);
  return parts;
}

}  // namespace

WidthIndexedGF gf_family(int i, int b, int order) {
  if (b < 2) throw std::invalid_argument("families are defined for b >= 2");
  if (i < 1 || i > 4) throw std::invalid_argument("family index must be 1..4");
  FamilyParts parts = family_parts(b, order);
  const TruncatedSeries& P = parts.pillar;
  const TruncatedSeries& C = parts.crossing;
  const TruncatedSeries& B = parts.bubbles;
  TruncatedSeries one = one_series(order);
  TruncatedSeries core_inv = one - P * (C + B);

  TruncatedSeries result(order);
  switch (i) {
    case 1:
      result = parts.caps * (P * C * C).divide(core_inv) * Polynomial(BigInt(2));
      break;
    case 2:
      result = parts.caps * (P * C * B).divide(core_inv) * Polynomial(BigInt(4));
      break;
    case 3:
      result = parts.caps * (P * B).divide(one - P * B) *
               (P * C * B).divide(core_inv) * Polynomial(BigInt(2));
      break;
    case 4:
      result = parts.caps * C * Polynomial(BigInt(2)) -
               series_of(mono(1, 1, b), order);
      break;
  }
  static constexpr GFKind kinds[4] = {GFKind::family_1, GFKind::family_2,
                                      GFKind::family_3, GFKind::family_4};
  return {b, kinds[i - 1], std::move(result)};
}

WidthIndexedGF gf_inscribed_pds(int b, int order) {
  if (b < 1) throw std::invalid_argument("width must be >= 1");
  if (b == 1) {
    // The 1 x k rectangles hold exactly the vertical bar: one snake per
    // t^k q^k, i.e. the pillar series.
    return {1, GFKind::total, gf_pillar(order).series};
  }
  TruncatedSeries total(order);
  for (int i = 1; i <= 4; ++i) total = total + gf_family(i, b, order).series;
  return {b, GFKind::total, std::move(total)};
}

}  // namespace polysnake
