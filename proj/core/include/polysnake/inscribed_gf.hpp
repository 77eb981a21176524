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

#ifndef POLYSNAKE_INSCRIBED_GF_HPP
#define POLYSNAKE_INSCRIBED_GF_HPP

#include <string>

#include "polysnake/series.hpp"

namespace polysnake {

/// Kinds of building blocks for snakes of a fixed rectangle width.
enum class GFKind {
  pillar,
  bubble_r,
  pb_r,
  crossing,
  ending_col,
  ending,
  family_1,
  family_2,
  family_3,
  family_4,
  total,
};

/// Series in (t,q) attached to a rectangle width b; the width variable is
/// carried externally as the index rather than inside the series.
struct WidthIndexedGF {
  int b = 0;
  GFKind kind = GFKind::total;
  TruncatedSeries series{0};
};

/// Default truncation order serving heights k <= 6 without clipping any
/// requested coefficient.
inline int default_inscribed_order(int b) { return 2 * (b + 6); }

/// Pillars: tq/(1-tq).
WidthIndexedGF gf_pillar(int order);

/// Bubbles of width exactly r, built by the stacking recursion with base
/// t^3 q^5 / (1-tq). The q-valuation is 2r+1.
WidthIndexedGF gf_bubble_width(int r, int order);

/// Bubble with a pillar below: PB_r = B_r * P.
WidthIndexedGF gf_pb(int r, int order);

/// Bubbles of arbitrary width in (t,q,w), with w the horizontal
/// half-perimeter: the fixed point of
///   B = w^3 t^3 q^5/(1-tq) + (wq/(1-tq)) * B/(1-PB) * (wq/(1-tq)).
TruncatedSeries gf_bubble_all(int order);

/// Residual f(B) - B of the defining bubble equation; zero on the solution.
TruncatedSeries bubble_equation_residual(const TruncatedSeries& b);

/// Crossings of width b: C_2 = tq^2, C_3 = tq^3/(1-tq), then the recursion
/// C_b = C_{b-1} / (1 - sum PB_i) * q/(1-tq). The q-valuation is b.
WidthIndexedGF gf_crossing(int b, int order);

/// Same series through the closed product form
/// (q/(1-tq))^{b-2} tq^2 / prod_j (1 - sum_{i<=j} PB_i).
WidthIndexedGF gf_crossing_product_form(int b, int order);

struct CrossingIdentityReport {
  bool holds = true;
  int max_k_checked = 0;
  int order = 0;
  std::string detail;
};

/// Verifies the crossing/bubble product identities
///   C_{2k+1} * t^2 q^2 * prod_{i=2..k} B_{2i-1} == prod_{i=1..k} B_{2i}
///   C_{2k} * t^2 q^3 * prod_{i=2..k-1} B_{2i} == (1-tq) * prod_{i=2..k} B_{2i-1}
/// as truncated-series equalities up to the given order (odd case for k >= 1,
/// even case for k >= 2).
CrossingIdentityReport check_crossing_bubble_identity(int k_max, int order);

/// Endings finishing on column c in a rectangle of width b (1 < c < b).
WidthIndexedGF gf_ending_col(int b, int c, int order);

/// Sum of gf_ending_col over c = 2..b-1 (zero series for b <= 2).
WidthIndexedGF gf_ending(int b, int order);

/// One of the four disjoint families of inscribed snakes of width b >= 2.
WidthIndexedGF gf_family(int i, int b, int order);

/// Total inscribed PDS of width b: F1+F2+F3+F4 for b >= 2, or the pillar
/// column series (one snake per t^k q^k) for b = 1.
WidthIndexedGF gf_inscribed_pds(int b, int order);

}  // namespace polysnake

#endif  // POLYSNAKE_INSCRIBED_GF_HPP
