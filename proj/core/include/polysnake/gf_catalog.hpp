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

#ifndef POLYSNAKE_GF_CATALOG_HPP
#define POLYSNAKE_GF_CATALOG_HPP

#include <vector>

#include "polysnake/rational_gf.hpp"
#include "polysnake/series.hpp"

namespace polysnake {

/// Lattice dimension for the N-dimensional snake families.
struct NdParams {
  int n_dim;  // N >= 2
};

/// North-East snakes, counted by Fibonacci numbers: 1/(1-q-q^2).
RationalGF gf_sne();

/// Partially directed snakes without two consecutive north steps:
/// 2/(1-q-q^2) - 1/(1-q) - q^2.
RationalGF gf_s1_2d();

/// Partially directed snakes with at least one pair of consecutive north
/// steps, in terms of the full PDS generating function:
/// (PDS - 1 + q^2/(1-q)) * q^2 * (2/(1-q-q^2) - 1).
RationalGF gf_s2_2d(const RationalGF& pds);

/// (q^5+q^3+q^2-2q+1) / ((1-q)(1-2q-q^3)).
RationalGF gf_pds_2d();

/// (4q^5+2q^4+2q^2-3q+1) / ((1-q)(1-3q-4q^3)).
RationalGF gf_pds_3d();

/// N-dimensional partially directed snakes:
/// ((N-1)^2 q^5 + (N-1)(N-2) q^4 - (N-1)(N-3) q^3 + (N-1) q^2 - N q + 1)
///   / ((1-q)(1 - N q - (N-1)^2 q^3)).
RationalGF gf_pds_nd(NdParams p);

/// 2/(1 - q - (N-1)q^2) - 1/(1-q) - (N-1)q^2.
RationalGF gf_s1_nd(NdParams p);

/// (PDS - 1 + q^2/(1-q)) * (N-1)^2 q^2 * (2/(1 - q - (N-1)q^2) - 1).
RationalGF gf_s2_nd(NdParams p, const RationalGF& pds);

/// Snakes restricted to one free axis: 1/(1 - q - (N-1)q^2).
RationalGF gf_pds_x1plus(NdParams p);

/// Exact count via the recurrence a(n) = a(n-1) + (N-1) a(n-2), a(0)=a(1)=1.
BigInt count_pds_x1plus(int n, NdParams p);

/// Recurrence-based counts (the authoritative values), n = 0..n_max.
std::vector<BigInt> pds_counts_2d(int n_max);
std::vector<BigInt> pds_counts_3d(int n_max);

enum class ClosedForm { pds2d, pds3d };

/// Evaluates the partial-fraction root-sum formula for pds_2D(n) or
/// pds_3D(n) in floating point (cubic roots found numerically), rounds to
/// the nearest integer, and checks the result against the exact recurrence
/// count. Requires n >= 2; throws std::runtime_error if |float-exact| >= 0.5.
BigInt eval_closed_form_numeric(ClosedForm formula, int n);

}  // namespace polysnake

#endif  // POLYSNAKE_GF_CATALOG_HPP
