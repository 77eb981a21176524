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

#ifndef POLYSNAKE_SERIES_HPP
#define POLYSNAKE_SERIES_HPP

#include <functional>
#include <string>
#include <vector>

#include "polysnake/polynomial.hpp"
#include "polysnake/rational_gf.hpp"

namespace polysnake {

/// Power series truncated by total q-degree. Entry n is the coefficient of
/// q^n, a polynomial in (s,t,w). Every object handled by this toolkit has
/// t-degree and w-degree at most n inside the q^n coefficient (height and
/// half-perimeter cannot exceed cell count); that bound is re-checked after
/// every public operation and a violation throws std::logic_error.
class TruncatedSeries {
 public:
  /// Zero series tracked to the given q-order (inclusive).
  explicit TruncatedSeries(int order);
  /// Truncates p by q-degree. Throws if the degree bounds are violated.
  static TruncatedSeries from_polynomial(const Polynomial& p, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of q^n as a polynomial in (s,t,w); n must be <= order.
  const Polynomial& coeff(int n) const;
  /// Scalar coefficient of t^k q^n (all other exponents zero).
  BigInt coeff_tq(int k, int n) const;
  /// Scalar coefficient of t^k q^n w^j.
  BigInt coeff_tqw(int k, int n, int j) const;
  /// Least n with a nonzero coefficient; order()+1 if all tracked are zero.
  int q_valuation() const;
  bool is_zero() const;

  /// Reassembled polynomial with q exponents restored.
  Polynomial to_polynomial() const;
  /// Specializes t=1 and w=1; entry n is then a plain integer.
  std::vector<BigInt> specialize_tw1() const;

  TruncatedSeries operator-() const;
  /// Arithmetic truncates to the smaller operand order.
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const Polynomial& p);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  /// Multiplicative inverse; requires the q^0 coefficient to be exactly 1.
  TruncatedSeries inverse() const;
  /// this / b, requires b's q^0 coefficient to be exactly 1.
  TruncatedSeries divide(const TruncatedSeries& b) const;
  TruncatedSeries pow(std::uint32_t n) const;
  /// Exact division by the monomial m (which may carry a q exponent).
  /// Throws std::invalid_argument when a term is not divisible.
  TruncatedSeries divide_exact_monomial(const Monomial& m) const;

  /// {"order":N,"variables":[...],"terms":[...]} with q folded back in.
  std::string to_json() const;

 private:
  void check_invariants() const;

  std::vector<Polynomial> coeffs_;  // index = q-degree, size order+1
};

/// Unique power-series expansion of num/den to the given q-order, computed by
/// the linear recurrence the denominator induces (series long division).
/// Requires den's q^0 bucket to be the constant 1 after sign normalization
/// (guaranteed by RationalGF construction).
TruncatedSeries expand_rational(const RationalGF& r, int order);

/// Coefficients of a univariate-in-q rational function as plain integers.
std::vector<BigInt> expand_coefficients(const RationalGF& r, int order);

/// Solves S = f(S) by iterating from the zero series. The map must gain at
/// least one q-order of agreement per iteration (f(0) must have positive
/// q-valuation); iteration stops when two successive iterates agree on all
/// tracked coefficients and throws std::runtime_error after order+2
/// iterations without convergence.
TruncatedSeries solve_fixed_point(
    const std::function<TruncatedSeries(const TruncatedSeries&)>& f, int order);

}  // namespace polysnake

#endif  // POLYSNAKE_SERIES_HPP
