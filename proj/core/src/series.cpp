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

#include "polysnake/series.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace polysnake {

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, int order) {
  TruncatedSeries s(order);
  auto buckets = p.coeffs_by_q();
  for (int n = 0; n <= order && n < static_cast<int>(buckets.size()); ++n)
    s.coeffs_[n] = std::move(buckets[n]);
  s.check_invariants();
  return s;
}

void TruncatedSeries::check_invariants() const {
  for (int n = 0; n < static_cast<int>(coeffs_.size()); ++n) {
    for (const auto& [m, c] : coeffs_[n].terms()) {
      if (m[Var::q] != 0)
        throw std::logic_error("series coefficient carries a q exponent");
      if (m[Var::t] > static_cast<std::uint32_t>(n) ||
          m[Var::w] > static_cast<std::uint32_t>(n))
        throw std::logic_error(
            "series degree bound violated: t/w degree exceeds q-degree " +
            std::to_string(n));
    }
  }
}

const Polynomial& TruncatedSeries::coeff(int n) const {
  if (n < 0 || n > order())
    throw std::out_of_range("coefficient index beyond truncation order");
  return coeffs_[n];
}

BigInt TruncatedSeries::coeff_tq(int k, int n) const {
  Monomial m;
  m[Var::t] = static_cast<std::uint32_t>(k);
  return coeff(n).coeff(m);
}

BigInt TruncatedSeries::coeff_tqw(int k, int n, int j) const {
  Monomial m;
  m[Var::t] = static_cast<std::uint32_t>(k);
  m[Var::w] = static_cast<std::uint32_t>(j);
  return coeff(n).coeff(m);
}

int TruncatedSeries::q_valuation() const {
  for (int n = 0; n <= order(); ++n)
    if (!coeffs_[n].is_zero()) return n;
  return order() + 1;
}

bool TruncatedSeries::is_zero() const { return q_valuation() > order(); }

Polynomial TruncatedSeries::to_polynomial() const {
  return Polynomial::from_q_coeffs(coeffs_);
}

std::vector<BigInt> TruncatedSeries::specialize_tw1() const {
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t n = 0; n < coeffs_.size(); ++n)
    out[n] =
        coeffs_[n].substitute_one(Var::t).substitute_one(Var::w).constant_term();
  return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (int n = 0; n <= r.order(); ++n) r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
  r.check_invariants();
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (int n = 0; n <= r.order(); ++n) r.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
  r.check_invariants();
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.order(), b.order()));
  for (int i = 0; i <= r.order(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= r.order(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  r.check_invariants();
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const Polynomial& p) {
  return a * TruncatedSeries::from_polynomial(p, a.order());
}

TruncatedSeries TruncatedSeries::divide(const TruncatedSeries& b) const {
  int ord = std::min(order(), b.order());
  if (!b.coeffs_[0].is_one())
    throw std::invalid_argument(
        "series division requires a divisor with q-constant term 1");
  TruncatedSeries r(ord);
  for (int n = 0; n <= ord; ++n) {
    Polynomial c = coeffs_[n];
    for (int j = 1; j <= n; ++j) c -= b.coeffs_[j] * r.coeffs_[n - j];
    r.coeffs_[n] = std::move(c);
  }
  r.check_invariants();
  return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
  return from_polynomial(Polynomial::one(), order()).divide(*this);
}

TruncatedSeries TruncatedSeries::pow(std::uint32_t n) const {
  TruncatedSeries result = from_polynomial(Polynomial::one(), order());
  TruncatedSeries base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    base = base * base;
    n >>= 1u;
  }
  return result;
}

TruncatedSeries TruncatedSeries::divide_exact_monomial(const Monomial& m) const {
  int qshift = static_cast<int>(m[Var::q]);
  if (order() < qshift)
    throw std::invalid_argument("monomial q-degree exceeds series order");
  TruncatedSeries r(order() - qshift);
  for (int n = qshift; n <= order(); ++n) {
    Polynomial shifted;
    for (const auto& [mon, c] : coeffs_[n].terms()) {
      Monomial reduced = mon;
      for (int i = 0; i < kNumVars; ++i) {
        if (i == static_cast<int>(Var::q)) continue;
        if (reduced.e[i] < m.e[i])
          throw std::invalid_argument("series term not divisible by monomial");
        reduced.e[i] -= m.e[i];
      }
      shifted += Polynomial::term(c, reduced);
    }
    r.coeffs_[n - qshift] = std::move(shifted);
  }
  for (int n = 0; n < qshift; ++n)
    if (!coeffs_[n].is_zero())
      throw std::invalid_argument("series term not divisible by monomial");
  r.check_invariants();
  return r;
}

std::string TruncatedSeries::to_json() const {
  nlohmann::json j = nlohmann::json::parse(to_polynomial().to_json());
  j["order"] = order();
  return j.dump();
}

TruncatedSeries expand_rational(const RationalGF& r, int order) {
  auto num = TruncatedSeries::from_polynomial(r.num(), order);
  auto den = TruncatedSeries::from_polynomial(r.den(), order);
  if (!den.coeff(0).is_one())
    throw std::invalid_argument(
        "expand_rational: denominator q-constant term must be 1 after "
        "normalization");
  return num.divide(den);
}

std::vector<BigInt> expand_coefficients(const RationalGF& r, int order) {
  return expand_rational(r, order).specialize_tw1();
}

TruncatedSeries solve_fixed_point(
    const std::function<TruncatedSeries(const TruncatedSeries&)>& f, int order) {
  TruncatedSeries current(order);
  for (int iter = 0; iter < order + 2; ++iter) {
    TruncatedSeries next = f(current);
    if (next == current) return current;
    current = std::move(next);
  }
  throw std::runtime_error(
      "solve_fixed_point: no convergence within order+2 iterations "
      "(malformed map)");
}

}  // namespace polysnake
