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

#ifndef POLYSNAKE_POLYNOMIAL_HPP
#define POLYSNAKE_POLYNOMIAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace polysnake {

using BigInt = boost::multiprecision::cpp_int;

/// Formal variables, in fixed serialization order: s marks rectangle width,
/// t height, q length, w horizontal half-perimeter.
enum class Var : int { s = 0, t = 1, q = 2, w = 3 };

inline constexpr int kNumVars = 4;
inline constexpr const char* kVarNames[kNumVars] = {"s", "t", "q", "w"};

/// Exponent vector of one monomial. Ordering is lexicographic on (s,t,q,w).
struct Monomial {
  std::array<std::uint32_t, kNumVars> e{0, 0, 0, 0};

  std::uint32_t operator[](Var v) const { return e[static_cast<int>(v)]; }
  std::uint32_t& operator[](Var v) { return e[static_cast<int>(v)]; }
  auto operator<=>(const Monomial&) const = default;
};

/// Sparse multivariate polynomial in (s,t,q,w) with arbitrary-precision
/// integer coefficients. Invariants: no stored zero coefficient, exponents
/// non-negative (unsigned), terms kept sorted by exponent vector so equality
/// is structural and serialization order is deterministic.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, BigInt>;

  Polynomial() = default;
  explicit Polynomial(BigInt constant);
  explicit Polynomial(long long constant) : Polynomial(BigInt(constant)) {}

  static Polynomial zero() { return Polynomial(); }
  static Polynomial one() { return Polynomial(BigInt(1)); }
  /// coeff * v^exp
  static Polynomial var(Var v, std::uint32_t exp = 1, BigInt coeff = 1);
  static Polynomial term(BigInt coeff, const Monomial& m);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t term_count() const { return terms_.size(); }

  BigInt coeff(const Monomial& m) const;
  BigInt constant_term() const { return coeff(Monomial{}); }
  /// Largest exponent of v over all terms (0 for the zero polynomial).
  std::uint32_t degree(Var v) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const BigInt& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const BigInt& c) { return a *= c; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(std::uint32_t n) const;
  /// Sets v := 1, folding its exponent away.
  Polynomial substitute_one(Var v) const;
  /// Dense bucketing by the exponent of q; bucket polynomials carry q^0.
  std::vector<Polynomial> coeffs_by_q() const;
  /// Reassembles sum_n coeffs[n] * q^n.
  static Polynomial from_q_coeffs(const std::vector<Polynomial>& coeffs);

  /// JSON object {"variables":[...],"terms":[[[es,et,eq,ew],"coeff"],...]}
  /// with terms in lexicographic exponent order; coefficients as strings.
  std::string to_json() const;
  static Polynomial from_json(const std::string& json_text);

  /// Human-readable form, e.g. "1 - 2*q + q^3".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const BigInt& c);

  TermMap terms_;
};

}  // namespace polysnake

#endif  // POLYSNAKE_POLYNOMIAL_HPP
