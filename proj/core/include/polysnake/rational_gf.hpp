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

#ifndef POLYSNAKE_RATIONAL_GF_HPP
#define POLYSNAKE_RATIONAL_GF_HPP

#include "polysnake/polynomial.hpp"

namespace polysnake {

/// Rational generating function num/den. The denominator must have constant
/// term +1 or -1; construction normalizes the sign so that it is +1, which
/// makes the power-series expansion unique. No gcd reduction is performed;
/// equality is decided by cross-multiplication.
class RationalGF {
 public:
  /// Throws std::invalid_argument unless den's constant term is +1 or -1.
  RationalGF(Polynomial num, Polynomial den);

  static RationalGF from_polynomial(Polynomial p) {
    return RationalGF(std::move(p), Polynomial::one());
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  /// num1*den2 == num2*den1, exact.
  bool equals(const RationalGF& other) const;

  RationalGF operator+(const RationalGF& rhs) const;
  RationalGF operator-(const RationalGF& rhs) const;
  RationalGF operator*(const RationalGF& rhs) const;

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace polysnake

#endif  // POLYSNAKE_RATIONAL_GF_HPP
