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

#include "polysnake/rational_gf.hpp"

#include <stdexcept>

namespace polysnake {

RationalGF::RationalGF(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  BigInt c = den_.constant_term();
  if (c == -1) {
    num_ = -num_;
    den_ = -den_;
  } else if (c != 1) {
    throw std::invalid_argument(
        "RationalGF: denominator constant term must be +1 or -1, got " +
        c.str());
  }
}

bool RationalGF::equals(const RationalGF& other) const {
  return num_ * other.den_ == other.num_ * den_;
}

RationalGF RationalGF::operator+(const RationalGF& rhs) const {
  return RationalGF(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RationalGF RationalGF::operator-(const RationalGF& rhs) const {
  return RationalGF(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

RationalGF RationalGF::operator*(const RationalGF& rhs) const {
  return RationalGF(num_ * rhs.num_, den_ * rhs.den_);
}

}  // namespace polysnake
