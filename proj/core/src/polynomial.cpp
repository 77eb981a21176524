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

#include "polysnake/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace polysnake {

Polynomial::Polynomial(BigInt constant) {
  if (constant != 0) terms_.emplace(Monomial{}, std::move(constant));
}

Polynomial Polynomial::var(Var v, std::uint32_t exp, BigInt coeff) {
  Monomial m;
  m[v] = exp;
  return term(std::move(coeff), m);
}

Polynomial Polynomial::term(BigInt coeff, const Monomial& m) {
  Polynomial p;
  if (coeff != 0) p.terms_.emplace(m, std::move(coeff));
  return p;
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == Monomial{} &&
         terms_.begin()->second == 1;
}

BigInt Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::uint32_t Polynomial::degree(Var v) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
  return d;
}

void Polynomial::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (int i = 0; i < kNumVars; ++i) m.e[i] = ma.e[i] + mb.e[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::pow(std::uint32_t n) const {
  Polynomial result = one();
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1u) result *= base;
    base *= base;
    n >>= 1u;
  }
  return result;
}

Polynomial Polynomial::substitute_one(Var v) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) {
    Monomial folded = m;
    folded[v] = 0;
    r.add_term(folded, c);
  }
  return r;
}

std::vector<Polynomial> Polynomial::coeffs_by_q() const {
  std::vector<Polynomial> buckets(degree(Var::q) + 1);
  for (const auto& [m, c] : terms_) {
    Monomial stripped = m;
    stripped[Var::q] = 0;
    buckets[m[Var::q]].add_term(stripped, c);
  }
  return buckets;
}

Polynomial Polynomial::from_q_coeffs(const std::vector<Polynomial>& coeffs) {
  Polynomial r;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    for (const auto& [m, c] : coeffs[n].terms_) {
      if (m[Var::q] != 0)
        throw std::invalid_argument("q-coefficient carries a q exponent");
      Monomial full = m;
      full[Var::q] = static_cast<std::uint32_t>(n);
      r.add_term(full, c);
    }
  }
  return r;
}

std::string Polynomial::to_json() const {
  nlohmann::json j;
  j["variables"] = {kVarNames[0], kVarNames[1], kVarNames[2], kVarNames[3]};
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    terms.push_back({{m.e[0], m.e[1], m.e[2], m.e[3]}, c.str()});
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

Polynomial Polynomial::from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  Polynomial p;
  for (const auto& entry : j.at("terms")) {
    const auto& exps = entry.at(0);
    Monomial m;
    for (int i = 0; i < kNumVars; ++i) m.e[i] = exps.at(i).get<std::uint32_t>();
    p.add_term(m, BigInt(entry.at(1).get<std::string>()));
  }
  return p;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    BigInt abs_c = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool has_vars = m != Monomial{};
    if (abs_c != 1 || !has_vars) out << abs_c.str();
    bool need_star = abs_c != 1;
    for (int i = 0; i < kNumVars; ++i) {
      if (m.e[i] == 0) continue;
      if (need_star) out << "*";
      out << kVarNames[i];
      if (m.e[i] > 1) out << "^" << m.e[i];
      need_star = true;
    }
  }
  return out.str();
}

}  // namespace polysnake
