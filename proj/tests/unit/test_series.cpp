#include <doctest.h>

#include <stdexcept>

#include "polysnake/gf_catalog.hpp"
#include "polysnake/series.hpp"

using namespace polysnake;

namespace {

Polynomial q_poly(std::initializer_list<long long> coeffs) {
  Polynomial p;
  std::uint32_t i = 0;
  for (long long c : coeffs) {
    if (c != 0) p += Polynomial::var(Var::q, i, BigInt(c));
    ++i;
  }
  return p;
}

std::vector<long long> ints(const std::vector<BigInt>& v) {
  std::vector<long long> out;
  for (const BigInt& c : v) out.push_back(c.convert_to<long long>());
  return out;
}

}  // namespace

TEST_CASE("expand_rational reproduces catalog expansions") {
  // Fibonacci numbers
  CHECK(ints(expand_coefficients(RationalGF(Polynomial::one(), q_poly({1, -1, -1})), 6)) ==
        std::vector<long long>{1, 1, 2, 3, 5, 8, 13});
  // geometric series
  CHECK(ints(expand_coefficients(RationalGF(Polynomial::one(), q_poly({1, -1})), 4)) ==
        std::vector<long long>{1, 1, 1, 1, 1});
  // the 2D series
  CHECK(ints(expand_coefficients(gf_pds_2d(), 8)) ==
        std::vector<long long>{1, 1, 2, 6, 14, 32, 72, 160, 354});
}

TEST_CASE("expand_rational rejects bad denominators") {
  CHECK_THROWS_AS(RationalGF(Polynomial::one(), q_poly({2, -1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(RationalGF(Polynomial::one(), q_poly({0, 1})),
                  std::invalid_argument);
  // constant term -1 is normalized instead of rejected
  RationalGF flipped(q_poly({0, 1}), q_poly({-1, 1}));
  CHECK(flipped.den().constant_term() == 1);
  CHECK(ints(expand_coefficients(flipped, 3)) ==
        std::vector<long long>{0, -1, -1, -1});
}

TEST_CASE("expansion coefficients satisfy the denominator recurrence") {
  RationalGF r = gf_pds_2d();
  auto coeffs = expand_coefficients(r, 40);
  auto den = r.den().coeffs_by_q();
  int deg_num = static_cast<int>(r.num().degree(Var::q));
  for (int n = deg_num + 1; n <= 40; ++n) {
    BigInt acc = 0;
    for (int j = 0; j < static_cast<int>(den.size()) && j <= n; ++j)
      acc += den[j].constant_term() * coeffs[n - j];
    CHECK(acc == 0);
  }
}

TEST_CASE("series round trip: expansion times denominator gives numerator") {
  RationalGF r = gf_pds_3d();
  int order = 25;
  TruncatedSeries expansion = expand_rational(r, order);
  TruncatedSeries back =
      expansion * TruncatedSeries::from_polynomial(r.den(), order);
  CHECK(back == TruncatedSeries::from_polynomial(r.num(), order));
}

TEST_CASE("series multiplication and inversion") {
  int order = 3;
  TruncatedSeries inv_geo =
      TruncatedSeries::from_polynomial(q_poly({1, -1}), order).inverse();
  CHECK(inv_geo == TruncatedSeries::from_polynomial(q_poly({1, 1, 1, 1}), order));

  // tq/(1-tq) up to order 4
  Polynomial tq = Polynomial::var(Var::t) * Polynomial::var(Var::q);
  TruncatedSeries pillar =
      TruncatedSeries::from_polynomial(tq, 4) *
      TruncatedSeries::from_polynomial(Polynomial::one() - tq, 4).inverse();
  for (int n = 1; n <= 4; ++n) {
    CHECK(pillar.coeff_tq(n, n) == 1);
    CHECK(pillar.coeff_tq(n - 1, n) == 0);
  }
  CHECK(pillar.coeff(0).is_zero());

  // inverse round trip
  TruncatedSeries fib_inv =
      TruncatedSeries::from_polynomial(q_poly({1, -1, -1}), 10).inverse();
  TruncatedSeries product =
      fib_inv * TruncatedSeries::from_polynomial(q_poly({1, -1, -1}), 10);
  CHECK(product == TruncatedSeries::from_polynomial(Polynomial::one(), 10));
}

TEST_CASE("series division demands a unit constant term") {
  TruncatedSeries numer = TruncatedSeries::from_polynomial(Polynomial::one(), 5);
  TruncatedSeries divisor = TruncatedSeries::from_polynomial(q_poly({0, 1}), 5);
  CHECK_THROWS_AS(numer.divide(divisor), std::invalid_argument);
  TruncatedSeries two = TruncatedSeries::from_polynomial(Polynomial(BigInt(2)), 5);
  CHECK_THROWS_AS(numer.divide(two), std::invalid_argument);
}

TEST_CASE("result order is the smaller operand order") {
  TruncatedSeries a = TruncatedSeries::from_polynomial(q_poly({1, 1}), 8);
  TruncatedSeries b = TruncatedSeries::from_polynomial(q_poly({1, 2}), 5);
  CHECK((a * b).order() == 5);
  CHECK((a + b).order() == 5);
}

TEST_CASE("degree bounds are enforced") {
  // t^3 with no q cannot be a series coefficient here
  CHECK_THROWS_AS(
      TruncatedSeries::from_polynomial(Polynomial::var(Var::t, 3), 5),
      std::logic_error);
  // t*q is fine
  CHECK_NOTHROW(TruncatedSeries::from_polynomial(
      Polynomial::var(Var::t) * Polynomial::var(Var::q), 5));
}

TEST_CASE("fixed point of a geometric map") {
  TruncatedSeries sol = solve_fixed_point(
      [](const TruncatedSeries& b) {
        auto q = TruncatedSeries::from_polynomial(Polynomial::var(Var::q), b.order());
        return q + q * b;
      },
      3);
  CHECK(sol == TruncatedSeries::from_polynomial(q_poly({0, 1, 1, 1}), 3));
}

TEST_CASE("fixed point detects malformed maps") {
  CHECK_THROWS_AS(solve_fixed_point(
                      [](const TruncatedSeries& b) {
                        return TruncatedSeries::from_polynomial(Polynomial::one(),
                                                                b.order()) +
                               b;
                      },
                      4),
                  std::runtime_error);
}

TEST_CASE("series serialization carries order and sorted terms") {
  TruncatedSeries pillar =
      TruncatedSeries::from_polynomial(
          Polynomial::var(Var::t) * Polynomial::var(Var::q), 3) *
      TruncatedSeries::from_polynomial(
          Polynomial::one() - Polynomial::var(Var::t) * Polynomial::var(Var::q), 3)
          .inverse();
  auto text = pillar.to_json();
  CHECK(text.find("\"order\":3") != std::string::npos);
  Polynomial back = Polynomial::from_json(text);
  CHECK(back == pillar.to_polynomial());
}

TEST_CASE("exact monomial division") {
  // t^3 q^5 / (t^2 q^2) = t q^3
  Monomial m;
  m[Var::t] = 3;
  m[Var::q] = 5;
  TruncatedSeries s =
      TruncatedSeries::from_polynomial(Polynomial::term(BigInt(1), m), 8);
  Monomial div;
  div[Var::t] = 2;
  div[Var::q] = 2;
  TruncatedSeries quotient = s.divide_exact_monomial(div);
  CHECK(quotient.coeff_tq(1, 3) == 1);
  CHECK(quotient.order() == 6);

  // tq is not divisible by t^2 q^2
  TruncatedSeries bad = TruncatedSeries::from_polynomial(
      Polynomial::var(Var::t) * Polynomial::var(Var::q), 8);
  CHECK_THROWS_AS(bad.divide_exact_monomial(div), std::invalid_argument);
}
