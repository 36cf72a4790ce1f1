/*
 * Copyright 2026 The besselin Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include "besselin/bessel.hpp"
#include "besselin/combinatorics.hpp"
#include "random_values.hpp"

using namespace besselin;

namespace {

using RPoly = UniPoly<Rational>;

RPoly poly(std::vector<Rational> c) { return RPoly(std::move(c)); }

// q_{n+1} = q_n + u^2/(4n^2-1) q_{n-1}, built without bessel_q.
std::vector<RPoly> q_by_recurrence(int top) {
  std::vector<RPoly> q{poly({1}), poly({1, 1})};
  const auto u2 = RPoly::monomial(Rational(1), 2);
  for (int n = 1; n < top; ++n)
    q.push_back(q[n] + u2 * q[n - 1] * Rational(1, 4L * n * n - 1));
  return q;
}

RPoly reversed(const RPoly& p, int n) {
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[n - k] = p.coefficient(static_cast<std::size_t>(k));
  return RPoly(std::move(c));
}

}  // namespace

TEST_SUITE("bessel") {
  TEST_CASE("low-degree polynomials") {
    CHECK(bessel_q(0) == poly({1}));
    CHECK(bessel_q(1) == poly({1, 1}));
    CHECK(bessel_q(2) == poly({1, 1, Rational(1, 3)}));
    CHECK(reverse_bessel_theta(2) == poly({3, 3, 1}));
    CHECK(ordinary_bessel_y(2) == poly({1, 3, 3}));
  }

  TEST_CASE("agrees with the three-term recurrence") {
    const auto q = q_by_recurrence(20);
    for (int n = 0; n <= 20; ++n) CHECK(bessel_q(n) == q[static_cast<std::size_t>(n)]);
    CHECK(bessel_q(6).coefficient(6) == Rational(1, 10395));
  }

  TEST_CASE("leading coefficient") {
    for (int k = 0; k <= 20; ++k)
      CHECK(bessel_q(k).coefficient(static_cast<std::size_t>(k)) == q_leading_coefficient(k));
  }

  TEST_CASE("reverse and ordinary polynomials are mirror images") {
    for (int n = 0; n <= 12; ++n) {
      CHECK(reversed(reverse_bessel_theta(n), n) == ordinary_bessel_y(n));
      CHECK(reverse_bessel_theta(n).coefficient(static_cast<std::size_t>(n)) == Rational(1));
      CHECK(bessel_q(n) * Rational(factorial(2 * n), factorial(n) << n) == reverse_bessel_theta(n));
    }
  }

  TEST_CASE("recurrence residuals vanish") {
    for (int n = 1; n <= 20; ++n) {
      CHECK(bessel_recurrence_residual(n).is_zero());
      CHECK(bessel_derivative_residual(n).is_zero());
    }
  }

  TEST_CASE("monomial to q-basis") {
    const auto e = monomial_to_qbasis(RPoly::monomial(Rational(1), 2));
    // 3 q_2 - 3 q_1 = u^2 exactly; no q_0 component.
    CHECK(e.coeffs == std::vector<Rational>{0, -3, 3});
    CHECK(reconstruct(e) == RPoly::monomial(Rational(1), 2));
    CHECK(monomial_to_qbasis(RPoly()).coeffs.size() == 1);

    const BiLaurent x = BiLaurent::a1(), y = BiLaurent::a2();
    const UniPoly<BiLaurent> product(std::vector<BiLaurent>{Rational(1), x + y, x * y});
    const auto v = monomial_to_qbasis(product);
    REQUIRE(v.coeffs.size() == 3);
    CHECK(v.coeffs[0] == Rational(1) - x - y);
    CHECK(v.coeffs[1] == x + y - Rational(3) * x * y);
    CHECK(v.coeffs[2] == Rational(3) * x * y);
  }

  TEST_CASE("property: q-basis round trip") {
    testing::Gen gen(31);
    for (int trial = 0; trial < 200; ++trial) {
      const auto p = gen.unipoly(20);
      CHECK(reconstruct(monomial_to_qbasis(p)) == p);
    }
  }
}
