/*
 * Copyright 2026 The besselin Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include "besselin/bilaurent.hpp"
#include "besselin/errors.hpp"
#include "besselin/unipoly.hpp"
#include "random_values.hpp"

using namespace besselin;

namespace {
const BiLaurent x = BiLaurent::a1();
const BiLaurent y = BiLaurent::a2();
}  // namespace

TEST_SUITE("bilaurent") {
  TEST_CASE("ring examples") {
    CHECK((x + y) * (x - y) == bilpow(x, 2) - bilpow(y, 2));
    CHECK((x + y) * BiLaurent() == BiLaurent());
    CHECK(BiLaurent::monomial(1, -1, 0) * x == BiLaurent(Rational(1)));
    CHECK((x - x).is_zero());
    CHECK(bilpow(x + y, 0) == BiLaurent(Rational(1)));
  }

  TEST_CASE("canonical text") {
    CHECK(to_string(BiLaurent()) == "0");
    CHECK(to_string(Rational(1) - x - y) == "1 - a2 - a1");
    CHECK(to_string(BiLaurent::monomial(Rational(4, 3), 1, 2)) == "4/3*a1*a2^2");
    CHECK(to_string(-x) == "-a1");
    CHECK(to_string(BiLaurent::monomial(Rational(-1, 2), -1, 3)) == "-1/2*a1^-1*a2^3");
  }

  TEST_CASE("coefficient access and degree") {
    BiLaurent p = Rational(3) * bilpow(x, 2) * y + Rational(-2);
    CHECK(p.coefficient(2, 1) == Rational(3));
    CHECK(p.coefficient(1, 1) == Rational(0));
    CHECK(p.total_degree() == 3);
    CHECK(BiLaurent().total_degree() == -1);
  }

  TEST_CASE("substitution") {
    const BiLaurent top = Rational(143) * bilpow(x, 3) * bilpow(y, 5);
    CHECK(substitute(top, 1, 1) == Rational(143));
    CHECK(substitute(top, 0, 1) == Rational(0));
    CHECK(substitute(Rational(1) - x - y, Rational(1, 2), Rational(1, 2)) == Rational(0));
    CHECK_THROWS_AS(substitute(BiLaurent::monomial(1, -1, 0), 0, 1), DivisionByZero);
    CHECK(substitute(BiLaurent::monomial(1, -2, 1), Rational(1, 2), 3) == Rational(12));
  }

  TEST_CASE("polynomial assertion") {
    CHECK(assert_polynomial(x * y) == x * y);
    CHECK(assert_polynomial(BiLaurent()) == BiLaurent());
    try {
      assert_polynomial(x + BiLaurent::monomial(2, 1, -1));
      FAIL("expected NotPolynomial");
    } catch (const NotPolynomial& e) {
      CHECK(e.terms() == "2*a1*a2^-1");
    }
  }

  TEST_CASE("variable swap and line restriction") {
    CHECK(swap_variables(Rational(2) * x * bilpow(y, 3)) == Rational(2) * bilpow(x, 3) * y);
    // a1 a2 on a2 = 1 - a is a - a^2.
    CHECK(restrict_to_line(x * y) == UniPoly<Rational>(std::vector<Rational>{0, 1, -1}));
    CHECK_THROWS_AS(restrict_to_line(BiLaurent::monomial(1, 0, -1)), NotPolynomial);
  }

  TEST_CASE("property: commutative ring axioms") {
    testing::Gen gen(21);
    for (int trial = 0; trial < 200; ++trial) {
      const auto p = gen.bilaurent(), q = gen.bilaurent(), r = gen.bilaurent();
      CHECK(p + q == q + p);
      CHECK(p * q == q * p);
      CHECK((p + q) + r == p + (q + r));
      CHECK((p * q) * r == p * (q * r));
      CHECK(p * (q + r) == p * q + p * r);
      CHECK(p - p == BiLaurent());
      CHECK(p * Rational(1) == p);
      CHECK(biladd(p, q) == p + q);
      CHECK(bilmul(p, q) == p * q);
    }
  }

  TEST_CASE("property: substitution is a ring homomorphism") {
    testing::Gen gen(22);
    for (int trial = 0; trial < 200; ++trial) {
      const auto p = gen.bilaurent(), q = gen.bilaurent();
      const Rational v1 = gen.nonzero_rational(), v2 = gen.nonzero_rational();
      const Rational s = gen.rational();
      CHECK(substitute(p + q, v1, v2) == substitute(p, v1, v2) + substitute(q, v1, v2));
      CHECK(substitute(p * q, v1, v2) == substitute(p, v1, v2) * substitute(q, v1, v2));
      CHECK(substitute(bilscale(p, s), v1, v2) == s * substitute(p, v1, v2));
    }
  }

  TEST_CASE("property: degree of a product of polynomials adds") {
    testing::Gen gen(23);
    for (int trial = 0; trial < 200; ++trial) {
      const auto p = gen.polynomial(), q = gen.polynomial();
      if (p.is_zero() || q.is_zero()) continue;
      CHECK((p * q).total_degree() == p.total_degree() + q.total_degree());
    }
  }
}

TEST_SUITE("unipoly") {
  TEST_CASE("argument scaling") {
    // 1 + u + u^2/3 at u -> a1 u
    const UniPoly<Rational> q2(std::vector<Rational>{1, 1, Rational(1, 3)});
    const auto scaled = uniscale_arg(q2, x);
    REQUIRE(scaled.degree() == 2);
    CHECK(scaled.coefficient(0) == BiLaurent(Rational(1)));
    CHECK(scaled.coefficient(1) == x);
    CHECK(scaled.coefficient(2) == Rational(1, 3) * bilpow(x, 2));
  }

  TEST_CASE("multiplication") {
    const UniPoly<BiLaurent> p(std::vector<BiLaurent>{Rational(1), x});
    const UniPoly<BiLaurent> q(std::vector<BiLaurent>{Rational(1), y});
    const auto pq = unimul(p, q);
    CHECK(pq.coefficient(0) == BiLaurent(Rational(1)));
    CHECK(pq.coefficient(1) == x + y);
    CHECK(pq.coefficient(2) == x * y);
    CHECK(unimul(p, UniPoly<BiLaurent>()).is_zero());
  }

  TEST_CASE("zero polynomial has degree -1 and trailing zeros are trimmed") {
    CHECK(UniPoly<Rational>().degree() == -1);
    CHECK(UniPoly<Rational>(std::vector<Rational>{1, 0, 0}).degree() == 0);
  }

  TEST_CASE("evaluation") {
    const UniPoly<Rational> p(std::vector<Rational>{1, -3, 2});
    CHECK(evaluate(p, Rational(1, 2)) == Rational(0));
    CHECK(evaluate(p, Rational(3)) == Rational(10));
  }

  TEST_CASE("property: scaling then multiplying matches scaling the product") {
    testing::Gen gen(24);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Rational> a(static_cast<std::size_t>(gen.integer(0, 5)) + 1),
          b(static_cast<std::size_t>(gen.integer(0, 5)) + 1);
      for (auto& c : a) c = gen.rational();
      for (auto& c : b) c = gen.rational();
      const UniPoly<Rational> pa(a), pb(b);
      CHECK(uniscale_arg(pa * pb, x) == unimul(uniscale_arg(pa, x), uniscale_arg(pb, x)));
    }
  }
}
