/*
 * Copyright 2026 The besselin Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include "besselin/combinatorics.hpp"
#include "besselin/errors.hpp"
#include "besselin/rational.hpp"
#include "random_values.hpp"

using namespace besselin;

TEST_SUITE("rational") {
  TEST_CASE("stored in lowest terms with positive denominator") {
    Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational(0, -7).denominator() == 1);
    CHECK(Rational(0, 5) == Rational());
  }

  TEST_CASE("zero denominator") {
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Rational(3) / Rational(), DivisionByZero);
    CHECK_THROWS_AS(pow(Rational(), -1), DivisionByZero);
  }

  TEST_CASE("literal parsing") {
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("+2/3") == Rational(2, 3));
    CHECK(Rational::parse("123456789012345678901234567890").to_string() ==
          "123456789012345678901234567890");
    for (const char* bad : {"", "-", "1/", "/2", "1.5", " 1", "1/-2", "a", "1/0", "1//2", "--1"})
      CHECK_THROWS_AS(Rational::parse(bad), ParseError);
  }

  TEST_CASE("rendering") {
    CHECK(Rational(-3, 4).to_string() == "-3/4");
    CHECK(Rational(8, 4).to_string() == "2");
  }

  TEST_CASE("integer powers") {
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(pow(Rational(-5), 0) == Rational(1));
  }
}

TEST_SUITE("pochhammer") {
  TEST_CASE("examples") {
    CHECK(pochhammer(Rational(1, 2), 0) == Rational(1));
    CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
    CHECK(pochhammer(Rational(-2), 5) == Rational(0));
    CHECK(pochhammer(Rational(3), 4) == Rational(360));
    CHECK(pochhammer(Rational(-5, 3), 2) == Rational(10, 9));
  }

  TEST_CASE("negative length is rejected") { CHECK_THROWS_AS(pochhammer(Rational(1), -1), DomainError); }

  TEST_CASE("property: (z)_{n+1} = (z)_n (z+n)") {
    testing::Gen gen(11);
    for (int trial = 0; trial < 300; ++trial) {
      Rational z = gen.rational(12);
      long n = gen.integer(0, 15);
      CHECK(pochhammer(z, n + 1) == pochhammer(z, n) * (z + Rational(n)));
    }
  }

  TEST_CASE("property: (-k)_j vanishes exactly when 0 <= k < j") {
    for (int k = 0; k <= 12; ++k)
      for (int j = 0; j <= 12; ++j) CHECK((pochhammer(Rational(-k), j).is_zero()) == (k < j));
  }
}

TEST_SUITE("binomial") {
  TEST_CASE("examples") {
    CHECK(binomial(5, 2) == Rational(10));
    CHECK(binomial(5, 6) == Rational(0));
    CHECK(binomial(5, -1) == Rational(0));
    CHECK(binomial(0, 0) == Rational(1));
    CHECK_THROWS_AS(binomial(-1, 0), DomainError);
  }

  TEST_CASE("property: Pascal's rule") {
    for (long n = 1; n <= 40; ++n)
      for (long k = -1; k <= n + 1; ++k)
        CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  }
}

TEST_SUITE("factorial") {
  TEST_CASE("table values") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    warm_factorials(60);
    BigInt expected = 1;
    for (int i = 2; i <= 60; ++i) expected *= i;
    CHECK(factorial(60) == expected);
    CHECK_THROWS_AS(factorial(-1), DomainError);
  }
}

TEST_SUITE("gamma_ratio") {
  TEST_CASE("examples") {
    CHECK(gamma_ratio(Rational(7, 2), Rational(3, 2)) == Rational(15, 4));
    CHECK(gamma_ratio(Rational(3, 2), Rational(3, 2)) == Rational(1));
    CHECK(gamma_ratio(Rational(1, 2), Rational(5, 2)) == Rational(4, 3));
  }

  TEST_CASE("non-integer difference is rejected") {
    CHECK_THROWS_AS(gamma_ratio(Rational(1, 2), Rational(1)), DomainError);
  }

  TEST_CASE("strict handling refuses any pole") {
    CHECK_THROWS_AS(gamma_ratio(Rational(3), Rational(-1)), PoleError);
    CHECK_THROWS_AS(gamma_ratio(Rational(-2), Rational(-4)), PoleError);
    CHECK_THROWS_AS(gamma_ratio(Rational(0), Rational(2)), PoleError);
  }

  TEST_CASE("limit handling") {
    // Denominator pole alone: 1/Γ(-1) = 0.
    CHECK(gamma_ratio(Rational(3), Rational(-1), PoleHandling::limit) == Rational(0));
    // Γ(-p)/Γ(-q) -> (-1)^{p+q} q!/p!
    for (int p = 0; p <= 6; ++p)
      for (int q = 0; q <= 6; ++q) {
        Rational expected(factorial(q), factorial(p));
        if ((p + q) % 2) expected = -expected;
        CHECK(gamma_ratio(Rational(-p), Rational(-q), PoleHandling::limit) == expected);
      }
    // Numerator pole alone stays infinite.
    CHECK_THROWS_AS(gamma_ratio(Rational(-1), Rational(2), PoleHandling::limit), PoleError);
  }

  TEST_CASE("property: Γ(a)/Γ(b) * Γ(b)/Γ(a) = 1 when finite") {
    testing::Gen gen(5);
    for (int trial = 0; trial < 300; ++trial) {
      Rational a = gen.rational(8);
      Rational b = a + Rational(gen.integer(-8, 8));
      if (a.is_nonpositive_integer() || b.is_nonpositive_integer()) continue;
      CHECK(gamma_ratio(a, b) * gamma_ratio(b, a) == Rational(1));
    }
  }

  TEST_CASE("half-integer ratios agree with the factorial closed form") {
    // Γ(n+1/2)/Γ(1/2) = (2n)!/(4^n n!)
    for (int n = 0; n <= 15; ++n) {
      BigInt den = factorial(n);
      den <<= 2 * n;
      CHECK(gamma_ratio(Rational(2L * n + 1, 2), Rational(1, 2)) == Rational(factorial(2 * n), den));
    }
  }
}
