/*
 * Copyright 2026 The besselin Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include "besselin/errors.hpp"
#include "besselin/render.hpp"
#include "besselin/suite.hpp"

using namespace besselin;

TEST_SUITE("suite") {
  TEST_CASE("reports do not depend on the worker count") {
    for (Suite s : {Suite::oracle, Suite::recurrence, Suite::berg_vignat, Suite::hypergeometric}) {
      CAPTURE(to_string(s));
      SuiteOptions one{3, 3, 1};
      SuiteOptions four{3, 3, 4};
      const auto a = render_report(run_suite(s, one), Format::csv);
      const auto b = render_report(run_suite(s, four), Format::csv);
      CHECK(a == b);
    }
  }

  TEST_CASE("all is the concatenation of the individual suites") {
    SuiteOptions opt{2, 2, 2};
    std::size_t total = 0;
    for (Suite s : {Suite::recurrence, Suite::oracle, Suite::berg_vignat, Suite::hypergeometric})
      total += run_suite(s, opt).size();
    const auto all = run_suite(Suite::all, opt);
    CHECK(all.size() == total);
    CHECK(count(all).fail == 0);
  }

  TEST_CASE("smallest grids") {
    const auto r = run_suite(Suite::recurrence, {1, 1, 1});
    bool saw_shift = false;
    for (const auto& rec : r) saw_shift |= rec.id.rfind("shift.", 0) == 0 && rec.n == 1 && rec.m == 1;
    CHECK(saw_shift);
    CHECK(count(r).fail == 0);
    CHECK(count(run_suite(Suite::oracle, {0, 0, 1})).pass > 0);
  }

  TEST_CASE("reduction at the hand-derived point") {
    const auto r = reduce_identity(1, 1, 1, Rational(1, 2));
    REQUIRE(r.sides.size() == 1);
    CHECK(r.sides[0].branch == "upper");
    CHECK(r.sides[0].lhs == Rational(1));
    CHECK(r.rhs == Rational(1));
    CHECK(r.all_equal());
    CHECK(render_reduction(r, Format::text) ==
          "(n,m,k)=(1,1,1) a=1/2\n"
          "branch: upper\n"
          "  LHS=1\n"
          "  RHS=1\n"
          "  equal\n");
  }

  TEST_CASE("reduction on both branches and with the limit convention") {
    const auto both = reduce_identity(2, 1, 1, Rational(1, 3));
    CHECK(both.sides.size() == 2);
    CHECK(both.all_equal());

    const auto lower = reduce_identity(2, 2, 1, Rational(1, 3));
    REQUIRE(lower.sides.size() == 1);
    CHECK(lower.sides[0].branch == "lower");
    CHECK(lower.sides[0].regularized);
    CHECK(lower.all_equal());

    CHECK(reduce_identity(3, 5, 8, Rational(1, 3)).all_equal());
  }

  TEST_CASE("reduction domain") {
    CHECK_THROWS_AS(reduce_identity(1, 1, 1, Rational(0)), DomainError);
    CHECK_THROWS_AS(reduce_identity(1, 1, 1, Rational(1)), DomainError);
    CHECK_THROWS_AS(reduce_identity(1, 1, 3, Rational(1, 2)), DomainError);
  }

  TEST_CASE("suite names") {
    CHECK(parse_suite("berg-vignat") == Suite::berg_vignat);
    CHECK(std::string(to_string(Suite::hypergeometric)) == "hypergeometric");
    CHECK_FALSE(parse_suite("everything").has_value());
  }
}
