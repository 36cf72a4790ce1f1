/*
 * Copyright 2026 The besselin Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "besselin/besselin.h"

namespace {

struct Owned {
  char* p = nullptr;
  ~Owned() { bl_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

}  // namespace

TEST_CASE("status strings and version") {
  CHECK(std::string(bl_version()) == "1.0.0");
  CHECK(std::string(bl_status_string(BL_OK)) == "ok");
  CHECK(std::string(bl_status_string(BL_ERR_PARSE)) == "parse error");
}

TEST_CASE("name parsing") {
  bl_engine e;
  CHECK(bl_parse_engine("hypergeometric", &e) == BL_OK);
  CHECK(e == BL_ENGINE_HYPERGEOMETRIC);
  CHECK(bl_parse_engine("bogus", &e) == BL_ERR_INVALID_ARGUMENT);
  CHECK(std::string(bl_last_error()).find("engine") != std::string::npos);
  bl_format f;
  CHECK(bl_parse_format("json", &f) == BL_OK);
  CHECK(f == BL_FORMAT_JSON);
  bl_suite s;
  CHECK(bl_parse_suite("berg-vignat", &s) == BL_OK);
  CHECK(s == BL_SUITE_BERG_VIGNAT);
  CHECK(bl_parse_suite(nullptr, &s) == BL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("rational literals") {
  Owned out;
  CHECK(bl_rational_normalize("6/-4", &out.p) == BL_ERR_PARSE);
  CHECK(bl_rational_normalize("-6/4", &out.p) == BL_OK);
  CHECK(out.str() == "-3/2");
  Owned bad;
  CHECK(bl_rational_normalize("1/0", &bad.p) == BL_ERR_PARSE);
  CHECK(bad.p == nullptr);
}

TEST_CASE("tables") {
  bl_table t = nullptr;
  REQUIRE(bl_table_create(3, 5, BL_ENGINE_CLOSED_FORM, &t) == BL_OK);
  int n = 0, m = 0;
  CHECK(bl_table_degrees(t, &n, &m) == BL_OK);
  CHECK(n == 3);
  CHECK(m == 5);
  {
    Owned c;
    CHECK(bl_table_coefficient(t, 8, &c.p) == BL_OK);
    CHECK(c.str() == "143*a1^3*a2^5");
    Owned c0;
    CHECK(bl_table_coefficient(t, 0, &c0.p) == BL_OK);
    CHECK(c0.str() == "1 - a2 - a1");
    Owned none;
    CHECK(bl_table_coefficient(t, 9, &none.p) == BL_ERR_INVALID_ARGUMENT);
  }

  bl_table oracle = nullptr;
  REQUIRE(bl_table_create(3, 5, BL_ENGINE_ORACLE, &oracle) == BL_OK);
  int equal = 0;
  CHECK(bl_table_equal(t, oracle, &equal) == BL_OK);
  CHECK(equal == 1);

  Owned json;
  REQUIRE(bl_table_render(oracle, BL_FORMAT_JSON, &json.p) == BL_OK);
  bl_table back = nullptr;
  REQUIRE(bl_table_from_json(json.p, &back) == BL_OK);
  CHECK(bl_table_equal(back, oracle, &equal) == BL_OK);
  CHECK(equal == 1);
  Owned again;
  CHECK(bl_table_render(back, BL_FORMAT_JSON, &again.p) == BL_OK);
  CHECK(again.str() == json.str());

  bl_table_free(back);
  bl_table_free(oracle);
  bl_table_free(t);
}

TEST_CASE("evaluated tables") {
  bl_table t = nullptr, at = nullptr;
  REQUIRE(bl_table_create(1, 1, BL_ENGINE_ORACLE, &t) == BL_OK);
  REQUIRE(bl_table_evaluate(t, "1", "1", &at) == BL_OK);
  Owned text;
  CHECK(bl_table_render(at, BL_FORMAT_TEXT, &text.p) == BL_OK);
  CHECK(text.str() == "# n=1 m=1 engine=oracle\nk=0: -1\nk=1: -1\nk=2: 3\n");
  bl_table bad = nullptr;
  CHECK(bl_table_evaluate(t, "x", "1", &bad) == BL_ERR_PARSE);
  CHECK(bad == nullptr);
  bl_table_free(at);
  bl_table_free(t);
}

TEST_CASE("error statuses") {
  bl_table t = nullptr;
  CHECK(bl_table_create(-1, 0, BL_ENGINE_ORACLE, &t) == BL_ERR_INVALID_ARGUMENT);
  CHECK(bl_table_create(0, 0, BL_ENGINE_ORACLE, nullptr) == BL_ERR_INVALID_ARGUMENT);
  CHECK(bl_table_from_json("{}", &t) == BL_ERR_PARSE);
  CHECK(t == nullptr);
  int n, m;
  CHECK(bl_table_degrees(nullptr, &n, &m) == BL_ERR_INVALID_ARGUMENT);
  bl_table_free(nullptr);
  bl_report_free(nullptr);
  bl_string_free(nullptr);
}

TEST_CASE("verification") {
  bl_report r = nullptr;
  REQUIRE(bl_verify(BL_SUITE_ORACLE, 2, 2, 2, &r) == BL_OK);
  size_t pass = 0, fail = 1, notes = 1;
  CHECK(bl_report_counts(r, &pass, &fail, &notes) == BL_OK);
  CHECK(pass > 0);
  CHECK(fail == 0);
  CHECK(notes == 0);
  Owned text;
  CHECK(bl_report_render(r, BL_FORMAT_TEXT, &text.p) == BL_OK);
  CHECK(text.str().find("summary: pass=") != std::string::npos);
  bl_report_free(r);
  CHECK(bl_verify(BL_SUITE_ALL, -1, 2, 1, &r) == BL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("reduction") {
  Owned out;
  int equal = 0;
  REQUIRE(bl_reduce(1, 1, 1, "1/2", BL_FORMAT_TEXT, &out.p, &equal) == BL_OK);
  CHECK(equal == 1);
  CHECK(out.str().find("LHS=1\n") != std::string::npos);
  Owned none;
  CHECK(bl_reduce(1, 1, 1, "1", BL_FORMAT_TEXT, &none.p, &equal) == BL_ERR_DOMAIN);
  CHECK(bl_reduce(1, 1, 1, "1/", BL_FORMAT_TEXT, &none.p, &equal) == BL_ERR_PARSE);
  CHECK(bl_reduce(1, 1, 1, nullptr, BL_FORMAT_TEXT, &none.p, &equal) == BL_ERR_INVALID_ARGUMENT);
}
