/*
 * Copyright 2026 The besselin Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "besselin/besselin.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "besselin/errors.hpp"
#include "besselin/linearization.hpp"
#include "besselin/render.hpp"
#include "besselin/suite.hpp"

struct bl_table_s {
  besselin::LinTable table;
};

struct bl_report_s {
  besselin::Report report;
};

namespace {

thread_local std::string last_error;

bl_status fail(bl_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

struct InvalidArgument : besselin::Error {
  using Error::Error;
};

// Runs f, translating every core exception into a status code.
template <class F>
bl_status call(F&& f) noexcept {
  using namespace besselin;
  try {
    f();
    last_error.clear();
    return BL_OK;
  } catch (const InvalidArgument& e) {
    return fail(BL_ERR_INVALID_ARGUMENT, e.what());
  } catch (const ParseError& e) {
    return fail(BL_ERR_PARSE, e.what());
  } catch (const PoleError& e) {
    return fail(BL_ERR_POLE, e.what());
  } catch (const DivisionByZero& e) {
    return fail(BL_ERR_DIVISION_BY_ZERO, e.what());
  } catch (const NotPolynomial& e) {
    return fail(BL_ERR_NOT_POLYNOMIAL, e.what());
  } catch (const LowerParameterPole& e) {
    return fail(BL_ERR_LOWER_PARAMETER_POLE, e.what());
  } catch (const DomainError& e) {
    return fail(BL_ERR_DOMAIN, e.what());
  } catch (const IdentityViolation& e) {
    return fail(BL_ERR_IDENTITY, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(BL_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(what);
}

besselin::Engine to_engine(bl_engine e) {
  switch (e) {
    case BL_ENGINE_ORACLE: return besselin::Engine::oracle;
    case BL_ENGINE_CLOSED_FORM: return besselin::Engine::closed_form;
    case BL_ENGINE_HYPERGEOMETRIC: return besselin::Engine::hypergeometric;
  }
  throw InvalidArgument("unknown engine");
}

besselin::Format to_format(bl_format f) {
  switch (f) {
    case BL_FORMAT_TEXT: return besselin::Format::text;
    case BL_FORMAT_JSON: return besselin::Format::json;
    case BL_FORMAT_CSV: return besselin::Format::csv;
  }
  throw InvalidArgument("unknown format");
}

besselin::Suite to_suite(bl_suite s) {
  switch (s) {
    case BL_SUITE_ALL: return besselin::Suite::all;
    case BL_SUITE_RECURRENCE: return besselin::Suite::recurrence;
    case BL_SUITE_ORACLE: return besselin::Suite::oracle;
    case BL_SUITE_BERG_VIGNAT: return besselin::Suite::berg_vignat;
    case BL_SUITE_HYPERGEOMETRIC: return besselin::Suite::hypergeometric;
  }
  throw InvalidArgument("unknown suite");
}

}  // namespace

extern "C" {

const char* bl_version(void) { return "1.0.0"; }

const char* bl_status_string(bl_status status) {
  switch (status) {
    case BL_OK: return "ok";
    case BL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case BL_ERR_PARSE: return "parse error";
    case BL_ERR_POLE: return "gamma pole";
    case BL_ERR_DIVISION_BY_ZERO: return "division by zero";
    case BL_ERR_NOT_POLYNOMIAL: return "not a polynomial";
    case BL_ERR_LOWER_PARAMETER_POLE: return "lower parameter pole";
    case BL_ERR_DOMAIN: return "domain error";
    case BL_ERR_IDENTITY: return "identity violation";
    case BL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* bl_last_error(void) { return last_error.c_str(); }

void bl_string_free(char* s) { std::free(s); }

bl_status bl_parse_engine(const char* name, bl_engine* out) {
  return call([&] {
    require(name && out, "null pointer");
    auto e = besselin::parse_engine(name);
    require(e.has_value(), "unknown engine");
    *out = *e == besselin::Engine::oracle        ? BL_ENGINE_ORACLE
           : *e == besselin::Engine::closed_form ? BL_ENGINE_CLOSED_FORM
                                                 : BL_ENGINE_HYPERGEOMETRIC;
  });
}

bl_status bl_parse_format(const char* name, bl_format* out) {
  return call([&] {
    require(name && out, "null pointer");
    auto f = besselin::parse_format(name);
    require(f.has_value(), "unknown format");
    *out = static_cast<bl_format>(*f);
  });
}

bl_status bl_parse_suite(const char* name, bl_suite* out) {
  return call([&] {
    require(name && out, "null pointer");
    auto s = besselin::parse_suite(name);
    require(s.has_value(), "unknown suite");
    *out = static_cast<bl_suite>(*s);
  });
}

bl_status bl_rational_normalize(const char* literal, char** out) {
  return call([&] {
    require(literal && out, "null pointer");
    *out = dup_string(besselin::Rational::parse(literal).to_string());
  });
}

bl_status bl_table_create(int n, int m, bl_engine engine, bl_table* out) {
  return call([&] {
    require(out != nullptr, "null pointer");
    require(n >= 0 && m >= 0, "n and m must be nonnegative");
    auto t = besselin::linearize(n, m, to_engine(engine));
    *out = new bl_table_s{std::move(t)};
  });
}

bl_status bl_table_evaluate(bl_table table, const char* a1, const char* a2, bl_table* out) {
  return call([&] {
    require(table && a1 && a2 && out, "null pointer");
    auto v1 = besselin::Rational::parse(a1);
    auto v2 = besselin::Rational::parse(a2);
    *out = new bl_table_s{besselin::evaluate_table(table->table, v1, v2)};
  });
}

bl_status bl_table_from_json(const char* json, bl_table* out) {
  return call([&] {
    require(json && out, "null pointer");
    *out = new bl_table_s{besselin::table_from_json(json)};
  });
}

void bl_table_free(bl_table table) { delete table; }

bl_status bl_table_degrees(bl_table table, int* n, int* m) {
  return call([&] {
    require(table && n && m, "null pointer");
    *n = table->table.n;
    *m = table->table.m;
  });
}

bl_status bl_table_coefficient(bl_table table, int k, char** out) {
  return call([&] {
    require(table && out, "null pointer");
    require(k >= 0 && static_cast<std::size_t>(k) < table->table.coeffs.size(),
            "k outside 0..n+m");
    *out = dup_string(besselin::to_string(table->table.coeffs[static_cast<std::size_t>(k)]));
  });
}

bl_status bl_table_render(bl_table table, bl_format format, char** out) {
  return call([&] {
    require(table && out, "null pointer");
    *out = dup_string(besselin::render_table(table->table, to_format(format)));
  });
}

bl_status bl_table_equal(bl_table a, bl_table b, int* equal) {
  return call([&] {
    require(a && b && equal, "null pointer");
    *equal = a->table.n == b->table.n && a->table.m == b->table.m &&
             a->table.coeffs == b->table.coeffs;
  });
}

bl_status bl_verify(bl_suite suite, int max_n, int max_m, unsigned jobs, bl_report* out) {
  return call([&] {
    require(out != nullptr, "null pointer");
    require(max_n >= 0 && max_m >= 0, "grid bounds must be nonnegative");
    besselin::SuiteOptions opt;
    opt.max_n = max_n;
    opt.max_m = max_m;
    opt.jobs = jobs == 0 ? 1 : jobs;
    auto report = besselin::run_suite(to_suite(suite), opt);
    *out = new bl_report_s{std::move(report)};
  });
}

void bl_report_free(bl_report report) { delete report; }

bl_status bl_report_counts(bl_report report, size_t* pass, size_t* fail_count, size_t* notes) {
  return call([&] {
    require(report && pass && fail_count && notes, "null pointer");
    auto c = besselin::count(report->report);
    *pass = c.pass;
    *fail_count = c.fail;
    *notes = c.notes;
  });
}

bl_status bl_report_render(bl_report report, bl_format format, char** out) {
  return call([&] {
    require(report && out, "null pointer");
    *out = dup_string(besselin::render_report(report->report, to_format(format)));
  });
}

bl_status bl_reduce(int n, int m, int k, const char* a, bl_format format, char** out, int* equal) {
  return call([&] {
    require(a && out && equal, "null pointer");
    auto value = besselin::Rational::parse(a);
    auto r = besselin::reduce_identity(n, m, k, value);
    auto text = besselin::render_reduction(r, to_format(format));
    *out = dup_string(text);
    *equal = r.all_equal() ? 1 : 0;
  });
}

}  // extern "C"
