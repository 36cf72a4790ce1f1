/*
 * Copyright 2026 The besselin Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

// besselin: batch front end over the besselin C API.
//
//   besselin coeffs --n 3 --m 5 [--a1 p/q --a2 p/q] [--engine oracle] [--format text|json|csv]
//   besselin verify --suite all|recurrence|oracle|berg-vignat|hypergeometric
//                   --max-n N --max-m M [--jobs J] [--format ...]
//   besselin reduce --n N --m M --k K --a p/q [--format ...]
//
// Exit codes: 0 success / every check passed, 1 a check or identity failed
// (or a domain error), 2 usage error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "besselin/besselin.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Owns a string returned through the C API.
struct CString {
  char* p = nullptr;
  ~CString() { bl_string_free(p); }
  CString() = default;
  CString(const CString&) = delete;
  CString& operator=(const CString&) = delete;
};

int usage(const std::string& message) {
  std::cerr << "usage error: " << message << '\n';
  return kExitUsage;
}

int report_status(bl_status s) {
  std::cerr << "error: " << bl_status_string(s) << ": " << bl_last_error() << '\n';
  return s == BL_ERR_PARSE || s == BL_ERR_INVALID_ARGUMENT ? kExitUsage : kExitFailure;
}

struct Common {
  std::string format = "text";
  int cap = 16;
};

bool resolve_format(const Common& c, bl_format& out) {
  return bl_parse_format(c.format.c_str(), &out) == BL_OK;
}

struct CoeffsArgs {
  int n = -1, m = -1;
  std::optional<std::string> a1, a2;
  std::string engine = "oracle";
};

int run_coeffs(const CoeffsArgs& args, const Common& common) {
  bl_format format;
  if (!resolve_format(common, format)) return usage("unknown --format '" + common.format + "'");
  bl_engine engine;
  if (bl_parse_engine(args.engine.c_str(), &engine) != BL_OK)
    return usage("unknown --engine '" + args.engine + "'");
  if (args.n < 0 || args.m < 0) return usage("--n and --m must be nonnegative");
  if (args.n > common.cap || args.m > common.cap)
    return usage("--n/--m exceed the cap of " + std::to_string(common.cap));
  if (args.a1.has_value() != args.a2.has_value())
    return usage("--a1 and --a2 must be given together");

  bl_table table = nullptr;
  if (bl_status s = bl_table_create(args.n, args.m, engine, &table); s != BL_OK)
    return report_status(s);
  if (args.a1) {
    bl_table point = nullptr;
    bl_status s = bl_table_evaluate(table, args.a1->c_str(), args.a2->c_str(), &point);
    bl_table_free(table);
    if (s != BL_OK) return report_status(s);
    table = point;
  }
  CString out;
  bl_status s = bl_table_render(table, format, &out.p);
  bl_table_free(table);
  if (s != BL_OK) return report_status(s);
  std::fputs(out.p, stdout);
  return kExitOk;
}

struct VerifyArgs {
  std::string suite = "all";
  int max_n = 4, max_m = 4;
  unsigned jobs = 1;
};

int run_verify(const VerifyArgs& args, const Common& common) {
  bl_format format;
  if (!resolve_format(common, format)) return usage("unknown --format '" + common.format + "'");
  bl_suite suite;
  if (bl_parse_suite(args.suite.c_str(), &suite) != BL_OK)
    return usage("unknown --suite '" + args.suite + "'");
  if (args.max_n < 0 || args.max_m < 0) return usage("grid bounds must be nonnegative");
  if (args.max_n > common.cap || args.max_m > common.cap)
    return usage("grid bounds exceed the cap of " + std::to_string(common.cap));
  if (args.jobs == 0) return usage("--jobs must be at least 1");

  bl_report report = nullptr;
  if (bl_status s = bl_verify(suite, args.max_n, args.max_m, args.jobs, &report); s != BL_OK)
    return report_status(s);
  CString out;
  std::size_t pass = 0, fail = 0, notes = 0;
  bl_status s = bl_report_render(report, format, &out.p);
  if (s == BL_OK) s = bl_report_counts(report, &pass, &fail, &notes);
  bl_report_free(report);
  if (s != BL_OK) return report_status(s);
  std::fputs(out.p, stdout);
  return fail == 0 ? kExitOk : kExitFailure;
}

struct ReduceArgs {
  int n = -1, m = -1, k = -1;
  std::string a;
};

int run_reduce(const ReduceArgs& args, const Common& common) {
  bl_format format;
  if (!resolve_format(common, format)) return usage("unknown --format '" + common.format + "'");
  if (args.n < 0 || args.m < 0) return usage("--n and --m must be nonnegative");
  if (args.n > common.cap || args.m > common.cap)
    return usage("--n/--m exceed the cap of " + std::to_string(common.cap));
  CString out;
  int equal = 0;
  if (bl_status s = bl_reduce(args.n, args.m, args.k, args.a.c_str(), format, &out.p, &equal);
      s != BL_OK)
    return report_status(s);
  std::fputs(out.p, stdout);
  return equal ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact linearization coefficients of Bessel polynomials"};
  app.require_subcommand(1);
  Common common;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "text, json or csv")->capture_default_str();
    sub->add_option("--cap", common.cap, "hard cap on degrees and grid bounds")
        ->capture_default_str();
  };

  CoeffsArgs coeffs;
  std::string a1, a2;
  auto* c = app.add_subcommand("coeffs", "Print beta_k^(n,m)(a1,a2) for k = 0..n+m");
  c->add_option("--n", coeffs.n, "degree of the first factor")->required();
  c->add_option("--m", coeffs.m, "degree of the second factor")->required();
  auto* a1_opt = c->add_option("--a1", a1, "evaluate at a1 (rational literal p/q)");
  auto* a2_opt = c->add_option("--a2", a2, "evaluate at a2 (rational literal p/q)");
  c->add_option("--engine", coeffs.engine, "oracle, closed_form or hypergeometric")
      ->capture_default_str();
  add_common(c);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run a verification suite over an (n,m) grid");
  v->add_option("--suite", verify.suite, "all, recurrence, oracle, berg-vignat, hypergeometric")
      ->capture_default_str();
  v->add_option("--max-n", verify.max_n, "largest n in the grid")->capture_default_str();
  v->add_option("--max-m", verify.max_m, "largest m in the grid")->capture_default_str();
  v->add_option("--jobs", verify.jobs, "worker threads")->capture_default_str();
  add_common(v);

  ReduceArgs reduce;
  auto* r = app.add_subcommand("reduce", "Evaluate both sides of the 3F2 -> 2F1 reduction");
  r->add_option("--n", reduce.n)->required();
  r->add_option("--m", reduce.m)->required();
  r->add_option("--k", reduce.k)->required();
  r->add_option("--a", reduce.a, "rational literal p/q, not 0 or 1")->required();
  add_common(r);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*c) {
    if (*a1_opt) coeffs.a1 = a1;
    if (*a2_opt) coeffs.a2 = a2;
    return run_coeffs(coeffs, common);
  }
  if (*v) return run_verify(verify, common);
  return run_reduce(reduce, common);
}
