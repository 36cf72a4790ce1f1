/*
 * Copyright 2026 The besselin Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "besselin/linearization.hpp"
#include "besselin/rational.hpp"
#include "besselin/report.hpp"

namespace besselin {

enum class Suite { all, recurrence, oracle, berg_vignat, hypergeometric };

const char* to_string(Suite s) noexcept;
std::optional<Suite> parse_suite(std::string_view name) noexcept;

struct SuiteOptions {
  int max_n = 0;
  int max_m = 0;
  unsigned jobs = 1;
  // Engine whose tables feed the recurrence and Berg-Vignat checks.
  Engine engine = Engine::hypergeometric;
};

/// Runs one suite (or all of them) over the (n, m) grid.
///
///   oracle          engines agree, symmetry under (n,a1) <-> (m,a2), top coefficient;
///                   0 <= n <= max_n, 0 <= m <= max_m
///   recurrence      q-basis three-term and derivative recurrences for degrees
///                   1..max_n+max_m, then the shift recurrences on 1..max_n x 1..max_m
///   berg-vignat     berg_vignat_check on 1..max_n x 1..max_m
///   hypergeometric  verify_reduction on 1..max_n x 1..max_m at reduction_samples()
///
/// Work is split per (suite, n, m) item across `jobs` threads and merged in
/// item order, so the report does not depend on the worker count.
Report run_suite(Suite suite, const SuiteOptions& options);

/// One evaluated side of the 3F2 -> 2F1 reduction.
struct ReductionSide {
  std::string branch;            // "upper" or "lower"
  std::optional<Rational> lhs;   // empty when no gamma convention is finite
  bool regularized = false;      // gamma poles resolved by the limit convention
  std::string error;
  bool equal = false;
};

struct Reduction {
  int n = 0, m = 0, k = 0;
  Rational a;
  Rational rhs;
  std::vector<ReductionSide> sides;  // one per branch containing k
  bool all_equal() const noexcept;
};

/// Evaluates every applicable branch of the reduction at (n, m, k, a).
/// DomainError when a is 0 or 1, or k is outside 0..n+m.
Reduction reduce_identity(int n, int m, int k, const Rational& a);

}  // namespace besselin
