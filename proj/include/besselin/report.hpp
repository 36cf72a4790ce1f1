/*
 * Copyright 2026 The besselin Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace besselin {

enum class CheckStatus {
  pass,
  fail,
  // Holds, but only after resolving a gamma pole by the limit convention.
  pole_convention_note,
};

const char* to_string(CheckStatus s) noexcept;

struct CheckRecord {
  std::string id;      // e.g. "shift.lower"
  int n = 0, m = 0, k = 0;
  std::string point;   // sample point when the check is pointwise, else empty
  CheckStatus status = CheckStatus::pass;
  std::string detail;  // residual or witness when not a plain pass
};

using Report = std::vector<CheckRecord>;

struct ReportCounts {
  std::size_t pass = 0, fail = 0, notes = 0;
};

ReportCounts count(const Report& r) noexcept;

// Throws IdentityViolation for the first failing record, if any.
void require_pass(const Report& r);

}  // namespace besselin
