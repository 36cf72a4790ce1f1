/*
 * Copyright 2026 The besselin Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "besselin/report.hpp"

#include "besselin/errors.hpp"

namespace besselin {

const char* to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::pole_convention_note: return "pole-convention-note";
  }
  return "unknown";
}

ReportCounts count(const Report& r) noexcept {
  ReportCounts c;
  for (const auto& rec : r) {
    switch (rec.status) {
      case CheckStatus::pass: ++c.pass; break;
      case CheckStatus::fail: ++c.fail; break;
      case CheckStatus::pole_convention_note: ++c.notes; break;
    }
  }
  return c;
}

void require_pass(const Report& r) {
  for (const auto& rec : r)
    if (rec.status == CheckStatus::fail) throw IdentityViolation(rec.n, rec.m, rec.k, rec.detail);
}

}  // namespace besselin
