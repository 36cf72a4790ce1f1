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

#include "besselin/linearization.hpp"
#include "besselin/report.hpp"
#include "besselin/suite.hpp"

namespace besselin {

enum class Format { text, json, csv };

const char* to_string(Format f) noexcept;
std::optional<Format> parse_format(std::string_view name) noexcept;

// Coefficient tables.
//
// json:  {"n":..,"m":..,"coeffs":[{"k":..,"terms":[{"e1":..,"e2":..,"num":"..","den":".."}]}]}
//        terms in (e1, e2) order, num/den decimal strings in lowest terms, den > 0.
// csv:   header "k,e1,e2,num,den", one row per nonzero term.
// text:  "# n=.. m=.. engine=.." then one "k=..: <canonical polynomial>" line per k.
std::string render_table(const LinTable& t, Format f);

/// Inverse of the json rendering. The engine is not serialized and comes back
/// as Engine::oracle. Throws ParseError on any schema or canonical-form
/// violation (unsorted terms, zero or unreduced fractions, wrong k sequence).
LinTable table_from_json(std::string_view json);

std::string render_report(const Report& r, Format f);

std::string render_reduction(const Reduction& r, Format f);

}  // namespace besselin
