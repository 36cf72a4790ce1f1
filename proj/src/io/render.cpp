/*
 * Copyright 2026 The besselin Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "besselin/render.hpp"

#include <sstream>

#include <json.hpp>

#include "besselin/errors.hpp"

namespace besselin {

using ordered_json = nlohmann::ordered_json;

const char* to_string(Format f) noexcept {
  switch (f) {
    case Format::text: return "text";
    case Format::json: return "json";
    case Format::csv: return "csv";
  }
  return "unknown";
}

std::optional<Format> parse_format(std::string_view name) noexcept {
  for (Format f : {Format::text, Format::json, Format::csv})
    if (name == to_string(f)) return f;
  return std::nullopt;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

ordered_json table_json(const LinTable& t) {
  ordered_json coeffs = ordered_json::array();
  for (std::size_t k = 0; k < t.coeffs.size(); ++k) {
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : t.coeffs[k].terms()) {
      terms.push_back({{"e1", e.e1},
                       {"e2", e.e2},
                       {"num", c.numerator().get_str()},
                       {"den", c.denominator().get_str()}});
    }
    coeffs.push_back({{"k", k}, {"terms", std::move(terms)}});
  }
  return {{"n", t.n}, {"m", t.m}, {"coeffs", std::move(coeffs)}};
}

ordered_json record_json(const CheckRecord& r) {
  return {{"id", r.id},         {"n", r.n},
          {"m", r.m},           {"k", r.k},
          {"point", r.point},   {"status", to_string(r.status)},
          {"detail", r.detail}};
}

[[noreturn]] void bad_json(const std::string& what) {
  throw ParseError("coefficient table JSON: " + what);
}

const ordered_json& field(const ordered_json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) bad_json(std::string("missing key '") + key + "'");
  return obj.at(key);
}

int int_field(const ordered_json& obj, const char* key) {
  const auto& v = field(obj, key);
  if (!v.is_number_integer()) bad_json(std::string("'") + key + "' must be an integer");
  return v.get<int>();
}

BigInt digits_field(const ordered_json& obj, const char* key) {
  const auto& v = field(obj, key);
  if (!v.is_string()) bad_json(std::string("'") + key + "' must be a decimal string");
  const auto s = v.get<std::string>();
  Rational r;
  try {
    r = Rational::parse(s);
  } catch (const ParseError&) {
    bad_json("'" + s + "' is not a decimal integer");
  }
  if (!r.is_integer() || s.find('/') != std::string::npos || s.front() == '+')
    bad_json("'" + s + "' is not a decimal integer");
  BigInt out = r.numerator();
  // Canonical decimal only: no leading zeros, no "-0".
  if (out.get_str() != s) bad_json("'" + s + "' is not in canonical decimal form");
  return out;
}

}  // namespace

std::string render_table(const LinTable& t, Format f) {
  switch (f) {
    case Format::json:
      return table_json(t).dump(2) + "\n";
    case Format::csv: {
      std::ostringstream os;
      os << "k,e1,e2,num,den\n";
      for (std::size_t k = 0; k < t.coeffs.size(); ++k)
        for (const auto& [e, c] : t.coeffs[k].terms())
          os << k << ',' << e.e1 << ',' << e.e2 << ',' << c.numerator().get_str() << ','
             << c.denominator().get_str() << '\n';
      return os.str();
    }
    case Format::text: {
      std::ostringstream os;
      os << "# n=" << t.n << " m=" << t.m << " engine=" << to_string(t.engine) << '\n';
      for (std::size_t k = 0; k < t.coeffs.size(); ++k)
        os << "k=" << k << ": " << to_string(t.coeffs[k]) << '\n';
      return os.str();
    }
  }
  return {};
}

LinTable table_from_json(std::string_view json) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    bad_json(e.what());
  }
  LinTable t;
  t.n = int_field(doc, "n");
  t.m = int_field(doc, "m");
  if (t.n < 0 || t.m < 0) bad_json("n and m must be nonnegative");
  const auto& coeffs = field(doc, "coeffs");
  if (!coeffs.is_array() || coeffs.size() != static_cast<std::size_t>(t.n + t.m) + 1)
    bad_json("'coeffs' must hold n+m+1 entries");
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (int_field(coeffs[k], "k") != static_cast<int>(k)) bad_json("entries must be ordered by k");
    const auto& terms = field(coeffs[k], "terms");
    if (!terms.is_array()) bad_json("'terms' must be an array");
    BiLaurent p;
    std::optional<Exponents> prev;
    for (const auto& term : terms) {
      Exponents e{int_field(term, "e1"), int_field(term, "e2")};
      if (prev && !(*prev < e)) bad_json("terms must be strictly sorted by (e1, e2)");
      prev = e;
      BigInt num = digits_field(term, "num");
      BigInt den = digits_field(term, "den");
      if (den <= 0) bad_json("denominator must be positive");
      if (num == 0) bad_json("zero coefficients are not stored");
      Rational c(num, den);
      if (c.numerator() != num) bad_json("fraction not in lowest terms");
      p.add_term(e.e1, e.e2, c);
    }
    t.coeffs.push_back(std::move(p));
  }
  return t;
}

std::string render_report(const Report& r, Format f) {
  const ReportCounts c = count(r);
  switch (f) {
    case Format::json: {
      ordered_json records = ordered_json::array();
      for (const auto& rec : r) records.push_back(record_json(rec));
      ordered_json doc{{"records", std::move(records)},
                       {"summary", {{"pass", c.pass}, {"fail", c.fail}, {"notes", c.notes}}}};
      return doc.dump(2) + "\n";
    }
    case Format::csv: {
      std::ostringstream os;
      os << "id,n,m,k,point,status,detail\n";
      for (const auto& rec : r)
        os << rec.id << ',' << rec.n << ',' << rec.m << ',' << rec.k << ',' << csv_field(rec.point)
           << ',' << to_string(rec.status) << ',' << csv_field(rec.detail) << '\n';
      return os.str();
    }
    case Format::text: {
      std::ostringstream os;
      for (const auto& rec : r) {
        os << (rec.status == CheckStatus::pass ? "PASS" : rec.status == CheckStatus::fail ? "FAIL" : "NOTE")
           << ' ' << rec.id << " (n,m,k)=(" << rec.n << ',' << rec.m << ',' << rec.k << ')';
        if (!rec.point.empty()) os << " a=" << rec.point;
        if (!rec.detail.empty()) os << "  " << rec.detail;
        os << '\n';
      }
      os << "summary: pass=" << c.pass << " fail=" << c.fail << " notes=" << c.notes << '\n';
      return os.str();
    }
  }
  return {};
}

std::string render_reduction(const Reduction& r, Format f) {
  switch (f) {
    case Format::json: {
      ordered_json sides = ordered_json::array();
      for (const auto& s : r.sides) {
        sides.push_back({{"branch", s.branch},
                         {"lhs", s.lhs ? ordered_json(s.lhs->to_string()) : ordered_json(nullptr)},
                         {"regularized", s.regularized},
                         {"equal", s.equal},
                         {"error", s.error}});
      }
      ordered_json doc{{"n", r.n},       {"m", r.m},
                       {"k", r.k},       {"a", r.a.to_string()},
                       {"rhs", r.rhs.to_string()}, {"sides", std::move(sides)},
                       {"equal", r.all_equal()}};
      return doc.dump(2) + "\n";
    }
    case Format::csv: {
      std::ostringstream os;
      os << "n,m,k,a,branch,lhs,rhs,regularized,equal\n";
      for (const auto& s : r.sides)
        os << r.n << ',' << r.m << ',' << r.k << ',' << r.a.to_string() << ',' << s.branch << ','
           << (s.lhs ? s.lhs->to_string() : "") << ',' << r.rhs.to_string() << ','
           << (s.regularized ? 1 : 0) << ',' << (s.equal ? 1 : 0) << '\n';
      return os.str();
    }
    case Format::text: {
      std::ostringstream os;
      os << "(n,m,k)=(" << r.n << ',' << r.m << ',' << r.k << ") a=" << r.a.to_string() << '\n';
      for (const auto& s : r.sides) {
        os << "branch: " << s.branch << '\n';
        os << "  LHS=" << (s.lhs ? s.lhs->to_string() : "undefined") << '\n';
        os << "  RHS=" << r.rhs.to_string() << '\n';
        if (s.regularized) os << "  note: gamma poles resolved by the Pochhammer-product limit\n";
        if (!s.error.empty()) os << "  error: " << s.error << '\n';
        os << "  " << (s.equal ? "equal" : "NOT equal") << '\n';
      }
      return os.str();
    }
  }
  return {};
}

}  // namespace besselin
