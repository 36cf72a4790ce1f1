/*
 * Copyright 2026 The besselin Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "besselin/bilaurent.hpp"

#include <algorithm>

#include "besselin/combinatorics.hpp"
#include "besselin/errors.hpp"

namespace besselin {

BiLaurent::BiLaurent(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Exponents{0, 0}, constant);
}

BiLaurent BiLaurent::monomial(const Rational& c, int e1, int e2) {
  BiLaurent p;
  p.add_term(e1, e2, c);
  return p;
}

void BiLaurent::add_term(int e1, int e2, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Exponents{e1, e2}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Rational BiLaurent::coefficient(int e1, int e2) const {
  auto it = terms_.find(Exponents{e1, e2});
  return it == terms_.end() ? Rational() : it->second;
}

bool BiLaurent::is_polynomial() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.e1 >= 0 && t.first.e2 >= 0; });
}

int BiLaurent::total_degree() const noexcept {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.e1 + e.e2);
  return d;
}

BiLaurent& BiLaurent::operator+=(const BiLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.e1, e.e2, c);
  return *this;
}

BiLaurent& BiLaurent::operator-=(const BiLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.e1, e.e2, -c);
  return *this;
}

BiLaurent& BiLaurent::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

BiLaurent operator*(const BiLaurent& a, const BiLaurent& b) {
  BiLaurent out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea.e1 + eb.e1, ea.e2 + eb.e2, ca * cb);
  return out;
}

BiLaurent biladd(const BiLaurent& p, const BiLaurent& q) { return p + q; }
BiLaurent bilmul(const BiLaurent& p, const BiLaurent& q) { return p * q; }
BiLaurent bilscale(const BiLaurent& p, const Rational& s) { return p * s; }

BiLaurent bilpow(const BiLaurent& p, int e) {
  if (e < 0) throw DomainError("BiLaurent power must be nonnegative");
  BiLaurent r(1);
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

Rational substitute(const BiLaurent& p, const Rational& v1, const Rational& v2) {
  Rational sum;
  for (const auto& [e, c] : p.terms()) {
    if ((e.e1 < 0 && v1.is_zero()) || (e.e2 < 0 && v2.is_zero()))
      throw DivisionByZero("negative exponent evaluated at zero");
    sum += c * pow(v1, e.e1) * pow(v2, e.e2);
  }
  return sum;
}

BiLaurent assert_polynomial(const BiLaurent& p) {
  if (p.is_polynomial()) return p;
  BiLaurent bad;
  for (const auto& [e, c] : p.terms())
    if (e.e1 < 0 || e.e2 < 0) bad.add_term(e.e1, e.e2, c);
  throw NotPolynomial(to_string(bad));
}

BiLaurent swap_variables(const BiLaurent& p) {
  BiLaurent out;
  for (const auto& [e, c] : p.terms()) out.add_term(e.e2, e.e1, c);
  return out;
}

UniPoly<Rational> restrict_to_line(const BiLaurent& p) {
  assert_polynomial(p);
  // a1^e1 (1-a)^e2 = sum_j C(e2, j) (-1)^j a^(e1+j)
  int top = std::max(p.total_degree(), 0);
  std::vector<Rational> coeffs(static_cast<std::size_t>(top) + 1);
  for (const auto& [e, c] : p.terms()) {
    for (int j = 0; j <= e.e2; ++j) {
      Rational t = c * binomial(e.e2, j);
      if (j % 2) t = -t;
      coeffs[static_cast<std::size_t>(e.e1 + j)] += t;
    }
  }
  return UniPoly<Rational>(std::move(coeffs));
}

UniPoly<BiLaurent> uniscale_arg(const UniPoly<Rational>& p, const BiLaurent& c) {
  std::vector<BiLaurent> coeffs;
  coeffs.reserve(p.coeffs().size());
  BiLaurent power(1);
  for (const auto& a : p.coeffs()) {
    coeffs.push_back(power * a);
    power *= c;
  }
  return UniPoly<BiLaurent>(std::move(coeffs));
}

namespace {

void append_power(std::string& out, const char* name, int e) {
  if (e == 0) return;
  if (!out.empty() && out.back() != ' ') out += '*';
  out += name;
  if (e != 1) out += "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const BiLaurent& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    std::string term;
    const bool constant = e.e1 == 0 && e.e2 == 0;
    if (!mag.is_one() || constant) term = mag.to_string();
    append_power(term, "a1", e.e1);
    append_power(term, "a2", e.e2);
    out += term;
  }
  return out;
}

}  // namespace besselin
