/*
 * Copyright 2026 The besselin Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <compare>
#include <map>
#include <string>

#include "besselin/rational.hpp"
#include "besselin/unipoly.hpp"

namespace besselin {

struct Exponents {
  int e1 = 0;  // power of a1
  int e2 = 0;  // power of a2
  friend auto operator<=>(const Exponents&, const Exponents&) = default;
};

/// Laurent polynomial in a1, a2 with rational coefficients.
///
/// Sparse map from exponent pair to a nonzero coefficient, iterated in
/// lexicographic (e1, e2) order. Zero terms are pruned on every update, so
/// operator== is mathematical equality.
class BiLaurent {
 public:
  using Terms = std::map<Exponents, Rational>;

  BiLaurent() = default;
  BiLaurent(const Rational& constant);  // NOLINT(google-explicit-constructor)

  static BiLaurent monomial(const Rational& c, int e1, int e2);
  static BiLaurent a1() { return monomial(1, 1, 0); }
  static BiLaurent a2() { return monomial(1, 0, 1); }

  // Adds c * a1^e1 * a2^e2, dropping the term if it cancels.
  void add_term(int e1, int e2, const Rational& c);

  const Terms& terms() const noexcept { return terms_; }
  Rational coefficient(int e1, int e2) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_polynomial() const noexcept;
  // Largest e1 + e2 over the terms; -1 for zero.
  int total_degree() const noexcept;

  BiLaurent& operator+=(const BiLaurent& o);
  BiLaurent& operator-=(const BiLaurent& o);
  BiLaurent& operator*=(const BiLaurent& o) { return *this = *this * o; }
  BiLaurent& operator*=(const Rational& s);

  friend BiLaurent operator+(BiLaurent a, const BiLaurent& b) { return a += b; }
  friend BiLaurent operator-(BiLaurent a, const BiLaurent& b) { return a -= b; }
  friend BiLaurent operator*(const BiLaurent& a, const BiLaurent& b);
  friend BiLaurent operator*(BiLaurent a, const Rational& s) { return a *= s; }
  friend BiLaurent operator*(const Rational& s, BiLaurent a) { return a *= s; }
  BiLaurent operator-() const { return *this * Rational(-1); }

  friend bool operator==(const BiLaurent&, const BiLaurent&) = default;

 private:
  Terms terms_;
};

BiLaurent biladd(const BiLaurent& p, const BiLaurent& q);
BiLaurent bilmul(const BiLaurent& p, const BiLaurent& q);
BiLaurent bilscale(const BiLaurent& p, const Rational& s);

// p^e for e >= 0; monomials may carry negative exponents.
BiLaurent bilpow(const BiLaurent& p, int e);

/// Exact value at a1 = v1, a2 = v2. DivisionByZero when a negative exponent
/// meets a zero value.
Rational substitute(const BiLaurent& p, const Rational& v1, const Rational& v2);

/// Returns p when every exponent is >= 0, otherwise throws NotPolynomial with
/// the offending terms.
BiLaurent assert_polynomial(const BiLaurent& p);

/// p(a2, a1).
BiLaurent swap_variables(const BiLaurent& p);

/// Restriction to the line a1 = a, a2 = 1 - a, as a polynomial in a.
/// Requires p to be a polynomial (NotPolynomial otherwise).
UniPoly<Rational> restrict_to_line(const BiLaurent& p);

/// Maps the coefficient of u^k to coefficient * c^k, i.e. builds p(c u).
UniPoly<BiLaurent> uniscale_arg(const UniPoly<Rational>& p, const BiLaurent& c);

/// Canonical text: terms in (e1, e2) order rendered as num/den*a1^e1*a2^e2
/// with unit parts suppressed, joined by " + " / " - ". Zero renders as "0".
std::string to_string(const BiLaurent& p);

}  // namespace besselin
