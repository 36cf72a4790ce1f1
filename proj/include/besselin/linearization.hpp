/*
 * Copyright 2026 The besselin Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "besselin/bilaurent.hpp"
#include "besselin/report.hpp"

namespace besselin {

/// Which route produced a table of linearization coefficients.
enum class Engine {
  oracle,          // expand q_n(a1 u) q_m(a2 u) and back-substitute
  closed_form,     // double-sum formula
  hypergeometric,  // single sum over 3F2 polynomials in a2
};

const char* to_string(Engine e) noexcept;
std::optional<Engine> parse_engine(std::string_view name) noexcept;

/// β_k^{(n,m)}(a1, a2) for k = 0..n+m, defined by
///   q_n(a1 u) q_m(a2 u) = sum_k β_k q_k(u).
struct LinTable {
  int n = 0;
  int m = 0;
  std::vector<BiLaurent> coeffs;
  Engine engine = Engine::oracle;
};

LinTable linearize_oracle(int n, int m);

/// Double-sum closed form, assembled in the Laurent ring and then required
/// to be polynomial (NotPolynomial otherwise).
BiLaurent beta_closed(int n, int m, int k);

/// Single-sum form with the 3F2 factors evaluated as polynomials in a2.
BiLaurent beta_hyp(int n, int m, int k);

LinTable linearize(int n, int m, Engine engine);

/// (1/2)_k / (4^N N! (1/2)_n (1/2)_m), N = n+m-k; the rational part of the
/// prefactor shared by both summation formulas.
Rational linearization_prefactor(int n, int m, int k);

/// (1/2)_{n+m} / ((1/2)_n (1/2)_m), so that β_{n+m} = this * a1^n a2^m.
Rational top_coefficient(int n, int m);

/// Every coefficient evaluated at a1 = v1, a2 = v2; the result is a table of
/// constants with the same engine tag.
LinTable evaluate_table(const LinTable& t, const Rational& v1, const Rational& v2);

/// Three-term recurrences between tables with shifted (n, m). Checks, for
/// n, m >= 1 and c = a1^2 (2m-1)(2m+1) / (a2^2 (2n-1)(2n+1)):
///   β_{n+m}^{(n+1,m-1)} - c β_{n+m}^{(n-1,m+1)} = 0
///   β_k^{(n+1,m-1)} - c β_k^{(n-1,m+1)} = β_k^{(n,m-1)} - c β_k^{(n-1,m)},  k < n+m
/// as exact Laurent identities.
Report verify_shift_recurrences(int n, int m, Engine engine = Engine::hypergeometric);

/// On the line a1 = a, a2 = 1 - a, for n, m >= 1:
///   β_{k+1}^{(n,m)}/(2k+1) = a^2/(2n-1) β_k^{(n-1,m)} + (1-a)^2/(2m-1) β_k^{(n,m-1)}
/// exactly for k < n+m; β_k is the zero polynomial for k < min(n,m); and
/// β_k(j/10) >= 0 for j = 1..9 when k >= min(n,m).
Report berg_vignat_check(int n, int m, Engine engine = Engine::hypergeometric);

}  // namespace besselin
