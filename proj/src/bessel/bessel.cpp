/*
 * Copyright 2026 The besselin Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "besselin/bessel.hpp"

#include "besselin/combinatorics.hpp"
#include "besselin/errors.hpp"

namespace besselin {

namespace {

void require_degree(int n) {
  if (n < 0) throw DomainError("Bessel polynomial degree must be nonnegative");
}

}  // namespace

UniPoly<Rational> bessel_q(int n) {
  require_degree(n);
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  // Ratio of consecutive terms: (-n+k) 2 / ((-2n+k)(k+1)).
  Rational term(1);
  for (int k = 0; k <= n; ++k) {
    c[static_cast<std::size_t>(k)] = term;
    if (k < n) term *= Rational(2L * (k - n), static_cast<long>(k - 2 * n) * (k + 1));
  }
  return UniPoly<Rational>(std::move(c));
}

Rational q_leading_coefficient(int k) {
  require_degree(k);
  BigInt num = factorial(k);
  num <<= static_cast<mp_bitcnt_t>(k);
  return Rational(num, factorial(2L * k));
}

UniPoly<Rational> reverse_bessel_theta(int n) {
  BigInt den = factorial(n);
  den <<= static_cast<mp_bitcnt_t>(n);
  return bessel_q(n) * Rational(factorial(2L * n), den);
}

UniPoly<Rational> ordinary_bessel_y(int n) {
  require_degree(n);
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    BigInt den = factorial(k) * factorial(n - k);
    den <<= static_cast<mp_bitcnt_t>(k);
    c[static_cast<std::size_t>(k)] = Rational(factorial(n + k), den);
  }
  return UniPoly<Rational>(std::move(c));
}

namespace detail {

UniPoly<Rational> derivative(const UniPoly<Rational>& p) {
  if (p.degree() < 1) return {};
  std::vector<Rational> c(p.coeffs().size() - 1);
  for (std::size_t k = 1; k < p.coeffs().size(); ++k) c[k - 1] = p.coeffs()[k] * Rational(k);
  return UniPoly<Rational>(std::move(c));
}

}  // namespace detail

UniPoly<Rational> bessel_recurrence_residual(int n) {
  if (n < 1) throw DomainError("three-term recurrence needs n >= 1");
  auto shifted = UniPoly<Rational>::monomial(Rational(1, 4L * n * n - 1), 2) * bessel_q(n - 1);
  return bessel_q(n + 1) - bessel_q(n) - shifted;
}

UniPoly<Rational> bessel_derivative_residual(int n) {
  if (n < 1) throw DomainError("derivative recurrence needs n >= 1");
  const auto qn = bessel_q(n);
  auto shifted = UniPoly<Rational>::monomial(Rational(1, 2L * n - 1), 1) * bessel_q(n - 1);
  return detail::derivative(qn) - qn + shifted;
}

}  // namespace besselin
