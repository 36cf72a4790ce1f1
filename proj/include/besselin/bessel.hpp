/*
 * Copyright 2026 The besselin Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <stdexcept>
#include <vector>

#include "besselin/bilaurent.hpp"
#include "besselin/rational.hpp"
#include "besselin/unipoly.hpp"

namespace besselin {

/// q_n(u) = sum_k (-n)_k 2^k / ((-2n)_k k!) u^k, normalized by q_n(0) = 1.
UniPoly<Rational> bessel_q(int n);

/// Monic reverse Bessel polynomial θ_n = (2n)!/(n! 2^n) q_n.
UniPoly<Rational> reverse_bessel_theta(int n);

/// Ordinary Bessel polynomial y_n, coefficient of u^k = (n+k)!/(2^k k!(n-k)!).
UniPoly<Rational> ordinary_bessel_y(int n);

/// Leading coefficient of q_k, 2^k k!/(2k)!.
Rational q_leading_coefficient(int k);

/// Expansion of a polynomial in the basis q_0, q_1, ..., q_d.
template <class C>
struct QBasisExpansion {
  std::vector<C> coeffs;  // coeffs[k] multiplies q_k
};
using QBasisVector = QBasisExpansion<BiLaurent>;

/// Triangular back-substitution against the q-basis. The residual after the
/// last step is required to vanish; a nonzero residual is a logic_error.
template <class C>
QBasisExpansion<C> monomial_to_qbasis(const UniPoly<C>& p) {
  QBasisExpansion<C> out;
  if (p.is_zero()) {
    out.coeffs.resize(1);
    return out;
  }
  const int d = p.degree();
  out.coeffs.resize(static_cast<std::size_t>(d) + 1);
  UniPoly<C> residual = p;
  for (int k = d; k >= 0; --k) {
    C lead = residual.coefficient(static_cast<std::size_t>(k));
    if (lead.is_zero()) continue;
    lead *= Rational(1) / q_leading_coefficient(k);
    const auto q = bessel_q(k);
    std::vector<C> step(q.coeffs().size());
    for (std::size_t j = 0; j < step.size(); ++j) step[j] = lead * q.coeffs()[j];
    residual -= UniPoly<C>(std::move(step));
    out.coeffs[static_cast<std::size_t>(k)] = std::move(lead);
  }
  if (!residual.is_zero()) throw std::logic_error("q-basis back-substitution left a residual");
  return out;
}

/// sum_k coeffs[k] q_k(u).
template <class C>
UniPoly<C> reconstruct(const QBasisExpansion<C>& v) {
  UniPoly<C> out;
  for (std::size_t k = 0; k < v.coeffs.size(); ++k) {
    if (v.coeffs[k].is_zero()) continue;
    const auto q = bessel_q(static_cast<int>(k));
    std::vector<C> term(q.coeffs().size());
    for (std::size_t j = 0; j < term.size(); ++j) term[j] = v.coeffs[k] * q.coeffs()[j];
    out += UniPoly<C>(std::move(term));
  }
  return out;
}

// q_{n+1} - q_n - u^2/(4n^2-1) q_{n-1}; zero for every n >= 1.
UniPoly<Rational> bessel_recurrence_residual(int n);

// q_n' - q_n + u/(2n-1) q_{n-1}; zero for every n >= 1.
UniPoly<Rational> bessel_derivative_residual(int n);

namespace detail {
UniPoly<Rational> derivative(const UniPoly<Rational>& p);
}  // namespace detail

}  // namespace besselin
