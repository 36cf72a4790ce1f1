/*
 * Copyright 2026 The besselin Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "besselin/rational.hpp"

namespace besselin {

/// Dense univariate polynomial in u over a coefficient ring C.
///
/// C must be default-constructible to zero, expose is_zero(), and support
/// +, -, * with itself and * with Rational. The highest stored coefficient is
/// always nonzero; the zero polynomial stores nothing and has degree -1.
template <class C>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static UniPoly constant(C c) { return UniPoly(std::vector<C>{std::move(c)}); }
  // c * u^k
  static UniPoly monomial(C c, std::size_t k) {
    std::vector<C> v(k + 1);
    v[k] = std::move(c);
    return UniPoly(std::move(v));
  }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<C>& coeffs() const noexcept { return coeffs_; }

  // Coefficient of u^k, zero past the degree.
  C coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : C{}; }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  UniPoly& operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(out));
  }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<C> coeffs_;
};

template <class C>
UniPoly<C> unimul(const UniPoly<C>& p, const UniPoly<C>& q) {
  return p * q;
}

// Horner evaluation.
inline Rational evaluate(const UniPoly<Rational>& p, const Rational& x) {
  Rational acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace besselin
