/*
 * Copyright 2026 The besselin Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace besselin {

// Root of every error the core raises. The C API maps each subclass onto a
// distinct status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Γ(a)/Γ(b) is genuinely infinite, or a pole was hit under strict handling.
class PoleError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// A Laurent expression that was required to collapse to a polynomial did not.
// `terms` holds the canonical rendering of the offending terms.
class NotPolynomial : public Error {
 public:
  NotPolynomial(const std::string& terms)
      : Error("negative exponents survived: " + terms), terms_(terms) {}
  const std::string& terms() const noexcept { return terms_; }

 private:
  std::string terms_;
};

// (lower)_j vanished for some j inside the summation range of a terminating
// hypergeometric series.
class LowerParameterPole : public Error {
 public:
  explicit LowerParameterPole(long index)
      : Error("lower parameter Pochhammer vanishes at j = " + std::to_string(index)),
        index_(index) {}
  long index() const noexcept { return index_; }

 private:
  long index_;
};

// Precondition on an argument range (branch condition, a in {0,1}, k > n+m...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed rational literal or malformed serialized table.
class ParseError : public Error {
 public:
  using Error::Error;
};

class IdentityViolation : public Error {
 public:
  IdentityViolation(int n, int m, int k, const std::string& residual)
      : Error("identity violated at (n,m,k)=(" + std::to_string(n) + "," + std::to_string(m) +
              "," + std::to_string(k) + "): residual " + residual),
        n_(n), m_(m), k_(k), residual_(residual) {}
  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  int k() const noexcept { return k_; }
  const std::string& residual() const noexcept { return residual_; }

 private:
  int n_, m_, k_;
  std::string residual_;
};

class PositivityViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace besselin
