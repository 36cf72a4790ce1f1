/*
 * Copyright 2026 The besselin Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace besselin {

using BigInt = mpz_class;

/// Exact fraction over arbitrary-precision integers.
///
/// Always held in lowest terms with a positive denominator, so two values are
/// mathematically equal exactly when their representations are equal. Zero is
/// 0/1.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I value) : v_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral I>
  Rational(I value) : v_(static_cast<unsigned long>(value)) {}  // NOLINT

  explicit Rational(const BigInt& value) : v_(value) {}

  // Throws DivisionByZero on a zero denominator.
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den);

  // Accepts optional sign, digits, optional "/digits"; nothing else (no
  // whitespace, no decimal point). Throws ParseError.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }
  const mpq_class& raw() const noexcept { return v_; }

  bool is_zero() const noexcept { return sgn(v_) == 0; }
  bool is_one() const noexcept { return v_ == 1; }
  bool is_integer() const noexcept { return v_.get_den() == 1; }
  int sign() const noexcept { return sgn(v_); }

  // True for 0, -1, -2, ...; the poles of Γ.
  bool is_nonpositive_integer() const noexcept { return is_integer() && sign() <= 0; }

  // Value as a machine integer; only meaningful when is_integer() and it fits.
  long to_long() const;

  // "p" when the denominator is 1, otherwise "p/q".
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

// Integer power; a negative exponent inverts (DivisionByZero for 0^-e).
Rational pow(const Rational& base, long exponent);

}  // namespace besselin
