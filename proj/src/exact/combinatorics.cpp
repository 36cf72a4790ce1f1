/*
 * Copyright 2026 The besselin Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "besselin/combinatorics.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>

#include "besselin/errors.hpp"

namespace besselin {

namespace {

// Append-only; deque keeps references to existing entries stable while the
// table grows under the exclusive lock.
class FactorialTable {
 public:
  FactorialTable() { values_.emplace_back(1); }

  BigInt get(long n) {
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(n) < values_.size()) return values_[static_cast<std::size_t>(n)];
    }
    grow(n);
    std::shared_lock lock(mutex_);
    return values_[static_cast<std::size_t>(n)];
  }

  void grow(long bound) {
    std::unique_lock lock(mutex_);
    while (values_.size() <= static_cast<std::size_t>(bound)) {
      BigInt next = values_.back() * static_cast<unsigned long>(values_.size());
      values_.push_back(std::move(next));
    }
  }

 private:
  std::shared_mutex mutex_;
  std::deque<BigInt> values_;
};

FactorialTable& table() {
  static FactorialTable t;
  return t;
}

}  // namespace

Rational pochhammer(const Rational& z, long n) {
  if (n < 0) throw DomainError("pochhammer length must be nonnegative");
  // (p/q)_n = prod_j (p + j q) / q^n, accumulated in integers.
  const mpz_class& p = z.raw().get_num();
  const mpz_class& q = z.raw().get_den();
  BigInt num = 1;
  BigInt term = p;
  for (long j = 0; j < n; ++j) {
    if (term == 0) return Rational(0);
    num *= term;
    term += q;
  }
  if (q == 1) return Rational(num);
  BigInt den;
  mpz_pow_ui(den.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(num, den);
}

Rational binomial(long n, long k) {
  if (n < 0) throw DomainError("binomial requires n >= 0");
  if (k < 0 || k > n) return Rational(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

BigInt factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  return table().get(n);
}

void warm_factorials(long bound) {
  if (bound >= 0) table().grow(bound);
}

Rational gamma_ratio(const Rational& a, const Rational& b, PoleHandling poles) {
  Rational diff = a - b;
  if (!diff.is_integer())
    throw DomainError("gamma_ratio needs an integer difference, got " + a.to_string() + " - " +
                      b.to_string());
  const bool a_pole = a.is_nonpositive_integer();
  const bool b_pole = b.is_nonpositive_integer();
  if (poles == PoleHandling::strict && (a_pole || b_pole))
    throw PoleError("Γ(" + a.to_string() + ")/Γ(" + b.to_string() + ") touches a pole");

  long d = diff.to_long();
  if (d >= 0) return pochhammer(b, d);
  Rational den = pochhammer(a, -d);
  if (den.is_zero())
    throw PoleError("Γ(" + a.to_string() + ")/Γ(" + b.to_string() + ") is infinite");
  return Rational(1) / den;
}

}  // namespace besselin
