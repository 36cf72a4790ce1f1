/*
 * Copyright 2026 The besselin Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include "besselin/rational.hpp"

namespace besselin {

/// Rising factorial (z)_n = z(z+1)...(z+n-1); (z)_0 = 1. Requires n >= 0.
Rational pochhammer(const Rational& z, long n);

/// C(n, k) for n >= 0; zero outside 0 <= k <= n.
Rational binomial(long n, long k);

/// n! from a shared, internally synchronized table.
BigInt factorial(long n);

/// Grows the factorial table to cover 0..bound ahead of a parallel run.
void warm_factorials(long bound);

enum class PoleHandling {
  // Any argument at 0, -1, -2, ... raises PoleError.
  strict,
  // Evaluate as the Pochhammer product (b)_{a-b} or 1/(a)_{b-a}. A pole in
  // the denominator alone gives 0, a pole in both positions gives the limit
  // (-1)^{p+q} q!/p! for Γ(-p)/Γ(-q), a pole in the numerator alone still
  // raises PoleError.
  limit,
};

/// Γ(a)/Γ(b) for a - b an integer, as a finite product of rationals.
Rational gamma_ratio(const Rational& a, const Rational& b,
                     PoleHandling poles = PoleHandling::strict);

}  // namespace besselin
