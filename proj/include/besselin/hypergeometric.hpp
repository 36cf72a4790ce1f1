/*
 * Copyright 2026 The besselin Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "besselin/combinatorics.hpp"
#include "besselin/rational.hpp"
#include "besselin/report.hpp"
#include "besselin/unipoly.hpp"

namespace besselin {

/// An outer factor (lower[index])_length multiplying the whole series. Each
/// term's 1/(c)_j is then replaced by (c+j)_{length-j}, which stays finite
/// when c is a nonpositive integer. Requires length >= the termination index.
struct LowerPrefactor {
  std::size_t index = 0;
  long length = 0;
};

/// Terminating generalized hypergeometric series
///   sum_{j=0}^{T} prod (upper)_j / prod (lower)_j  x^j / j!
/// where T is the smallest -p over the upper parameters p in {0, -1, ...}.
class HSeries {
 public:
  // DomainError when no upper parameter is a nonpositive integer, or when
  // the absorbed prefactor is shorter than the series.
  HSeries(std::vector<Rational> upper, std::vector<Rational> lower,
          std::optional<LowerPrefactor> absorbed = std::nullopt);

  const std::vector<Rational>& upper() const noexcept { return upper_; }
  const std::vector<Rational>& lower() const noexcept { return lower_; }
  const std::optional<LowerPrefactor>& absorbed() const noexcept { return absorbed_; }
  long termination_index() const noexcept { return termination_; }

 private:
  std::vector<Rational> upper_, lower_;
  std::optional<LowerPrefactor> absorbed_;
  long termination_ = 0;
};

/// The series as a polynomial in its argument (degree <= T).
/// Throws LowerParameterPole(j) when (lower)_j = 0 for some j <= T.
UniPoly<Rational> eval_terminating(const HSeries& h);

/// The series at a rational argument.
Rational eval_terminating(const HSeries& h, const Rational& x);

/// (m-i+1)_{2i} * 3F2(k+2, -k-1, -i; -m-i, m-i+1; x), the inner factor shared
/// by the single-sum linearization formula and the 3F2 -> 2F1 reduction.
HSeries linearization_series(int m, int k, int i);

// Branch ranges of the reduction identity: upper for k >= ceil((n+m-1)/2),
// lower for k <= floor((n+m-1)/2). Both hold when 2k = n+m-1.
bool in_upper_branch(int n, int m, int k) noexcept;
bool in_lower_branch(int n, int m, int k) noexcept;

/// a^{2N}(1-a)^{-N} Γ(n+m+2)/Γ(2k+2-n-m) 2F1(k+1-m, -2N; 2k+2-n-m; 1/a),
/// N = n+m-k.
Rational reduction_upper_lhs(int n, int m, int k, const Rational& a,
                            PoleHandling poles = PoleHandling::limit);

/// (-a)^{n+m+1}(1-a)^{-N} Γ(2N+1)Γ(n-k)/(Γ(n+m-2k)Γ(k+1-m))
///   2F1(n-k, -n-m-1; n+m-2k; 1/a).
Rational reduction_lower_lhs(int n, int m, int k, const Rational& a,
                            PoleHandling poles = PoleHandling::limit);

/// sum_i a^i C(N, N-i) (k+1-m+i)_{2(N-i)} (m-i+1)_{2i}
///   3F2(k+2, -k-1, -i; -m-i, m-i+1; 1-a) (1-a)^{-i}
Rational reduction_rhs(int n, int m, int k, const Rational& a);

/// Both sides of the reduction over every k of both branches at each sample,
/// plus the tie-back to the single-sum linearization formula on the line
/// a1 = a, a2 = 1 - a. Requires n, m >= 1.
Report verify_reduction(int n, int m, std::span<const Rational> samples);

/// The five sample points used by the verification suite.
std::vector<Rational> reduction_samples();

}  // namespace besselin
