/*
 * Copyright 2026 The besselin Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "besselin/linearization.hpp"

#include <algorithm>

#include "besselin/bessel.hpp"
#include "besselin/combinatorics.hpp"
#include "besselin/errors.hpp"
#include "besselin/hypergeometric.hpp"

namespace besselin {

const char* to_string(Engine e) noexcept {
  switch (e) {
    case Engine::oracle: return "oracle";
    case Engine::closed_form: return "closed_form";
    case Engine::hypergeometric: return "hypergeometric";
  }
  return "unknown";
}

std::optional<Engine> parse_engine(std::string_view name) noexcept {
  if (name == "oracle") return Engine::oracle;
  if (name == "closed_form" || name == "closed") return Engine::closed_form;
  if (name == "hypergeometric" || name == "hyp") return Engine::hypergeometric;
  return std::nullopt;
}

namespace {

const Rational kHalf(1, 2);

void require_pair(int n, int m) {
  if (n < 0 || m < 0) throw DomainError("linearization needs n, m >= 0");
}

void require_index(int n, int m, int k) {
  require_pair(n, m);
  if (k < 0 || k > n + m)
    throw DomainError("coefficient index k = " + std::to_string(k) + " outside 0..n+m");
}

}  // namespace

Rational linearization_prefactor(int n, int m, int k) {
  const int N = n + m - k;
  BigInt four_pow = 1;
  four_pow <<= static_cast<mp_bitcnt_t>(2 * N);
  Rational den = Rational(BigInt(four_pow * factorial(N)));
  den *= pochhammer(kHalf, n) * pochhammer(kHalf, m);
  return pochhammer(kHalf, k) / den;
}

Rational top_coefficient(int n, int m) {
  require_pair(n, m);
  return pochhammer(kHalf, n + m) / (pochhammer(kHalf, n) * pochhammer(kHalf, m));
}

LinTable linearize_oracle(int n, int m) {
  require_pair(n, m);
  const auto product = unimul(uniscale_arg(bessel_q(n), BiLaurent::a1()),
                              uniscale_arg(bessel_q(m), BiLaurent::a2()));
  auto expansion = monomial_to_qbasis(product);
  expansion.coeffs.resize(static_cast<std::size_t>(n + m) + 1);
  return {n, m, std::move(expansion.coeffs), Engine::oracle};
}

BiLaurent beta_closed(int n, int m, int k) {
  require_index(n, m, k);
  const int N = n + m - k;
  BiLaurent sum;
  for (int i = 0; i <= N; ++i) {
    Rational outer = binomial(N, i) * pochhammer(Rational(n + 1 - i), 2L * i);
    if (outer.is_zero()) continue;
    for (int j = 0; j <= N - i; ++j) {
      Rational c = outer * binomial(N - i, j) *
                   pochhammer(Rational(k + j + i + 1 - n), 2L * (N - i - j)) *
                   pochhammer(Rational(k + 2 - j), 2L * j);
      if (j % 2) c = -c;
      sum.add_term(N - i, j + i, c);
    }
  }
  BiLaurent prefactor = BiLaurent::monomial(linearization_prefactor(n, m, k), k - m, k - n);
  return assert_polynomial(prefactor * sum);
}

BiLaurent beta_hyp(int n, int m, int k) {
  require_index(n, m, k);
  const int N = n + m - k;
  BiLaurent sum;
  for (int i = 0; i <= N; ++i) {
    Rational c = binomial(N, N - i) * pochhammer(Rational(k + 1 - m + i), 2L * (N - i));
    if (c.is_zero()) continue;
    // (m-i+1)_{2i} 3F2(...; a2) a2^{-i} as Laurent terms a1^i a2^{j-i}.
    const auto series = eval_terminating(linearization_series(m, k, i));
    for (std::size_t j = 0; j < series.coeffs().size(); ++j)
      sum.add_term(i, static_cast<int>(j) - i, c * series.coeffs()[j]);
  }
  BiLaurent prefactor = BiLaurent::monomial(linearization_prefactor(n, m, k), k - m, m);
  return assert_polynomial(prefactor * sum);
}

LinTable linearize(int n, int m, Engine engine) {
  if (engine == Engine::oracle) return linearize_oracle(n, m);
  require_pair(n, m);
  LinTable t{n, m, {}, engine};
  t.coeffs.reserve(static_cast<std::size_t>(n + m) + 1);
  for (int k = 0; k <= n + m; ++k)
    t.coeffs.push_back(engine == Engine::closed_form ? beta_closed(n, m, k) : beta_hyp(n, m, k));
  return t;
}

LinTable evaluate_table(const LinTable& t, const Rational& v1, const Rational& v2) {
  LinTable out{t.n, t.m, {}, t.engine};
  out.coeffs.reserve(t.coeffs.size());
  for (const auto& c : t.coeffs) out.coeffs.emplace_back(substitute(c, v1, v2));
  return out;
}

namespace {

CheckRecord identity_record(const char* id, int n, int m, int k, const BiLaurent& residual) {
  CheckRecord rec{id, n, m, k, {}, CheckStatus::pass, {}};
  if (!residual.is_zero()) {
    rec.status = CheckStatus::fail;
    rec.detail = to_string(residual);
  }
  return rec;
}

std::string render_univariate(const UniPoly<Rational>& p) {
  // Reuse the canonical BiLaurent text with a1 standing for a.
  BiLaurent b;
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) b.add_term(static_cast<int>(j), 0, p.coeffs()[j]);
  return to_string(b);
}

}  // namespace

Report verify_shift_recurrences(int n, int m, Engine engine) {
  if (n < 1 || m < 1) throw DomainError("shift recurrences need n, m >= 1");
  const LinTable up = linearize(n + 1, m - 1, engine);
  const LinTable down = linearize(n - 1, m + 1, engine);
  const LinTable left = linearize(n, m - 1, engine);
  const LinTable right = linearize(n - 1, m, engine);
  const BiLaurent c = BiLaurent::monomial(
      Rational((2L * m - 1) * (2L * m + 1), (2L * n - 1) * (2L * n + 1)), 2, -2);

  Report out;
  const auto top = static_cast<std::size_t>(n + m);
  out.push_back(identity_record("shift.top", n, m, n + m, up.coeffs[top] - c * down.coeffs[top]));
  for (std::size_t k = 0; k < top; ++k) {
    BiLaurent residual = up.coeffs[k] - c * down.coeffs[k] - left.coeffs[k] + c * right.coeffs[k];
    out.push_back(identity_record("shift.lower", n, m, static_cast<int>(k), residual));
  }
  return out;
}

Report berg_vignat_check(int n, int m, Engine engine) {
  if (n < 1 || m < 1) throw DomainError("Berg-Vignat checks need n, m >= 1");
  auto on_line = [](const LinTable& t) {
    std::vector<UniPoly<Rational>> v;
    v.reserve(t.coeffs.size());
    for (const auto& c : t.coeffs) v.push_back(restrict_to_line(c));
    return v;
  };
  const auto beta = on_line(linearize(n, m, engine));
  const auto drop_n = on_line(linearize(n - 1, m, engine));
  const auto drop_m = on_line(linearize(n, m - 1, engine));

  const auto a_sq = UniPoly<Rational>::monomial(Rational(1), 2);
  const auto one_minus_a_sq = UniPoly<Rational>(std::vector<Rational>{1, -2, 1});

  Report out;
  for (int k = 0; k < n + m; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    UniPoly<Rational> residual = beta[ku + 1] * Rational(1, 2L * k + 1) -
                                 a_sq * drop_n[ku] * Rational(1, 2L * n - 1) -
                                 one_minus_a_sq * drop_m[ku] * Rational(1, 2L * m - 1);
    CheckRecord rec{"line.recurrence", n, m, k, {}, CheckStatus::pass, {}};
    if (!residual.is_zero()) {
      rec.status = CheckStatus::fail;
      rec.detail = render_univariate(residual);
    }
    out.push_back(std::move(rec));
  }

  const int lo = std::min(n, m);
  for (int k = 0; k <= n + m; ++k) {
    const auto& b = beta[static_cast<std::size_t>(k)];
    if (k < lo) {
      CheckRecord rec{"line.vanish", n, m, k, {}, CheckStatus::pass, {}};
      if (!b.is_zero()) {
        rec.status = CheckStatus::fail;
        rec.detail = render_univariate(b);
      }
      out.push_back(std::move(rec));
      continue;
    }
    CheckRecord rec{"line.positive", n, m, k, {}, CheckStatus::pass, {}};
    for (int j = 1; j <= 9; ++j) {
      const Rational a(j, 10);
      const Rational v = evaluate(b, a);
      if (v.sign() < 0) {
        rec.status = CheckStatus::fail;
        rec.detail += (rec.detail.empty() ? "" : "; ") + std::string("beta(") + a.to_string() +
                      ")=" + v.to_string();
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace besselin
