/*
 * Copyright 2026 The besselin Authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "besselin/suite.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>

#include "besselin/bessel.hpp"
#include "besselin/combinatorics.hpp"
#include "besselin/errors.hpp"
#include "besselin/hypergeometric.hpp"

namespace besselin {

const char* to_string(Suite s) noexcept {
  switch (s) {
    case Suite::all: return "all";
    case Suite::recurrence: return "recurrence";
    case Suite::oracle: return "oracle";
    case Suite::berg_vignat: return "berg-vignat";
    case Suite::hypergeometric: return "hypergeometric";
  }
  return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name) noexcept {
  for (Suite s : {Suite::all, Suite::recurrence, Suite::oracle, Suite::berg_vignat,
                  Suite::hypergeometric})
    if (name == to_string(s)) return s;
  return std::nullopt;
}

namespace {

using WorkItem = std::function<Report()>;

Report engines_item(int n, int m) {
  Report out;
  const LinTable oracle = linearize_oracle(n, m);
  const LinTable closed = linearize(n, m, Engine::closed_form);
  const LinTable hyp = linearize(n, m, Engine::hypergeometric);
  const LinTable mirror = linearize_oracle(m, n);
  for (int k = 0; k <= n + m; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    CheckRecord rec{"engines.agree", n, m, k, {}, CheckStatus::pass, {}};
    if (closed.coeffs[ku] != oracle.coeffs[ku]) rec.detail += "closed_form differs; ";
    if (hyp.coeffs[ku] != oracle.coeffs[ku]) rec.detail += "hypergeometric differs; ";
    if (!rec.detail.empty()) {
      rec.status = CheckStatus::fail;
      rec.detail += "oracle=" + to_string(oracle.coeffs[ku]);
    }
    out.push_back(std::move(rec));

    CheckRecord sym{"symmetry", n, m, k, {}, CheckStatus::pass, {}};
    BiLaurent residual = oracle.coeffs[ku] - swap_variables(mirror.coeffs[ku]);
    if (!residual.is_zero()) {
      sym.status = CheckStatus::fail;
      sym.detail = to_string(residual);
    }
    out.push_back(std::move(sym));
  }
  CheckRecord top{"top-coefficient", n, m, n + m, {}, CheckStatus::pass, {}};
  BiLaurent expected = BiLaurent::monomial(top_coefficient(n, m), n, m);
  if (oracle.coeffs.back() != expected) {
    top.status = CheckStatus::fail;
    top.detail = "got " + to_string(oracle.coeffs.back()) + ", expected " + to_string(expected);
  }
  out.push_back(std::move(top));
  return out;
}

Report bessel_item(int degree) {
  Report out;
  for (auto [id, residual] : {std::pair{"bessel.three-term", bessel_recurrence_residual(degree)},
                              std::pair{"bessel.derivative", bessel_derivative_residual(degree)}}) {
    CheckRecord rec{id, degree, 0, 0, {}, CheckStatus::pass, {}};
    if (!residual.is_zero()) {
      rec.status = CheckStatus::fail;
      rec.detail = "nonzero residual of degree " + std::to_string(residual.degree());
    }
    out.push_back(std::move(rec));
  }
  return out;
}

void append_items(Suite suite, const SuiteOptions& opt, std::vector<WorkItem>& items) {
  const auto positive_grid = [&](auto make) {
    for (int n = 1; n <= opt.max_n; ++n)
      for (int m = 1; m <= opt.max_m; ++m) items.emplace_back([=] { return make(n, m); });
  };
  switch (suite) {
    case Suite::all:
      for (Suite s : {Suite::oracle, Suite::recurrence, Suite::berg_vignat, Suite::hypergeometric})
        append_items(s, opt, items);
      break;
    case Suite::oracle:
      for (int n = 0; n <= opt.max_n; ++n)
        for (int m = 0; m <= opt.max_m; ++m) items.emplace_back([=] { return engines_item(n, m); });
      break;
    case Suite::recurrence:
      for (int d = 1; d <= std::max(1, opt.max_n + opt.max_m); ++d)
        items.emplace_back([=] { return bessel_item(d); });
      positive_grid([e = opt.engine](int n, int m) { return verify_shift_recurrences(n, m, e); });
      break;
    case Suite::berg_vignat:
      positive_grid([e = opt.engine](int n, int m) { return berg_vignat_check(n, m, e); });
      break;
    case Suite::hypergeometric:
      positive_grid([](int n, int m) {
        const auto samples = reduction_samples();
        return verify_reduction(n, m, samples);
      });
      break;
  }
}

}  // namespace

Report run_suite(Suite suite, const SuiteOptions& options) {
  if (options.max_n < 0 || options.max_m < 0) throw DomainError("grid bounds must be >= 0");
  std::vector<WorkItem> items;
  append_items(suite, options, items);
  // The shift recurrences reach (n+1, m+1); 4(n+m) covers every factorial the engines touch.
  warm_factorials(4L * (options.max_n + options.max_m + 2));

  std::vector<Report> results(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        results[i] = items[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::clamp<unsigned>(options.jobs, 1u, 256u);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }

  Report merged;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    std::move(results[i].begin(), results[i].end(), std::back_inserter(merged));
  }
  return merged;
}

bool Reduction::all_equal() const noexcept {
  return !sides.empty() &&
         std::all_of(sides.begin(), sides.end(), [](const auto& s) { return s.equal; });
}

Reduction reduce_identity(int n, int m, int k, const Rational& a) {
  if (n < 0 || m < 0 || k < 0 || k > n + m)
    throw DomainError("reduction identity needs n, m >= 0 and 0 <= k <= n+m");
  if (a.is_zero() || a.is_one()) throw DomainError("reduction identity needs a not in {0, 1}");

  Reduction r{n, m, k, a, reduction_rhs(n, m, k, a), {}};
  auto evaluate_side = [&](const char* branch, auto lhs_fn) {
    ReductionSide side{branch, std::nullopt, false, {}, false};
    try {
      side.lhs = lhs_fn(n, m, k, a, PoleHandling::strict);
    } catch (const PoleError&) {
      try {
        side.lhs = lhs_fn(n, m, k, a, PoleHandling::limit);
        side.regularized = true;
      } catch (const Error& e) {
        side.error = e.what();
      }
    } catch (const Error& e) {
      side.error = e.what();
    }
    side.equal = side.lhs && *side.lhs == r.rhs;
    r.sides.push_back(std::move(side));
  };
  if (in_upper_branch(n, m, k)) evaluate_side("upper", &reduction_upper_lhs);
  if (in_lower_branch(n, m, k)) evaluate_side("lower", &reduction_lower_lhs);
  return r;
}

}  // namespace besselin
