// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eumax/solver.hpp"
#include "eumax/utility.hpp"

namespace eumax {

/// An exact finite law (value, probability) with nonnegative values, sorted
/// by value with near-duplicates merged.
struct DiscreteLaw {
  std::vector<std::pair<double, double>> support;

  double total_mass() const;
  double cdf(double x) const;  // Pr(value <= x)
  double expectation_of(const UtilitySpec& mu) const;
};

DiscreteLaw make_law(const Distribution& dist);  // DiscreteFinite only

/// Exact law of the sum of independent variables; values within 1e-12 merge.
/// Throws SupportExplosion past `support_cap` points.
DiscreteLaw convolve(std::span<const DiscreteLaw> laws, std::int64_t support_cap = 1000000);

/// Seeded, reproducible Monte Carlo estimate of E[mu(sum of draws)].
struct McEstimate {
  double estimate = 0.0;
  double stderr_ = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
};
McEstimate mc_expected_utility(std::span<const Distribution> weights, const UtilitySpec& mu,
                               std::int64_t samples, std::uint64_t seed);

/// Ground truth for a staged problem: every feasible solution (as a sorted
/// element multiset), its exact expected utility, and the extremal one.
struct OracleReport {
  struct Entry {
    std::vector<std::int32_t> elements;
    double value = 0.0;
    double stderr_ = 0.0;  // zero for exact convolution
  };
  std::vector<Entry> solutions;  // lexicographic by element multiset
  std::size_t best_index = 0;
  double best_value = 0.0;
  bool exact = true;  // false when any value came from Monte Carlo
  std::int64_t mc_samples = 0;
  std::uint64_t seed = 0;
};

struct OracleOptions {
  std::int64_t solution_cap = 100000;
  std::int64_t support_cap = 1000000;
  std::int64_t mc_samples = 200000;
  std::uint64_t seed = 1;
  Mode mode = Mode::maximize;
};

/// Enumerates feasible solutions of the adapter (deduped as multisets) and
/// evaluates E[mu(w(S))] exactly by convolution, falling back to seeded Monte
/// Carlo when any element weight lacks a finite discrete law.
OracleReport brute_force_solve(const ProblemAdapter& adapter, const UtilitySpec& mu,
                               const OracleOptions& options = {});

/// The feasible solutions alone (sorted multisets, lexicographic order).
std::vector<std::vector<std::int32_t>> enumerate_solutions(const StagedProblem& problem,
                                                           std::int64_t cap);

/// Exact Pr(sum of independent finite-discrete weights <= cap).
double probability_sum_at_most(std::span<const Distribution> weights, double cap,
                               std::int64_t support_cap = 1000000);

}  // namespace eumax
