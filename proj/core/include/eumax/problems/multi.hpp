// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eumax/problems/knapsack.hpp"
#include "eumax/solver.hpp"

namespace eumax {

/// Joint feasibility over two subsets S1, S2 of the same ground set. In the
/// default mode each item goes to S1, S2, or neither (disjointness is
/// structural); in paired mode a selected item enters both sets, so S1 = S2.
/// An optional integer attribute accumulates over distinct selected items
/// with a final-range acceptance (profit bands).
struct PairAssignInstance {
  int num_items = 0;
  bool paired = false;
  std::vector<std::uint8_t> allowed;  // per item: bit 0 = may join S1, bit 1 = S2; empty = all
  std::vector<std::int64_t> units;    // per-item attribute; empty = all zero
  std::int64_t band_lo = 0;
  std::int64_t band_hi = INT64_MAX;
};

struct MultiUtilityOptions {
  double eps = 0.1;           // the qualification slack
  double rounding_eps = 0.0;  // 0 picks eps/8
  double rounding_scale = 1.0;
  std::int64_t state_budget = 10'000'000;
};

struct MultiUtilityResult {
  std::array<std::vector<std::int32_t>, 2> sets;
  std::array<std::complex<double>, 2> exact_values;
  std::array<std::complex<double>, 2> scores;
  std::array<RoundingParams, 2> params;
  std::int64_t reachable_configs = 0;
};

/// Accept predicate over (per-utility exact expsum values, rounded scores).
using MultiAccept = std::function<bool(const std::array<std::complex<double>, 2>&,
                                       const std::array<std::complex<double>, 2>&)>;

/// Product-configuration DP with both utilities' coordinates side by side
/// (2 L1 + 2 L2 per configuration). Returns the first reachable configuration
/// accepted by the predicate; the default predicate is
/// |score_i| >= lambda_i - eps - certified_error_i for both utilities.
std::optional<MultiUtilityResult> multi_utility_solve(
    const PairAssignInstance& structure, const std::array<const ExponentialSum*, 2>& expsums,
    const std::array<MomentTable, 2>& moments, const std::array<double, 2>& lambdas,
    const MultiUtilityOptions& options, const MultiAccept& accept = nullptr);

/// Two knapsacks with per-knapsack probability targets: find disjoint S1, S2
/// maximizing total profit with Pr(size(S_i) <= 1 + eps) >= (1 - eps) gamma_i.
struct MultiKnapsackInstance {
  struct Item {
    Distribution size;
    double profit;
    std::string label;
  };
  std::vector<Item> items;
  std::array<double, 2> gammas{0.5, 0.5};
  double eps = 0.2;
};

struct MultiKnapsackResult {
  std::array<std::vector<std::int32_t>, 2> sets;
  double profit = 0.0;
  std::array<double, 2> prob_estimates{0.0, 0.0};
  std::array<double, 2> prob_certified{0.0, 0.0};
  double guess = 0.0;
  double certified_error = 0.0;
};

MultiKnapsackResult multi_knapsack_solve(const MultiKnapsackInstance& instance,
                                         const KnapsackKnobs& knobs = {});

/// Knapsack with 2-dimensional random sizes: find S maximizing profit with
/// Pr(both coordinate sums <= 1) >= gamma, via either the per-coordinate
/// reduction (independent coordinates) or a 2-D exponential sum over the
/// joint distribution (correlated coordinates).
struct MultidimKnapsackInstance {
  struct Item {
    double profit = 0.0;
    std::optional<Distribution> w1;  // independent mode
    std::optional<Distribution> w2;
    std::vector<std::array<double, 3>> joint;  // correlated mode rows (v1, v2, p)
    std::string label;
  };
  std::vector<Item> items;
  double gamma = 0.5;
  double eps = 0.2;
};

enum class MultidimMode { independent, correlated };

struct MultidimKnapsackResult {
  std::vector<std::int32_t> items;
  double profit = 0.0;
  double prob_estimate = 0.0;   // per-axis product or joint expsum estimate
  double prob_certified = 0.0;  // qualification lower bound
  double guess = 0.0;
  std::array<double, 2> pair{1.0, 1.0};  // winning (gamma_1, gamma_2), independent mode
  int expsum_terms = 0;
};

MultidimKnapsackResult multidim_knapsack_solve(const MultidimKnapsackInstance& instance,
                                               MultidimMode mode,
                                               const KnapsackKnobs& knobs = {});

}  // namespace eumax
