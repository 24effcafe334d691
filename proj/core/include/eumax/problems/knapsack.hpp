// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eumax/solver.hpp"
#include "eumax/utility.hpp"

namespace eumax {

/// Expected-utility maximization over subsets whose integer attribute total
/// lies in [band_lo, band_hi] — the exact-version feasibility family behind
/// the knapsack schemes (attribute = scaled profit). Witness tags are item
/// indices.
struct ProfitBandInstance {
  std::vector<Distribution> weights;
  std::vector<std::int64_t> units;  // per-item attribute, >= 0
  std::int64_t band_lo = 0;
  std::int64_t band_hi = 0;
  std::vector<std::string> labels;  // optional
  /// Items excluded from selection but kept so indices stay stable.
  std::vector<bool> excluded;
};

std::unique_ptr<ProblemAdapter> profit_band_adapter(const ProfitBandInstance& instance);

/// Random sizes, deterministic profits: find S maximizing total profit with
/// Pr(size(S) <= 1) >= gamma. Bi-criterion output: profit within (1 - O(eps))
/// of the optimum and Pr(size(S) <= 1 + eps) >= (1 - eps) gamma, certified
/// through the ramp utility's exponential sum.
struct KnapsackSizeInstance {
  struct Item {
    Distribution size;
    double profit;
    std::string label;
  };
  std::vector<Item> items;
  double gamma_target = 0.5;  // in (0, 1]
  double eps = 0.2;
};

struct KnapsackSizeResult {
  std::vector<std::int32_t> items;
  double profit = 0.0;
  double prob_estimate = 0.0;    // |E[mu~(w(S))]|, within certified_error of E[mu(w(S))]
  double prob_certified = 0.0;   // prob_estimate - certified_error (lower bound on E[mu])
  double guess = 0.0;
  double certified_error = 0.0;
  int expsum_terms = 0;
  SolveResult inner;  // diagnostics of the winning solve
};

struct KnapsackKnobs {
  int max_terms = 4001;
  /// Rectangular 2-D sums count (2N+1)^2 against this budget, so it runs far
  /// larger than the 1-D cap.
  int max_terms_2d = 600001;
  double rounding_scale = 1.0;
  std::int64_t state_budget = 10'000'000;
  /// Shares of instance eps spent on decomposition and rounding. Both sides
  /// of the probability qualification need room inside eps*gamma, so these
  /// default well below the 1/2 split used by the generic pipeline. The 2-D
  /// plateau runs coarser: its term count grows quadratically in the cutoff.
  double decompose_share = 0.125;
  double decompose_share_2d = 0.25;
  double rounding_share = 0.125;
  /// Optional precomputed decompositions reused across calls. Must be the
  /// ramp threshold_ramp(eps, 1) (or the 2-D plateau at eps) decomposed at
  /// eps times the matching share; the tail point is sanity-checked.
  const ExponentialSum* shared_ramp_expsum = nullptr;
  const ExponentialSum2D* shared_plateau_expsum = nullptr;
};

/// Decompositions the knapsack schemes would build internally, exposed so
/// batch callers can share them across instances with the same eps.
ExponentialSum knapsack_ramp_expsum(double eps, const KnapsackKnobs& knobs = {});
ExponentialSum2D knapsack_plateau_expsum(double eps, const KnapsackKnobs& knobs = {});

KnapsackSizeResult knapsack_size_solve(const KnapsackSizeInstance& instance,
                                       const KnapsackKnobs& knobs = {});

/// Deterministic sizes, random profits: pack within capacity 1 (sizes rounded
/// down to multiples of eps/n, so true size <= 1 + eps) minimizing the
/// probability that the profit stays at or below the threshold.
struct KnapsackProfitInstance {
  struct Item {
    double size;
    Distribution profit;
    std::string label;
  };
  std::vector<Item> items;
  double threshold = 1.0;  // T > 0
  double eps = 0.2;
};

struct KnapsackProfitResult {
  std::vector<std::int32_t> items;
  double size_total = 0.0;              // true (un-rounded) size of the pick
  double prob_below_estimate = 0.0;     // |E[mu~]| ~ Pr(profit <= threshold-ish)
  double prob_above_certified = 0.0;    // 1 - estimate - certified_error
  double certified_error = 0.0;
  int expsum_terms = 0;
  SolveResult inner;
};

KnapsackProfitResult knapsack_profit_solve(const KnapsackProfitInstance& instance,
                                           const KnapsackKnobs& knobs = {});

}  // namespace eumax
