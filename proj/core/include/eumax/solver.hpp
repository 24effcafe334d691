// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eumax/distributions.hpp"
#include "eumax/esum.hpp"
#include "eumax/rounding.hpp"

namespace eumax {

/// One staged-DP move. delta_id picks the rounded vector added by the move
/// (< 0 for none); tag labels the move in the reconstructed witness (< 0 to
/// record nothing, otherwise an element id or an adapter-defined label).
struct Transition {
  std::int64_t next_state;
  std::int32_t delta_id;
  std::int32_t tag;
};

/// A feasibility structure exposed as a staged DAG: states flow through
/// num_stages() layers of transitions; solutions are the tag sequences of
/// paths from an initial state to an accepting final state.
class StagedProblem {
 public:
  virtual ~StagedProblem() = default;
  virtual std::string name() const = 0;
  virtual int num_stages() const = 0;
  virtual std::vector<std::int64_t> initial_states() const = 0;
  virtual void transitions(int stage, std::int64_t state, std::vector<Transition>& out) const = 0;
  virtual bool accepting(std::int64_t final_state) const = 0;
  /// Independent feasibility check of a witness tag sequence.
  virtual bool check_solution(std::span<const std::int32_t> tags) const = 0;
};

/// A staged problem whose transitions take whole elements with random
/// weights; tags and delta ids are element indices.
class ProblemAdapter : public StagedProblem {
 public:
  virtual int num_elements() const = 0;
  virtual const Distribution& element_weight(int element) const = 0;
  virtual std::string element_label(int element) const { return std::to_string(element); }
};

/// One reachable configuration with a witness.
struct ReachableEntry {
  ConfigVector config;
  std::vector<std::int32_t> tags;  // witness moves in stage order
  std::int64_t final_state = 0;
};

struct ReachableSet {
  std::vector<ReachableEntry> entries;  // deterministic (DP insertion) order
  std::int64_t states_visited = 0;
};

/// Enumerates exactly the configurations realizable by feasible solutions,
/// by staged saturating vector addition with first-wins witness dedup.
/// Throws StateBudgetExceeded past `state_budget` distinct (state, config)
/// nodes.
ReachableSet enumerate_reachable(const StagedProblem& problem,
                                 std::span<const ElementVector> deltas,
                                 std::span<const std::int32_t> alpha_caps,
                                 std::int64_t state_budget);

enum class Mode { maximize, minimize };

struct SolveOptions {
  double eps = 0.1;  // rounding budget handed to derive_params
  double rounding_scale = 1.0;
  Mode mode = Mode::maximize;
  std::int64_t state_budget = 10'000'000;
  /// Measure max |score - exact expsum value| over every reachable config
  /// (the empirical closeness gap), not just the chosen one.
  bool full_gap_scan = true;
};

struct SolveResult {
  std::vector<std::int32_t> solution;  // element ids in stage order
  std::complex<double> score;
  std::complex<double> exact_value;  // E[mu~(w(S))] of the witness, un-rounded
  ConfigVector config;
  RoundingParams params;
  std::int64_t reachable_configs = 0;
  double chosen_gap = 0.0;
  double max_gap = 0.0;
  std::int64_t gap_scanned = 0;
  double sum_abs_coeffs = 0.0;
  double gap_bound = 0.0;  // 5 * eps * sum|c_k|
};

/// moments[element][term]; the per-element building block of every score.
using MomentTable = std::vector<std::vector<std::complex<double>>>;

MomentTable build_moment_table(const ProblemAdapter& adapter, const ExponentialSum& expsum);

/// sum_k c_k prod_{e in elements} moments[e][k] — the exact value of
/// E[mu~(w(S))] for independent elements.
std::complex<double> expected_utility_expsum(std::span<const std::int32_t> elements,
                                             const MomentTable& moments,
                                             std::span<const std::complex<double>> coeffs);
std::complex<double> expected_utility_expsum(std::span<const std::int32_t> elements,
                                             const MomentTable& moments,
                                             const ExponentialSum& expsum);

/// The full engine on a prebuilt moment table: round every element, enumerate
/// reachable configurations, return the witness of the config with the
/// extremal |score|. Ties break to the lexicographically smallest config.
SolveResult solve_with_moments(const StagedProblem& problem,
                               std::span<const std::complex<double>> coeffs,
                               const MomentTable& moments, const SolveOptions& options);

/// Convenience wrapper: builds the moment table from the adapter's element
/// weights and the exponential sum's terms.
SolveResult solve(const ProblemAdapter& adapter, const ExponentialSum& expsum,
                  const SolveOptions& options);

}  // namespace eumax
