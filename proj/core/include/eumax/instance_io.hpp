// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "eumax/problems/knapsack.hpp"
#include "eumax/problems/multi.hpp"
#include "eumax/problems/shortest_path.hpp"
#include "eumax/problems/spanning_tree.hpp"
#include "eumax/utility.hpp"

namespace eumax {

/// Solver knobs shared by every subcommand; mirrors the CLI flags.
struct SolverParams {
  double eps = 0.1;
  int max_terms = 2001;
  double rounding_scale = 1.0;
  int hop_cap = 0;
  std::int64_t state_budget = 10'000'000;
  std::uint64_t seed = 1;
};

enum class ProblemKind {
  shortest_path,
  knapsack_band,
  knapsack_size,
  knapsack_profit,
  spanning_tree,
  multi_knapsack,
  multidim_knapsack,
};

std::string to_string(ProblemKind kind);

/// A parsed instance file: the problem kind tag picks which payload is set.
/// EUM problems (shortest path, band knapsack, spanning tree) carry a
/// utility; the knapsack schemes derive their ramp utilities from eps.
struct Instance {
  ProblemKind kind = ProblemKind::shortest_path;
  std::optional<UtilitySpec> utility;
  SolverParams params;

  std::optional<ShortestPathInstance> shortest_path;
  std::optional<ProfitBandInstance> band;
  std::optional<KnapsackSizeInstance> knapsack_size;
  std::optional<KnapsackProfitInstance> knapsack_profit;
  std::optional<SpanningTreeInstance> spanning_tree;
  std::optional<MultiKnapsackInstance> multi_knapsack;
  std::optional<MultidimKnapsackInstance> multidim;
  MultidimMode multidim_mode = MultidimMode::independent;
};

Instance parse_instance_file(const std::string& path);
Instance parse_instance_text(const std::string& text);

/// Utility descriptor alone, e.g. {"kind":"threshold_ramp","delta_u":0.5}.
UtilitySpec parse_utility_text(const std::string& text);

/// Distribution descriptor alone, e.g. {"kind":"poisson","lambda":1.0}.
Distribution parse_distribution_text(const std::string& text);

}  // namespace eumax
