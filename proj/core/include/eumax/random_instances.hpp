// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "eumax/problems/knapsack.hpp"
#include "eumax/problems/multi.hpp"
#include "eumax/problems/shortest_path.hpp"
#include "eumax/problems/spanning_tree.hpp"

namespace eumax {

// Seeded generators for desk-scale random instances; identical seeds give
// identical instances. Weight supports stay on a coarse grid so probability
// atoms do not straddle ramp boundaries by accident.

ShortestPathInstance random_shortest_path(int num_nodes, std::uint64_t seed);

/// Band-constrained subset family with random discrete weights (the EUM
/// knapsack family).
ProfitBandInstance random_band_knapsack(int num_items, std::uint64_t seed);

SpanningTreeInstance random_spanning_tree(int num_nodes, std::uint64_t seed);

/// Bernoulli-size items for the bi-criterion scheme.
KnapsackSizeInstance random_knapsack_size(int num_items, double gamma, double eps,
                                          std::uint64_t seed);

KnapsackProfitInstance random_knapsack_profit(int num_items, double eps, std::uint64_t seed);

MultidimKnapsackInstance random_multidim_knapsack(int num_items, double gamma, double eps,
                                                  bool correlated, std::uint64_t seed);

}  // namespace eumax
