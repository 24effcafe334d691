// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eumax/esum.hpp"
#include "eumax/distributions.hpp"

namespace eumax {

/// Undirected graph with random edge weights; solutions are spanning trees.
struct SpanningTreeInstance {
  struct Edge {
    int u;
    int v;
    Distribution weight;
    std::string label;
  };
  int num_nodes = 0;
  std::vector<Edge> edges;
  int node_cap = 8;               // small-graph guard
  std::int64_t tree_cap = 100000;  // matrix-tree count guard
};

/// Number of spanning trees by the matrix-tree theorem (Laplacian minor
/// determinant), used as the enumeration guard.
double spanning_tree_count(const SpanningTreeInstance& instance);

/// All spanning trees as sorted edge-index vectors, lexicographic order.
std::vector<std::vector<std::int32_t>> enumerate_spanning_trees(
    const SpanningTreeInstance& instance);

struct SpanningTreeResult {
  std::vector<std::int32_t> edges;  // sorted edge indices of the best tree
  std::complex<double> exact_value;  // E[mu~(w(T))] of that tree
  std::int64_t trees_scored = 0;
};

/// Scores every spanning tree by its exact exponential-sum expectation and
/// returns the best; this family bypasses the configuration DP entirely.
SpanningTreeResult spanning_tree_solve(const SpanningTreeInstance& instance,
                                       const ExponentialSum& expsum);

}  // namespace eumax
