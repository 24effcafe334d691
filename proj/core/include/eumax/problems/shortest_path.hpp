// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "eumax/solver.hpp"

namespace eumax {

/// Directed graph with random edge lengths; solutions are walks (non-simple
/// paths allowed) from source to sink of at most hop_cap edges.
struct ShortestPathInstance {
  struct Edge {
    int from;
    int to;
    Distribution weight;
    std::string label;
  };
  int num_nodes = 0;
  std::vector<Edge> edges;
  int source = 0;
  int sink = 0;
  int hop_cap = 0;  // 0 means the default of one hop per edge
};

/// Staged DP over (hops, node); each stage either traverses an edge or, at
/// the sink, waits. Witness tags are edge indices in traversal order.
std::unique_ptr<ProblemAdapter> shortest_path_adapter(const ShortestPathInstance& instance);

}  // namespace eumax
