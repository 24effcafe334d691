// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#include "eumax/random_instances.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "eumax/rng.hpp"

namespace eumax {

namespace {

// Small deterministic helpers over the counter-based stream.
struct Draw {
  std::uint64_t seed;
  std::uint64_t stream;
  std::uint64_t counter = 0;

  double uniform() { return rng::uniform01(seed, stream, counter++); }
  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(uniform() * (hi - lo + 1)) % (hi - lo + 1);
  }
  double grid(double lo, double step, int count) { return lo + step * range(0, count - 1); }
};

Distribution random_discrete_weight(Draw& d, double value_lo, double value_step, int value_count) {
  const int points = d.range(1, 3);
  std::set<double> values;
  while (static_cast<int>(values.size()) < points)
    values.insert(d.grid(value_lo, value_step, value_count));
  std::vector<double> vals(values.begin(), values.end());
  std::vector<double> probs;
  if (vals.size() == 1) {
    probs = {1.0};
  } else if (vals.size() == 2) {
    const double p = 0.1 * d.range(2, 8);
    probs = {p, 1.0 - p};
  } else {
    const double p1 = 0.1 * d.range(1, 5);
    const double p2 = 0.1 * d.range(1, 4);
    probs = {p1, p2, 1.0 - p1 - p2};
  }
  return Distribution::discrete(std::move(vals), std::move(probs));
}

}  // namespace

ShortestPathInstance random_shortest_path(int num_nodes, std::uint64_t seed) {
  Draw d{seed, 0x5750};
  ShortestPathInstance inst;
  inst.num_nodes = num_nodes;
  inst.source = 0;
  inst.sink = num_nodes - 1;
  inst.hop_cap = num_nodes;
  for (int i = 0; i + 1 < num_nodes; ++i) {
    inst.edges.push_back({i, i + 1, random_discrete_weight(d, 0.1, 0.05, 8),
                          "e" + std::to_string(inst.edges.size())});
  }
  for (int i = 0; i < num_nodes; ++i) {
    for (int j = i + 1; j < num_nodes; ++j) {
      if (j == i + 1) continue;
      if (d.uniform() < 0.45) {
        inst.edges.push_back({i, j, random_discrete_weight(d, 0.1, 0.05, 10),
                              "e" + std::to_string(inst.edges.size())});
      }
    }
  }
  return inst;
}

ProfitBandInstance random_band_knapsack(int num_items, std::uint64_t seed) {
  Draw d{seed, 0xBA4D};
  ProfitBandInstance inst;
  std::int64_t total = 0;
  for (int i = 0; i < num_items; ++i) {
    inst.weights.push_back(random_discrete_weight(d, 0.05, 0.05, 10));
    const std::int64_t units = d.range(1, 5);
    inst.units.push_back(units);
    total += units;
    inst.labels.push_back("item" + std::to_string(i));
  }
  inst.band_lo = static_cast<std::int64_t>(std::floor(0.35 * static_cast<double>(total)));
  inst.band_hi = static_cast<std::int64_t>(std::ceil(0.65 * static_cast<double>(total)));
  inst.excluded.assign(static_cast<std::size_t>(num_items), false);
  return inst;
}

SpanningTreeInstance random_spanning_tree(int num_nodes, std::uint64_t seed) {
  Draw d{seed, 0x7BEE};
  SpanningTreeInstance inst;
  inst.num_nodes = num_nodes;
  std::set<std::pair<int, int>> present;
  for (int i = 1; i < num_nodes; ++i) {
    const int parent = d.range(0, i - 1);
    present.emplace(parent, i);
    inst.edges.push_back({parent, i, random_discrete_weight(d, 0.1, 0.05, 8),
                          "e" + std::to_string(inst.edges.size())});
  }
  for (int i = 0; i < num_nodes; ++i) {
    for (int j = i + 1; j < num_nodes; ++j) {
      if (present.count({i, j})) continue;
      if (d.uniform() < 0.4) {
        inst.edges.push_back({i, j, random_discrete_weight(d, 0.1, 0.05, 8),
                              "e" + std::to_string(inst.edges.size())});
      }
    }
  }
  return inst;
}

KnapsackSizeInstance random_knapsack_size(int num_items, double gamma, double eps,
                                          std::uint64_t seed) {
  Draw d{seed, 0x5128};
  KnapsackSizeInstance inst;
  inst.gamma_target = gamma;
  inst.eps = eps;
  for (int i = 0; i < num_items; ++i) {
    KnapsackSizeInstance::Item item;
    // Two light items keep a qualifying set available at any gamma.
    const double s = i < 2 ? 0.2 : 0.1 * d.range(3, 9);
    const double q = 0.1 * d.range(2, 6);  // Pr(size = 0)
    item.size = Distribution::discrete({0.0, s}, {q, 1.0 - q});
    item.profit = d.range(1, 5);
    item.label = "item" + std::to_string(i);
    inst.items.push_back(std::move(item));
  }
  return inst;
}

KnapsackProfitInstance random_knapsack_profit(int num_items, double eps, std::uint64_t seed) {
  Draw d{seed, 0x9F17};
  KnapsackProfitInstance inst;
  inst.eps = eps;
  inst.threshold = 1.0;
  for (int i = 0; i < num_items; ++i) {
    KnapsackProfitInstance::Item item;
    item.size = i < 2 ? 0.25 : 0.05 * d.range(4, 14);
    const double lo = 0.1 * d.range(2, 5);
    const double hi = 0.1 * d.range(7, 14);
    const double p = 0.1 * d.range(2, 6);
    item.profit = Distribution::discrete({lo, hi}, {p, 1.0 - p});
    item.label = "item" + std::to_string(i);
    inst.items.push_back(std::move(item));
  }
  return inst;
}

MultidimKnapsackInstance random_multidim_knapsack(int num_items, double gamma, double eps,
                                                  bool correlated, std::uint64_t seed) {
  Draw d{seed, 0x2D2D};
  MultidimKnapsackInstance inst;
  inst.gamma = gamma;
  inst.eps = eps;
  for (int i = 0; i < num_items; ++i) {
    MultidimKnapsackInstance::Item item;
    item.profit = d.range(1, 5);
    item.label = "item" + std::to_string(i);
    if (correlated) {
      // Fully correlated coordinates: both equal the same Bernoulli draw.
      // Sizes sit on the quarter grid so subset sums avoid the open ramp
      // zone at eps = 0.25.
      const double s = 0.25 * d.range(1, 3);
      const double q = 0.1 * d.range(3, 7);
      item.joint = {{0.0, 0.0, q}, {s, s, 1.0 - q}};
      item.w1 = Distribution::discrete({0.0, s}, {q, 1.0 - q});
      item.w2 = item.w1;
    } else {
      const double s1 = 0.2 * d.range(1, 4);
      const double q1 = 0.1 * d.range(3, 7);
      const double s2 = 0.2 * d.range(1, 4);
      const double q2 = 0.1 * d.range(3, 7);
      item.w1 = Distribution::discrete({0.0, s1}, {q1, 1.0 - q1});
      item.w2 = Distribution::discrete({0.0, s2}, {q2, 1.0 - q2});
    }
    inst.items.push_back(std::move(item));
  }
  return inst;
}

}  // namespace eumax
