// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#include "eumax/problems/spanning_tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "eumax/errors.hpp"

namespace eumax {

namespace {

void validate(const SpanningTreeInstance& inst) {
  if (inst.num_nodes < 1) throw InvalidInput("spanning tree needs nodes");
  if (inst.num_nodes > inst.node_cap)
    throw InvalidInput("graph exceeds the spanning-tree node cap");
  for (const auto& e : inst.edges)
    if (e.u < 0 || e.u >= inst.num_nodes || e.v < 0 || e.v >= inst.num_nodes || e.u == e.v)
      throw InvalidInput("bad spanning-tree edge");
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

}  // namespace

double spanning_tree_count(const SpanningTreeInstance& inst) {
  validate(inst);
  const int n = inst.num_nodes;
  if (n == 1) return 1.0;
  // Laplacian minor determinant via Gaussian elimination.
  std::vector<std::vector<double>> lap(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (const auto& e : inst.edges) {
    lap[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.u)] += 1.0;
    lap[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.v)] += 1.0;
    lap[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] -= 1.0;
    lap[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] -= 1.0;
  }
  const int m = n - 1;
  double det = 1.0;
  for (int col = 0; col < m; ++col) {
    int pivot = col;
    for (int row = col + 1; row < m; ++row)
      if (std::abs(lap[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]) >
          std::abs(lap[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)]))
        pivot = row;
    if (std::abs(lap[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)]) < 1e-12)
      return 0.0;
    if (pivot != col) {
      std::swap(lap[static_cast<std::size_t>(pivot)], lap[static_cast<std::size_t>(col)]);
      det = -det;
    }
    det *= lap[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    for (int row = col + 1; row < m; ++row) {
      const double f = lap[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] /
                       lap[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
      for (int k = col; k < m; ++k)
        lap[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] -=
            f * lap[static_cast<std::size_t>(col)][static_cast<std::size_t>(k)];
    }
  }
  return std::round(std::abs(det));
}

std::vector<std::vector<std::int32_t>> enumerate_spanning_trees(
    const SpanningTreeInstance& inst) {
  validate(inst);
  const double count = spanning_tree_count(inst);
  if (count > static_cast<double>(inst.tree_cap))
    throw TooManyTrees("spanning-tree count exceeds the enumeration cap");
  if (count == 0.0) throw Infeasible("graph is not connected");

  const int need = inst.num_nodes - 1;
  const int m = static_cast<int>(inst.edges.size());
  std::vector<std::vector<std::int32_t>> trees;
  std::vector<std::int32_t> chosen;

  // Lexicographic combinations with a union-find spanning check.
  const auto recurse = [&](auto&& self, int next) -> void {
    if (static_cast<int>(chosen.size()) == need) {
      UnionFind uf(inst.num_nodes);
      int merged = 0;
      for (const std::int32_t e : chosen)
        if (uf.unite(inst.edges[static_cast<std::size_t>(e)].u,
                     inst.edges[static_cast<std::size_t>(e)].v))
          ++merged;
      if (merged == need) trees.push_back(chosen);
      return;
    }
    const int remaining = need - static_cast<int>(chosen.size());
    for (int e = next; e <= m - remaining; ++e) {
      chosen.push_back(e);
      self(self, e + 1);
      chosen.pop_back();
    }
  };
  if (need == 0) {
    trees.push_back({});
  } else {
    recurse(recurse, 0);
  }
  return trees;
}

SpanningTreeResult spanning_tree_solve(const SpanningTreeInstance& inst,
                                       const ExponentialSum& expsum) {
  const auto trees = enumerate_spanning_trees(inst);

  // Per-edge moments under every term, then score each tree exactly.
  std::vector<std::vector<std::complex<double>>> moments(inst.edges.size());
  for (std::size_t e = 0; e < inst.edges.size(); ++e) {
    moments[e].reserve(expsum.terms.size());
    for (const auto& term : expsum.terms)
      moments[e].push_back(moment_from_exponent(inst.edges[e].weight, term.exponent()).value);
  }

  SpanningTreeResult result;
  result.trees_scored = static_cast<std::int64_t>(trees.size());
  double best_mag = -1.0;
  for (const auto& tree : trees) {
    std::complex<double> value = 0.0;
    for (std::size_t k = 0; k < expsum.terms.size(); ++k) {
      std::complex<double> prod = expsum.terms[k].coeff;
      for (const std::int32_t e : tree) prod *= moments[static_cast<std::size_t>(e)][k];
      value += prod;
    }
    const double mag = std::abs(value);
    if (mag > best_mag) {
      best_mag = mag;
      result.edges = tree;
      result.exact_value = value;
    }
  }
  return result;
}

}  // namespace eumax
