// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#include "eumax/solver.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "eumax/errors.hpp"

namespace eumax {

namespace {

using Cplx = std::complex<double>;

std::uint64_t hash_words(std::int64_t state, const std::int32_t* words, std::size_t n) {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ static_cast<std::uint64_t>(state);
  h *= 0x100000001b3ULL;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= static_cast<std::uint32_t>(words[i]);
    h *= 0x100000001b3ULL;
  }
  return h;
}

// A frontier node: (state, config) with the last witness-tag link.
struct Node {
  std::int64_t state;
  std::int32_t chain;  // index into the tag-chain arena, -1 for none
};

struct TagLink {
  std::int32_t parent;  // previous link, -1 at the root
  std::int32_t tag;
};

}  // namespace

ReachableSet enumerate_reachable(const StagedProblem& problem,
                                 std::span<const ElementVector> deltas,
                                 std::span<const std::int32_t> alpha_caps,
                                 std::int64_t state_budget) {
  const std::size_t width = 2 * alpha_caps.size();
  const int stages = problem.num_stages();

  std::vector<TagLink> chains;
  std::int64_t visited = 0;

  // Frontier storage: nodes plus their configs in a parallel arena.
  std::vector<Node> nodes;
  std::vector<std::int32_t> cfgs;
  std::unordered_map<std::uint64_t, std::vector<std::int32_t>> index;

  auto try_insert = [&](std::int64_t state, const std::int32_t* cfg) -> bool {
    const std::uint64_t h = hash_words(state, cfg, width);
    auto& bucket = index[h];
    for (const std::int32_t cand : bucket) {
      const auto& node = nodes[static_cast<std::size_t>(cand)];
      if (node.state != state) continue;
      if (std::equal(cfg, cfg + width, cfgs.begin() + static_cast<std::ptrdiff_t>(cand) * width))
        return false;  // first witness wins
    }
    bucket.push_back(static_cast<std::int32_t>(nodes.size()));
    nodes.push_back(Node{state, -1});
    cfgs.insert(cfgs.end(), cfg, cfg + width);
    if (++visited > state_budget)
      throw StateBudgetExceeded("reachable-set enumeration exceeded the state budget");
    return true;
  };

  const std::vector<std::int32_t> zero(width, 0);
  for (const std::int64_t s : problem.initial_states()) {
    if (try_insert(s, zero.data())) nodes.back().chain = -1;
  }

  std::vector<Transition> moves;
  std::vector<std::int32_t> scratch(width);
  for (int stage = 0; stage < stages; ++stage) {
    std::vector<Node> prev_nodes;
    std::vector<std::int32_t> prev_cfgs;
    prev_nodes.swap(nodes);
    prev_cfgs.swap(cfgs);
    index.clear();

    for (std::size_t i = 0; i < prev_nodes.size(); ++i) {
      const Node& from = prev_nodes[i];
      const std::int32_t* from_cfg = prev_cfgs.data() + i * width;
      moves.clear();
      problem.transitions(stage, from.state, moves);
      for (const Transition& tr : moves) {
        const std::int32_t* next_cfg = from_cfg;
        if (tr.delta_id >= 0) {
          std::copy(from_cfg, from_cfg + width, scratch.begin());
          const ElementVector& dv = deltas[static_cast<std::size_t>(tr.delta_id)];
          for (std::size_t t = 0; 2 * t < width; ++t) {
            const std::int64_t cap = alpha_caps[t];
            const std::int64_t add = dv.ab[2 * t] == kOverflow ? cap + 1 : dv.ab[2 * t];
            scratch[2 * t] = static_cast<std::int32_t>(std::min<std::int64_t>(cap, scratch[2 * t] + add));
            scratch[2 * t + 1] += dv.ab[2 * t + 1];
          }
          next_cfg = scratch.data();
        }
        if (try_insert(tr.next_state, next_cfg)) {
          std::int32_t chain = from.chain;
          if (tr.tag >= 0) {
            chains.push_back(TagLink{from.chain, tr.tag});
            chain = static_cast<std::int32_t>(chains.size() - 1);
          }
          nodes.back().chain = chain;
        }
      }
    }
  }

  // Collect accepting nodes, deduping configurations across final states.
  ReachableSet out;
  out.states_visited = visited;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!problem.accepting(nodes[i].state)) continue;
    const std::int32_t* cfg = cfgs.data() + i * width;
    const std::uint64_t h = hash_words(0, cfg, width);
    auto& bucket = seen[h];
    bool dup = false;
    for (const std::size_t e : bucket) {
      const auto& prior = out.entries[e].config;
      if (std::equal(cfg, cfg + width, prior.begin())) {
        dup = true;
        break;
      }
    }
    if (dup) continue;
    bucket.push_back(out.entries.size());

    ReachableEntry entry;
    entry.config.assign(cfg, cfg + width);
    entry.final_state = nodes[i].state;
    for (std::int32_t c = nodes[i].chain; c >= 0; c = chains[static_cast<std::size_t>(c)].parent)
      entry.tags.push_back(chains[static_cast<std::size_t>(c)].tag);
    std::reverse(entry.tags.begin(), entry.tags.end());
    out.entries.push_back(std::move(entry));
  }
  return out;
}

MomentTable build_moment_table(const ProblemAdapter& adapter, const ExponentialSum& expsum) {
  MomentTable table(static_cast<std::size_t>(adapter.num_elements()));
  for (int e = 0; e < adapter.num_elements(); ++e) {
    auto& row = table[static_cast<std::size_t>(e)];
    row.reserve(expsum.terms.size());
    for (const auto& term : expsum.terms)
      row.push_back(moment_from_exponent(adapter.element_weight(e), term.exponent()).value);
  }
  return table;
}

Cplx expected_utility_expsum(std::span<const std::int32_t> elements, const MomentTable& moments,
                             std::span<const Cplx> coeffs) {
  Cplx acc = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Cplx prod = 1.0;
    for (const std::int32_t e : elements) prod *= moments[static_cast<std::size_t>(e)][k];
    acc += coeffs[k] * prod;
  }
  return acc;
}

Cplx expected_utility_expsum(std::span<const std::int32_t> elements, const MomentTable& moments,
                             const ExponentialSum& expsum) {
  std::vector<Cplx> coeffs;
  coeffs.reserve(expsum.terms.size());
  for (const auto& t : expsum.terms) coeffs.push_back(t.coeff);
  return expected_utility_expsum(elements, moments, coeffs);
}

SolveResult solve_with_moments(const StagedProblem& problem, std::span<const Cplx> coeffs,
                               const MomentTable& moments, const SolveOptions& options) {
  const int num_terms = static_cast<int>(coeffs.size());
  // The rounding bound sums per-element errors over a solution, so n must
  // bound the solution length; stages bound it when walks can repeat
  // elements.
  const int n_bound = std::max<int>(
      {1, static_cast<int>(moments.size()), problem.num_stages()});

  SolveResult result;
  std::vector<ElementVector> deltas(moments.size());
  std::vector<std::int32_t> caps;
  if (num_terms > 0) {
    result.params = derive_params(n_bound, num_terms, options.eps, options.rounding_scale);
    for (std::size_t e = 0; e < moments.size(); ++e)
      deltas[e] = round_element(moments[e], result.params);
    caps.assign(static_cast<std::size_t>(num_terms), result.params.j_cap);
  } else {
    result.params.n = n_bound;
    result.params.eps = options.eps;
  }

  ReachableSet reach = enumerate_reachable(problem, deltas, caps, options.state_budget);
  if (reach.entries.empty()) throw Infeasible("no feasible solution reaches an accepting state");
  result.reachable_configs = static_cast<std::int64_t>(reach.entries.size());

  double sum_abs = 0.0;
  for (const auto& c : coeffs) sum_abs += std::abs(c);
  result.sum_abs_coeffs = sum_abs;
  result.gap_bound = 5.0 * options.eps * sum_abs;

  std::size_t best = 0;
  double best_mag = 0.0;
  for (std::size_t i = 0; i < reach.entries.size(); ++i) {
    const double mag = std::abs(score_config(reach.entries[i].config, coeffs, result.params));
    const bool better = options.mode == Mode::maximize ? mag > best_mag : mag < best_mag;
    const bool tie = mag == best_mag && reach.entries[i].config < reach.entries[best].config;
    if (i == 0 || better || tie) {
      best = i;
      best_mag = mag;
    }
  }

  const ReachableEntry& chosen = reach.entries[best];
  if (!problem.check_solution(chosen.tags))
    throw Error("internal: witness failed the adapter feasibility check");

  result.solution = chosen.tags;
  result.config = chosen.config;
  result.score = score_config(chosen.config, coeffs, result.params);
  result.exact_value = expected_utility_expsum(chosen.tags, moments, coeffs);
  result.chosen_gap = std::abs(result.score - result.exact_value);

  if (options.full_gap_scan) {
    double worst = 0.0;
    for (const auto& entry : reach.entries) {
      const Cplx s = score_config(entry.config, coeffs, result.params);
      const Cplx v = expected_utility_expsum(entry.tags, moments, coeffs);
      worst = std::max(worst, std::abs(s - v));
    }
    result.max_gap = worst;
    result.gap_scanned = result.reachable_configs;
  } else {
    result.max_gap = result.chosen_gap;
    result.gap_scanned = 1;
  }
  return result;
}

SolveResult solve(const ProblemAdapter& adapter, const ExponentialSum& expsum,
                  const SolveOptions& options) {
  const MomentTable table = build_moment_table(adapter, expsum);
  std::vector<Cplx> coeffs;
  coeffs.reserve(expsum.terms.size());
  for (const auto& t : expsum.terms) coeffs.push_back(t.coeff);
  return solve_with_moments(adapter, coeffs, table, options);
}

}  // namespace eumax
