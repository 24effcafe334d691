// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#include "eumax/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "eumax/errors.hpp"

namespace eumax {

namespace {
constexpr double kMergeTol = 1e-12;
}

double DiscreteLaw::total_mass() const {
  double m = 0.0;
  for (const auto& [v, p] : support) m += p;
  return m;
}

double DiscreteLaw::cdf(double x) const {
  double m = 0.0;
  for (const auto& [v, p] : support) {
    if (v > x) break;
    m += p;
  }
  return m;
}

double DiscreteLaw::expectation_of(const UtilitySpec& mu) const {
  double acc = 0.0;
  for (const auto& [v, p] : support) acc += mu(v) * p;
  return acc;
}

DiscreteLaw make_law(const Distribution& dist) {
  const auto* d = dist.as_discrete();
  if (!d) throw InvalidInput("make_law needs a finite discrete distribution");
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(d->values.size());
  for (std::size_t i = 0; i < d->values.size(); ++i) pairs.emplace_back(d->values[i], d->probs[i]);
  std::sort(pairs.begin(), pairs.end());
  DiscreteLaw law;
  for (const auto& [v, p] : pairs) {
    if (!law.support.empty() && v - law.support.back().first <= kMergeTol) {
      law.support.back().second += p;
    } else {
      law.support.emplace_back(v, p);
    }
  }
  return law;
}

DiscreteLaw convolve(std::span<const DiscreteLaw> laws, std::int64_t support_cap) {
  DiscreteLaw acc;
  acc.support = {{0.0, 1.0}};
  for (const auto& law : laws) {
    if (static_cast<std::int64_t>(acc.support.size()) *
            static_cast<std::int64_t>(law.support.size()) >
        16 * support_cap)
      throw SupportExplosion("convolution support exceeds the cap");
    std::vector<std::pair<double, double>> next;
    next.reserve(acc.support.size() * law.support.size());
    for (const auto& [va, pa] : acc.support)
      for (const auto& [vb, pb] : law.support) next.emplace_back(va + vb, pa * pb);
    std::sort(next.begin(), next.end());
    acc.support.clear();
    for (const auto& [v, p] : next) {
      if (!acc.support.empty() && v - acc.support.back().first <= kMergeTol) {
        acc.support.back().second += p;
      } else {
        acc.support.emplace_back(v, p);
      }
    }
    if (static_cast<std::int64_t>(acc.support.size()) > support_cap)
      throw SupportExplosion("convolution support exceeds the cap");
  }
  return acc;
}

McEstimate mc_expected_utility(std::span<const Distribution> weights, const UtilitySpec& mu,
                               std::int64_t samples, std::uint64_t seed) {
  if (samples < 10000) throw InvalidInput("Monte Carlo needs at least 1e4 samples");
  double sum = 0.0, sumsq = 0.0;
  for (std::int64_t j = 0; j < samples; ++j) {
    double total = 0.0;
    for (std::size_t e = 0; e < weights.size(); ++e)
      total += weights[e].sample(seed, static_cast<std::uint64_t>(e),
                                 static_cast<std::uint64_t>(j));
    const double u = mu(total);
    sum += u;
    sumsq += u * u;
  }
  McEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.estimate = sum / static_cast<double>(samples);
  const double var =
      std::max(0.0, sumsq / static_cast<double>(samples) - est.estimate * est.estimate);
  est.stderr_ = std::sqrt(var / static_cast<double>(samples));
  return est;
}

std::vector<std::vector<std::int32_t>> enumerate_solutions(const StagedProblem& problem,
                                                           std::int64_t cap) {
  std::set<std::vector<std::int32_t>> found;
  std::int64_t walked = 0;
  const std::int64_t walk_cap = cap * 64;

  std::vector<Transition> moves;
  std::vector<std::int32_t> tags;
  const int stages = problem.num_stages();

  const auto dfs = [&](auto&& self, int stage, std::int64_t state) -> void {
    if (++walked > walk_cap)
      throw TooManySolutions("oracle enumeration walked past the path cap");
    if (stage == stages) {
      if (!problem.accepting(state)) return;
      std::vector<std::int32_t> sorted = tags;
      std::sort(sorted.begin(), sorted.end());
      found.insert(std::move(sorted));
      if (static_cast<std::int64_t>(found.size()) > cap)
        throw TooManySolutions("oracle enumeration exceeds the solution cap");
      return;
    }
    std::vector<Transition> local;
    problem.transitions(stage, state, local);
    for (const Transition& tr : local) {
      const bool tagged = tr.tag >= 0;
      if (tagged) tags.push_back(tr.tag);
      self(self, stage + 1, tr.next_state);
      if (tagged) tags.pop_back();
    }
  };

  for (const std::int64_t s : problem.initial_states()) dfs(dfs, 0, s);
  return {found.begin(), found.end()};
}

double probability_sum_at_most(std::span<const Distribution> weights, double cap,
                               std::int64_t support_cap) {
  std::vector<DiscreteLaw> laws;
  laws.reserve(weights.size());
  for (const auto& w : weights) laws.push_back(make_law(w));
  return convolve(laws, support_cap).cdf(cap + 1e-12);
}

OracleReport brute_force_solve(const ProblemAdapter& adapter, const UtilitySpec& mu,
                               const OracleOptions& options) {
  const auto solutions = enumerate_solutions(adapter, options.solution_cap);
  if (solutions.empty()) throw Infeasible("oracle found no feasible solution");

  bool all_discrete = true;
  for (int e = 0; e < adapter.num_elements() && all_discrete; ++e)
    all_discrete = adapter.element_weight(e).is_discrete_finite();

  OracleReport report;
  report.exact = all_discrete;
  report.seed = options.seed;
  report.mc_samples = all_discrete ? 0 : options.mc_samples;
  report.solutions.reserve(solutions.size());

  for (const auto& sol : solutions) {
    OracleReport::Entry entry;
    entry.elements = sol;
    if (all_discrete) {
      std::vector<DiscreteLaw> laws;
      laws.reserve(sol.size());
      for (const std::int32_t e : sol) laws.push_back(make_law(adapter.element_weight(e)));
      entry.value = convolve(laws, options.support_cap).expectation_of(mu);
    } else {
      std::vector<Distribution> dists;
      dists.reserve(sol.size());
      for (const std::int32_t e : sol) dists.push_back(adapter.element_weight(e));
      const McEstimate est = mc_expected_utility(dists, mu, options.mc_samples, options.seed);
      entry.value = est.estimate;
      entry.stderr_ = est.stderr_;
    }
    report.solutions.push_back(std::move(entry));
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < report.solutions.size(); ++i) {
    const double v = report.solutions[i].value;
    const double b = report.solutions[best].value;
    // Ties keep the lexicographically earlier solution (enumeration order).
    if (options.mode == Mode::maximize ? v > b : v < b) best = i;
  }
  report.best_index = best;
  report.best_value = report.solutions[best].value;
  return report;
}

}  // namespace eumax
