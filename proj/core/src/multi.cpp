// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#include "eumax/problems/multi.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "eumax/errors.hpp"

namespace eumax {

namespace {

using Cplx = std::complex<double>;

class PairAssignProblem final : public StagedProblem {
 public:
  explicit PairAssignProblem(PairAssignInstance inst) : inst_(std::move(inst)) {
    if (inst_.num_items <= 0) throw InvalidInput("pair assignment needs items");
    if (inst_.allowed.empty())
      inst_.allowed.assign(static_cast<std::size_t>(inst_.num_items), 3);
    if (inst_.units.empty()) inst_.units.assign(static_cast<std::size_t>(inst_.num_items), 0);
    if (static_cast<int>(inst_.allowed.size()) != inst_.num_items ||
        static_cast<int>(inst_.units.size()) != inst_.num_items)
      throw InvalidInput("pair assignment field sizes disagree");
  }

  std::string name() const override { return inst_.paired ? "paired_subset" : "disjoint_pair"; }
  int num_stages() const override { return inst_.num_items; }
  std::vector<std::int64_t> initial_states() const override { return {0}; }

  void transitions(int stage, std::int64_t state, std::vector<Transition>& out) const override {
    out.push_back(Transition{state, -1, -1});
    const std::int64_t next = state + inst_.units[static_cast<std::size_t>(stage)];
    if (next > inst_.band_hi) return;
    if (inst_.paired) {
      if (inst_.allowed[static_cast<std::size_t>(stage)])
        out.push_back(Transition{next, 2 * stage, 2 * stage});
      return;
    }
    if (inst_.allowed[static_cast<std::size_t>(stage)] & 1)
      out.push_back(Transition{next, 2 * stage, 2 * stage});
    if (inst_.allowed[static_cast<std::size_t>(stage)] & 2)
      out.push_back(Transition{next, 2 * stage + 1, 2 * stage + 1});
  }

  bool accepting(std::int64_t state) const override {
    return state >= inst_.band_lo && state <= inst_.band_hi;
  }

  bool check_solution(std::span<const std::int32_t> tags) const override {
    std::int64_t total = 0;
    std::int32_t prev_item = -1;
    for (const std::int32_t t : tags) {
      const std::int32_t item = t / 2;
      if (item <= prev_item || item >= inst_.num_items) return false;
      total += inst_.units[static_cast<std::size_t>(item)];
      prev_item = item;
    }
    return total >= inst_.band_lo && total <= inst_.band_hi;
  }

 private:
  PairAssignInstance inst_;
};

Cplx slice_products(const std::vector<std::int32_t>& items, const MomentTable& moments,
                    std::span<const Cplx> coeffs) {
  Cplx acc = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Cplx prod = 1.0;
    for (const std::int32_t e : items) prod *= moments[static_cast<std::size_t>(e)][k];
    acc += coeffs[k] * prod;
  }
  return acc;
}

std::int64_t floor_units(double x) { return static_cast<std::int64_t>(std::floor(x + 1e-9)); }

}  // namespace

std::optional<MultiUtilityResult> multi_utility_solve(
    const PairAssignInstance& structure, const std::array<const ExponentialSum*, 2>& expsums,
    const std::array<MomentTable, 2>& moments, const std::array<double, 2>& lambdas,
    const MultiUtilityOptions& options, const MultiAccept& accept) {
  const PairAssignProblem problem(structure);
  const int n = structure.num_items;
  const std::array<int, 2> num_terms{expsums[0]->size(), expsums[1]->size()};
  const double rounding_eps = options.rounding_eps > 0.0 ? options.rounding_eps : options.eps / 8.0;

  std::array<RoundingParams, 2> params;
  std::array<std::vector<Cplx>, 2> coeffs;
  for (int u = 0; u < 2; ++u) {
    params[static_cast<std::size_t>(u)] = derive_params(
        n, std::max(1, num_terms[static_cast<std::size_t>(u)]), rounding_eps,
        options.rounding_scale);
    for (const auto& t : expsums[static_cast<std::size_t>(u)]->terms)
      coeffs[static_cast<std::size_t>(u)].push_back(t.coeff);
  }

  // Concatenated coordinates: slice 1 then slice 2; a move into S_i adds that
  // utility's rounded vector and zero on the other slice (paired moves add
  // both).
  const std::size_t w1 = 2 * static_cast<std::size_t>(num_terms[0]);
  const std::size_t w2 = 2 * static_cast<std::size_t>(num_terms[1]);
  std::vector<ElementVector> deltas(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    const ElementVector r1 = num_terms[0]
        ? round_element(moments[0][static_cast<std::size_t>(i)], params[0])
        : ElementVector{};
    const ElementVector r2 = num_terms[1]
        ? round_element(moments[1][static_cast<std::size_t>(i)], params[1])
        : ElementVector{};
    ElementVector& into1 = deltas[static_cast<std::size_t>(2 * i)];
    into1.ab.assign(w1 + w2, 0);
    std::copy(r1.ab.begin(), r1.ab.end(), into1.ab.begin());
    if (structure.paired) {
      std::copy(r2.ab.begin(), r2.ab.end(), into1.ab.begin() + static_cast<std::ptrdiff_t>(w1));
    } else {
      ElementVector& into2 = deltas[static_cast<std::size_t>(2 * i + 1)];
      into2.ab.assign(w1 + w2, 0);
      std::copy(r2.ab.begin(), r2.ab.end(), into2.ab.begin() + static_cast<std::ptrdiff_t>(w1));
    }
  }

  std::vector<std::int32_t> caps;
  caps.insert(caps.end(), static_cast<std::size_t>(num_terms[0]), params[0].j_cap);
  caps.insert(caps.end(), static_cast<std::size_t>(num_terms[1]), params[1].j_cap);

  const ReachableSet reach = enumerate_reachable(problem, deltas, caps, options.state_budget);

  const MultiAccept accept_fn = accept ? accept : [&](const std::array<Cplx, 2>& exact,
                                                      const std::array<Cplx, 2>& score) {
    (void)exact;
    for (int u = 0; u < 2; ++u) {
      const double bar = lambdas[static_cast<std::size_t>(u)] - options.eps -
                         expsums[static_cast<std::size_t>(u)]->certified_error;
      if (std::abs(score[static_cast<std::size_t>(u)]) < bar) return false;
    }
    return true;
  };

  for (const auto& entry : reach.entries) {
    std::array<std::vector<std::int32_t>, 2> sets;
    for (const std::int32_t t : entry.tags) {
      if (structure.paired) {
        sets[0].push_back(t / 2);
        sets[1].push_back(t / 2);
      } else {
        sets[static_cast<std::size_t>(t % 2)].push_back(t / 2);
      }
    }
    std::array<Cplx, 2> score;
    std::array<Cplx, 2> exact;
    ConfigVector slice1(entry.config.begin(), entry.config.begin() + static_cast<std::ptrdiff_t>(w1));
    ConfigVector slice2(entry.config.begin() + static_cast<std::ptrdiff_t>(w1), entry.config.end());
    score[0] = score_config(slice1, coeffs[0], params[0]);
    score[1] = score_config(slice2, coeffs[1], params[1]);
    exact[0] = slice_products(sets[0], moments[0], coeffs[0]);
    exact[1] = slice_products(sets[1], moments[1], coeffs[1]);
    if (!accept_fn(exact, score)) continue;

    MultiUtilityResult result;
    result.sets = std::move(sets);
    result.exact_values = exact;
    result.scores = score;
    result.params = params;
    result.reachable_configs = static_cast<std::int64_t>(reach.entries.size());
    return result;
  }
  return std::nullopt;
}

namespace {

// Shared profit-guess scaffolding (powers of 1+eps, descending).
std::vector<double> profit_guesses(double max_profit, double sum_profit, double eps) {
  std::vector<double> guesses;
  const double lo = max_profit / (1.0 + eps);
  int j = static_cast<int>(std::ceil(std::log(sum_profit) / std::log1p(eps)));
  for (; std::pow(1.0 + eps, j) >= lo * (1.0 - 1e-12); --j)
    guesses.push_back(std::pow(1.0 + eps, j));
  return guesses;
}

struct ScaledProfits {
  std::vector<std::int64_t> units;
  std::vector<std::uint8_t> selectable;  // 0 when discarded (profit > g)
  std::int64_t band_lo = 0;
  std::int64_t band_hi = 0;
};

ScaledProfits scale_profits(const std::vector<double>& profits, double g, double eps) {
  const int n = static_cast<int>(profits.size());
  ScaledProfits s;
  s.units.assign(static_cast<std::size_t>(n), 0);
  s.selectable.assign(static_cast<std::size_t>(n), 1);
  const double unit = eps * g / (static_cast<double>(n) * n);
  for (int i = 0; i < n; ++i) {
    const double v = profits[static_cast<std::size_t>(i)];
    if (v > g * (1.0 + 1e-12)) {
      s.selectable[static_cast<std::size_t>(i)] = 0;
    } else if (v >= eps * g / n) {
      s.units[static_cast<std::size_t>(i)] = floor_units(v / unit);
    }
  }
  s.band_lo = static_cast<std::int64_t>(std::ceil((1.0 - 2.0 * eps) * g / unit - 1e-9));
  s.band_hi = floor_units((1.0 + 2.0 * eps) * g / unit);
  return s;
}

}  // namespace

MultiKnapsackResult multi_knapsack_solve(const MultiKnapsackInstance& instance,
                                         const KnapsackKnobs& knobs) {
  const int n = static_cast<int>(instance.items.size());
  if (n == 0) throw InvalidInput("multiple knapsack needs items");
  const double eps = instance.eps;
  if (!(eps > 0.0 && eps < 0.5)) throw InvalidInput("eps must lie in (0, 0.5)");
  for (const auto g : instance.gammas)
    if (!(g > 0.0 && g <= 1.0)) throw InvalidInput("gamma must lie in (0, 1]");

  double max_profit = 0.0, sum_profit = 0.0;
  std::vector<double> profits;
  for (const auto& item : instance.items) {
    if (!(item.profit > 0.0)) throw InvalidInput("profits must be positive");
    profits.push_back(item.profit);
    max_profit = std::max(max_profit, item.profit);
    sum_profit += item.profit;
  }

  std::optional<ExponentialSum> local;
  if (!knobs.shared_ramp_expsum) local = knapsack_ramp_expsum(eps, knobs);
  const ExponentialSum& expsum = local ? *local : *knobs.shared_ramp_expsum;
  if (std::abs(expsum.t_eps - (1.0 + eps)) > 1e-9)
    throw InvalidInput("ramp decomposition does not match this instance's eps");

  // Both knapsacks share the size utility, so one moment table serves both.
  MomentTable table(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e)
    for (const auto& term : expsum.terms)
      table[static_cast<std::size_t>(e)].push_back(
          moment_from_exponent(instance.items[static_cast<std::size_t>(e)].size, term.exponent())
              .value);

  MultiUtilityOptions mu_opts;
  mu_opts.eps = eps;
  mu_opts.rounding_eps = eps * knobs.rounding_share;
  mu_opts.rounding_scale = knobs.rounding_scale;
  mu_opts.state_budget = knobs.state_budget;

  const MultiAccept qualify = [&](const std::array<Cplx, 2>& exact,
                                  const std::array<Cplx, 2>&) {
    for (int u = 0; u < 2; ++u)
      if (std::abs(exact[static_cast<std::size_t>(u)]) - expsum.certified_error <
          (1.0 - eps) * instance.gammas[static_cast<std::size_t>(u)])
        return false;
    return true;
  };

  for (const double g : profit_guesses(max_profit, sum_profit, eps)) {
    const ScaledProfits scaled = scale_profits(profits, g, eps);
    if (scaled.band_lo > scaled.band_hi) continue;
    PairAssignInstance structure;
    structure.num_items = n;
    structure.paired = false;
    structure.units = scaled.units;
    structure.allowed.assign(static_cast<std::size_t>(n), 3);
    for (int i = 0; i < n; ++i)
      if (!scaled.selectable[static_cast<std::size_t>(i)])
        structure.allowed[static_cast<std::size_t>(i)] = 0;
    structure.band_lo = scaled.band_lo;
    structure.band_hi = scaled.band_hi;

    const auto found =
        multi_utility_solve(structure, {&expsum, &expsum}, {table, table},
                            {(1.0 - eps) * instance.gammas[0], (1.0 - eps) * instance.gammas[1]},
                            mu_opts, qualify);
    if (!found) continue;

    MultiKnapsackResult result;
    result.sets = found->sets;
    for (int u = 0; u < 2; ++u) {
      for (const std::int32_t i : found->sets[static_cast<std::size_t>(u)])
        result.profit += instance.items[static_cast<std::size_t>(i)].profit;
      result.prob_estimates[static_cast<std::size_t>(u)] =
          std::abs(found->exact_values[static_cast<std::size_t>(u)]);
      result.prob_certified[static_cast<std::size_t>(u)] =
          result.prob_estimates[static_cast<std::size_t>(u)] - expsum.certified_error;
    }
    result.guess = g;
    result.certified_error = expsum.certified_error;
    return result;
  }
  throw Infeasible("no profit guess yields a qualifying assignment");
}

MultidimKnapsackResult multidim_knapsack_solve(const MultidimKnapsackInstance& instance,
                                               MultidimMode mode, const KnapsackKnobs& knobs) {
  const int n = static_cast<int>(instance.items.size());
  if (n == 0) throw InvalidInput("multidimensional knapsack needs items");
  const double eps = instance.eps;
  if (!(eps > 0.0 && eps < 0.5)) throw InvalidInput("eps must lie in (0, 0.5)");
  if (!(instance.gamma > 0.0 && instance.gamma <= 1.0))
    throw InvalidInput("gamma must lie in (0, 1]");

  double max_profit = 0.0, sum_profit = 0.0;
  std::vector<double> profits;
  for (const auto& item : instance.items) {
    if (!(item.profit > 0.0)) throw InvalidInput("profits must be positive");
    profits.push_back(item.profit);
    max_profit = std::max(max_profit, item.profit);
    sum_profit += item.profit;
  }

  if (mode == MultidimMode::independent) {
    for (const auto& item : instance.items)
      if (!item.w1 || !item.w2)
        throw InvalidInput("independent mode needs per-coordinate distributions");

    std::optional<ExponentialSum> local;
    if (!knobs.shared_ramp_expsum) local = knapsack_ramp_expsum(eps, knobs);
    const ExponentialSum& expsum = local ? *local : *knobs.shared_ramp_expsum;
    if (std::abs(expsum.t_eps - (1.0 + eps)) > 1e-9)
      throw InvalidInput("ramp decomposition does not match this instance's eps");
    std::array<MomentTable, 2> tables;
    for (int u = 0; u < 2; ++u) tables[static_cast<std::size_t>(u)].resize(static_cast<std::size_t>(n));
    for (int e = 0; e < n; ++e) {
      for (const auto& term : expsum.terms) {
        tables[0][static_cast<std::size_t>(e)].push_back(
            moment_from_exponent(*instance.items[static_cast<std::size_t>(e)].w1, term.exponent())
                .value);
        tables[1][static_cast<std::size_t>(e)].push_back(
            moment_from_exponent(*instance.items[static_cast<std::size_t>(e)].w2, term.exponent())
                .value);
      }
    }

    // Per-axis targets on a (1-eps)-power grid; the grid is widened by
    // (1-eps)^2 so the rounded-down pair of any qualifying subset is covered.
    std::vector<double> grid;
    const double floor_gamma = (1.0 - eps) * (1.0 - eps) * instance.gamma;
    for (double v = 1.0; v >= floor_gamma * (1.0 - 1e-12); v *= 1.0 - eps) grid.push_back(v);
    std::vector<std::array<double, 2>> pairs;
    for (const double g1 : grid)
      for (const double g2 : grid)
        if (g1 * g2 >= floor_gamma * (1.0 - 1e-12)) pairs.push_back({g1, g2});

    MultiUtilityOptions mu_opts;
    mu_opts.eps = eps;
    mu_opts.rounding_eps = eps * knobs.rounding_share;
    mu_opts.rounding_scale = knobs.rounding_scale;
    mu_opts.state_budget = knobs.state_budget;

    for (const double g : profit_guesses(max_profit, sum_profit, eps)) {
      const ScaledProfits scaled = scale_profits(profits, g, eps);
      if (scaled.band_lo > scaled.band_hi) continue;
      PairAssignInstance structure;
      structure.num_items = n;
      structure.paired = true;
      structure.units = scaled.units;
      structure.allowed.assign(static_cast<std::size_t>(n), 1);
      for (int i = 0; i < n; ++i)
        if (!scaled.selectable[static_cast<std::size_t>(i)])
          structure.allowed[static_cast<std::size_t>(i)] = 0;
      structure.band_lo = scaled.band_lo;
      structure.band_hi = scaled.band_hi;

      for (const auto& pr : pairs) {
        const MultiAccept qualify = [&](const std::array<Cplx, 2>& exact,
                                        const std::array<Cplx, 2>&) {
          for (int u = 0; u < 2; ++u)
            if (std::abs(exact[static_cast<std::size_t>(u)]) - expsum.certified_error <
                (1.0 - eps) * pr[static_cast<std::size_t>(u)])
              return false;
          return true;
        };
        const auto found = multi_utility_solve(structure, {&expsum, &expsum}, tables,
                                               {(1.0 - eps) * pr[0], (1.0 - eps) * pr[1]},
                                               mu_opts, qualify);
        if (!found) continue;

        MultidimKnapsackResult result;
        result.items = found->sets[0];
        for (const std::int32_t i : result.items)
          result.profit += instance.items[static_cast<std::size_t>(i)].profit;
        result.prob_estimate = std::abs(found->exact_values[0]) * std::abs(found->exact_values[1]);
        result.prob_certified = (1.0 - eps) * (1.0 - eps) * pr[0] * pr[1];
        result.guess = g;
        result.pair = pr;
        result.expsum_terms = expsum.size();
        return result;
      }
    }
    throw Infeasible("no (gamma_1, gamma_2) pair and guess qualify");
  }

  // Correlated mode: 2-D exponential sum over joint discrete supports.
  for (const auto& item : instance.items) {
    if (item.joint.empty()) throw InvalidInput("correlated mode needs joint supports");
    double mass = 0.0;
    for (const auto& row : item.joint) {
      if (row[0] < 0.0 || row[1] < 0.0 || !(row[2] > 0.0))
        throw InvalidInput("joint support rows need nonnegative values and positive mass");
      mass += row[2];
    }
    if (std::abs(mass - 1.0) > 1e-9) throw InvalidInput("joint support mass must sum to 1");
  }

  std::optional<ExponentialSum2D> local2;
  if (!knobs.shared_plateau_expsum) local2 = knapsack_plateau_expsum(eps, knobs);
  const ExponentialSum2D& expsum2 = local2 ? *local2 : *knobs.shared_plateau_expsum;
  if (std::abs(expsum2.t_eps - (1.0 + eps)) > 1e-9)
    throw InvalidInput("plateau decomposition does not match this instance's eps");
  std::vector<Cplx> coeffs;
  coeffs.reserve(expsum2.terms.size());
  for (const auto& t : expsum2.terms) coeffs.push_back(t.coeff);

  MomentTable table(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) {
    auto& row = table[static_cast<std::size_t>(e)];
    row.reserve(expsum2.terms.size());
    for (const auto& term : expsum2.terms) {
      Cplx acc = 0.0;
      for (const auto& r : instance.items[static_cast<std::size_t>(e)].joint)
        acc += r[2] * std::exp(r[0] * term.exponent1() + r[1] * term.exponent2());
      row.push_back(acc);
    }
  }

  for (const double g : profit_guesses(max_profit, sum_profit, eps)) {
    const ScaledProfits scaled = scale_profits(profits, g, eps);
    if (scaled.band_lo > scaled.band_hi) continue;
    ProfitBandInstance band;
    band.units = scaled.units;
    band.band_lo = scaled.band_lo;
    band.band_hi = scaled.band_hi;
    band.excluded.assign(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i)
      if (!scaled.selectable[static_cast<std::size_t>(i)])
        band.excluded[static_cast<std::size_t>(i)] = true;
    // Weights are unused on this path (moments come from the joint supports).
    band.weights.assign(static_cast<std::size_t>(n), Distribution::point_mass(0.0));
    const auto adapter = profit_band_adapter(band);

    SolveOptions opts;
    opts.eps = eps * knobs.rounding_share;
    opts.rounding_scale = knobs.rounding_scale;
    opts.state_budget = knobs.state_budget;
    opts.mode = Mode::maximize;
    opts.full_gap_scan = false;

    SolveResult inner;
    try {
      inner = solve_with_moments(*adapter, coeffs, table, opts);
    } catch (const Infeasible&) {
      continue;
    }
    const double estimate = std::abs(inner.exact_value);
    if (estimate - expsum2.certified_error < (1.0 - eps) * instance.gamma) continue;

    MultidimKnapsackResult result;
    result.items = inner.solution;
    for (const std::int32_t i : result.items)
      result.profit += instance.items[static_cast<std::size_t>(i)].profit;
    result.prob_estimate = estimate;
    result.prob_certified = estimate - expsum2.certified_error;
    result.guess = g;
    result.expsum_terms = expsum2.size();
    return result;
  }
  throw Infeasible("no profit guess yields a qualifying set");
}

}  // namespace eumax
