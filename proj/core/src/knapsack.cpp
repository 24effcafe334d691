// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#include "eumax/problems/knapsack.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "eumax/errors.hpp"
#include "eumax/esum.hpp"

namespace eumax {

namespace {

class ProfitBandAdapter final : public ProblemAdapter {
 public:
  explicit ProfitBandAdapter(ProfitBandInstance inst) : inst_(std::move(inst)) {
    if (inst_.weights.empty()) throw InvalidInput("band knapsack needs items");
    if (inst_.weights.size() != inst_.units.size())
      throw InvalidInput("band knapsack needs one unit value per item");
    for (const auto u : inst_.units)
      if (u < 0) throw InvalidInput("band knapsack units must be >= 0");
    if (inst_.band_lo > inst_.band_hi) throw InvalidInput("band is empty");
    if (inst_.excluded.empty()) inst_.excluded.assign(inst_.weights.size(), false);
  }

  std::string name() const override { return "knapsack_band"; }
  int num_stages() const override { return static_cast<int>(inst_.weights.size()); }
  std::vector<std::int64_t> initial_states() const override { return {0}; }

  void transitions(int stage, std::int64_t state, std::vector<Transition>& out) const override {
    out.push_back(Transition{state, -1, -1});  // skip
    if (inst_.excluded[static_cast<std::size_t>(stage)]) return;
    const std::int64_t next = state + inst_.units[static_cast<std::size_t>(stage)];
    if (next <= inst_.band_hi) out.push_back(Transition{next, stage, stage});
  }

  bool accepting(std::int64_t state) const override {
    return state >= inst_.band_lo && state <= inst_.band_hi;
  }

  bool check_solution(std::span<const std::int32_t> tags) const override {
    std::int64_t total = 0;
    std::int32_t prev = -1;
    for (const std::int32_t i : tags) {
      if (i < 0 || i >= static_cast<std::int32_t>(inst_.weights.size())) return false;
      if (i <= prev) return false;  // subsets arrive in stage order
      if (inst_.excluded[static_cast<std::size_t>(i)]) return false;
      total += inst_.units[static_cast<std::size_t>(i)];
      prev = i;
    }
    return total >= inst_.band_lo && total <= inst_.band_hi;
  }

  int num_elements() const override { return static_cast<int>(inst_.weights.size()); }
  const Distribution& element_weight(int element) const override {
    return inst_.weights[static_cast<std::size_t>(element)];
  }
  std::string element_label(int element) const override {
    if (static_cast<std::size_t>(element) < inst_.labels.size() &&
        !inst_.labels[static_cast<std::size_t>(element)].empty())
      return inst_.labels[static_cast<std::size_t>(element)];
    return std::to_string(element);
  }

 private:
  ProfitBandInstance inst_;
};

std::int64_t floor_units(double x) { return static_cast<std::int64_t>(std::floor(x + 1e-9)); }

}  // namespace

std::unique_ptr<ProblemAdapter> profit_band_adapter(const ProfitBandInstance& instance) {
  return std::make_unique<ProfitBandAdapter>(instance);
}

ExponentialSum knapsack_ramp_expsum(double eps, const KnapsackKnobs& knobs) {
  DecomposeOptions dec;
  dec.max_terms = knobs.max_terms;
  return esum_decompose(UtilitySpec::threshold_ramp(eps, 1.0), eps * knobs.decompose_share, dec);
}

ExponentialSum2D knapsack_plateau_expsum(double eps, const KnapsackKnobs& knobs) {
  DecomposeOptions dec;
  dec.max_terms = knobs.max_terms_2d;
  return esum_decompose_2d(Utility2D::plateau(eps, 1.0, 1.0), eps * knobs.decompose_share_2d,
                           dec);
}

namespace {

// Reuse a caller-provided decomposition when its tail point matches the
// utility this scheme would have built; otherwise decompose locally.
const ExponentialSum& ramp_expsum_for(double eps, const KnapsackKnobs& knobs,
                                      std::optional<ExponentialSum>& local) {
  if (knobs.shared_ramp_expsum) {
    if (std::abs(knobs.shared_ramp_expsum->t_eps - (1.0 + eps)) > 1e-9)
      throw InvalidInput("shared ramp decomposition does not match this instance's eps");
    return *knobs.shared_ramp_expsum;
  }
  local = knapsack_ramp_expsum(eps, knobs);
  return *local;
}

}  // namespace

KnapsackSizeResult knapsack_size_solve(const KnapsackSizeInstance& instance,
                                       const KnapsackKnobs& knobs) {
  const int n = static_cast<int>(instance.items.size());
  if (n == 0) throw InvalidInput("knapsack needs items");
  if (!(instance.gamma_target > 0.0 && instance.gamma_target <= 1.0))
    throw InvalidInput("gamma must lie in (0, 1]");
  if (!(instance.eps > 0.0 && instance.eps < 0.5)) throw InvalidInput("eps must lie in (0, 0.5)");
  double max_profit = 0.0, sum_profit = 0.0;
  for (const auto& item : instance.items) {
    if (!(item.profit > 0.0)) throw InvalidInput("profits must be positive");
    max_profit = std::max(max_profit, item.profit);
    sum_profit += item.profit;
  }

  const double eps = instance.eps;
  std::optional<ExponentialSum> local;
  const ExponentialSum& expsum = ramp_expsum_for(eps, knobs, local);

  std::vector<Distribution> weights;
  weights.reserve(static_cast<std::size_t>(n));
  std::vector<std::string> labels;
  for (const auto& item : instance.items) {
    weights.push_back(item.size);
    labels.push_back(item.label);
  }

  // Profit guesses: powers of (1+eps) bracketing [max_i v_i, sum_i v_i],
  // descending so the first qualifying guess carries the best profit.
  std::vector<double> guesses;
  {
    const double lo = max_profit / (1.0 + eps);
    int j = static_cast<int>(std::ceil(std::log(sum_profit) / std::log1p(eps)));
    for (; std::pow(1.0 + eps, j) >= lo * (1.0 - 1e-12); --j)
      guesses.push_back(std::pow(1.0 + eps, j));
  }

  KnapsackSizeResult best;
  bool found = false;
  for (const double g : guesses) {
    ProfitBandInstance band;
    band.weights = weights;
    band.labels = labels;
    band.units.resize(static_cast<std::size_t>(n), 0);
    band.excluded.assign(static_cast<std::size_t>(n), false);
    const double unit = eps * g / (static_cast<double>(n) * n);  // Delta
    for (int i = 0; i < n; ++i) {
      const double v = instance.items[static_cast<std::size_t>(i)].profit;
      if (v > g * (1.0 + 1e-12)) {
        band.excluded[static_cast<std::size_t>(i)] = true;
      } else if (v < eps * g / n) {
        band.units[static_cast<std::size_t>(i)] = 0;  // profit zeroed, still selectable
      } else {
        band.units[static_cast<std::size_t>(i)] = floor_units(v / unit);
      }
    }
    band.band_lo = static_cast<std::int64_t>(std::ceil((1.0 - 2.0 * eps) * g / unit - 1e-9));
    band.band_hi = floor_units((1.0 + 2.0 * eps) * g / unit);
    if (band.band_lo > band.band_hi) continue;

    const auto adapter = profit_band_adapter(band);
    SolveOptions opts;
    opts.eps = eps * knobs.rounding_share;
    opts.rounding_scale = knobs.rounding_scale;
    opts.state_budget = knobs.state_budget;
    opts.mode = Mode::maximize;
    opts.full_gap_scan = false;

    SolveResult inner;
    try {
      inner = solve(*adapter, expsum, opts);
    } catch (const Infeasible&) {
      continue;
    }

    // Qualification: the exact expsum value lower-bounds the true E[mu] by
    // certified_error, and E[mu] <= Pr(w(S) <= 1 + eps) by the ramp sandwich.
    const double estimate = std::abs(inner.exact_value);
    if (estimate - expsum.certified_error < (1.0 - eps) * instance.gamma_target) continue;

    double profit = 0.0;
    for (const std::int32_t i : inner.solution)
      profit += instance.items[static_cast<std::size_t>(i)].profit;

    if (!found || profit > best.profit) {
      found = true;
      best.items = inner.solution;
      best.profit = profit;
      best.prob_estimate = estimate;
      best.prob_certified = estimate - expsum.certified_error;
      best.guess = g;
      best.certified_error = expsum.certified_error;
      best.expsum_terms = expsum.size();
      best.inner = std::move(inner);
    }
  }
  if (!found) throw Infeasible("no profit guess yields a qualifying set");
  return best;
}

namespace {

// Capacity DP over rounded size units; witness tags are item indices.
class SizeCapAdapter final : public StagedProblem {
 public:
  SizeCapAdapter(std::vector<std::int64_t> units, std::int64_t cap)
      : units_(std::move(units)), cap_(cap) {}

  std::string name() const override { return "knapsack_capacity"; }
  int num_stages() const override { return static_cast<int>(units_.size()); }
  std::vector<std::int64_t> initial_states() const override { return {0}; }
  void transitions(int stage, std::int64_t state, std::vector<Transition>& out) const override {
    out.push_back(Transition{state, -1, -1});
    const std::int64_t next = state + units_[static_cast<std::size_t>(stage)];
    if (next <= cap_) out.push_back(Transition{next, stage, stage});
  }
  bool accepting(std::int64_t) const override { return true; }
  bool check_solution(std::span<const std::int32_t> tags) const override {
    std::int64_t total = 0;
    std::int32_t prev = -1;
    for (const std::int32_t i : tags) {
      if (i <= prev || i >= static_cast<std::int32_t>(units_.size())) return false;
      total += units_[static_cast<std::size_t>(i)];
      prev = i;
    }
    return total <= cap_;
  }

 private:
  std::vector<std::int64_t> units_;
  std::int64_t cap_;
};

}  // namespace

KnapsackProfitResult knapsack_profit_solve(const KnapsackProfitInstance& instance,
                                           const KnapsackKnobs& knobs) {
  const int n = static_cast<int>(instance.items.size());
  if (n == 0) throw InvalidInput("knapsack needs items");
  if (!(instance.threshold >= 0.0)) throw InvalidInput("threshold must be >= 0");
  if (!(instance.eps > 0.0 && instance.eps < 0.5)) throw InvalidInput("eps must lie in (0, 0.5)");
  for (const auto& item : instance.items)
    if (!(item.size > 0.0)) throw InvalidInput("sizes must be positive");

  const double eps = instance.eps;

  // Sizes round down to multiples of eps/n; capacity 1 on rounded sizes keeps
  // the true total within 1 + eps.
  const double size_unit = eps / n;
  std::vector<std::int64_t> units;
  units.reserve(static_cast<std::size_t>(n));
  for (const auto& item : instance.items) units.push_back(floor_units(item.size / size_unit));
  const SizeCapAdapter adapter(units, floor_units(1.0 / size_unit));

  KnapsackProfitResult result;

  if (instance.threshold == 0.0) {
    // Any nonempty feasible set with positive profit already attains
    // Pr(v > 0) = 1; pick the smallest fitting item deterministically.
    const std::int64_t cap = floor_units(1.0 / size_unit);
    int pick = -1;
    for (int i = 0; i < n; ++i) {
      if (units[static_cast<std::size_t>(i)] > cap) continue;
      if (pick < 0 || instance.items[static_cast<std::size_t>(i)].size <
                          instance.items[static_cast<std::size_t>(pick)].size)
        pick = i;
    }
    if (pick >= 0) {
      result.items = {pick};
      result.size_total = instance.items[static_cast<std::size_t>(pick)].size;
      double mass_at_zero = 0.0;
      if (const auto* d = instance.items[static_cast<std::size_t>(pick)].profit.as_discrete()) {
        for (std::size_t j = 0; j < d->values.size(); ++j)
          if (d->values[j] == 0.0) mass_at_zero += d->probs[j];
      }
      result.prob_below_estimate = mass_at_zero;
      result.prob_above_certified = 1.0 - mass_at_zero;
    } else {
      result.prob_below_estimate = 1.0;
      result.prob_above_certified = 0.0;
    }
    return result;
  }

  // Minimize E[mu(v(S)/T)] for the ramp that is 1 below 1-eps and 0 above 1:
  // Pr(v <= (1-eps)T) <= E[mu] <= Pr(v <= T).
  const UtilitySpec ramp = UtilitySpec::threshold_ramp(eps, 1.0 - eps);
  DecomposeOptions dec;
  dec.max_terms = knobs.max_terms;
  const ExponentialSum expsum = esum_decompose(ramp, eps * knobs.decompose_share, dec);

  // Normalized profit v/T: scale every term exponent by 1/T.
  MomentTable moments(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) {
    auto& row = moments[static_cast<std::size_t>(e)];
    row.reserve(expsum.terms.size());
    for (const auto& term : expsum.terms)
      row.push_back(moment_from_exponent(instance.items[static_cast<std::size_t>(e)].profit,
                                         term.exponent() / instance.threshold)
                        .value);
  }
  std::vector<std::complex<double>> coeffs;
  coeffs.reserve(expsum.terms.size());
  for (const auto& t : expsum.terms) coeffs.push_back(t.coeff);

  SolveOptions opts;
  opts.eps = eps * knobs.rounding_share;
  opts.rounding_scale = knobs.rounding_scale;
  opts.state_budget = knobs.state_budget;
  opts.mode = Mode::minimize;
  opts.full_gap_scan = false;
  SolveResult inner = solve_with_moments(adapter, coeffs, moments, opts);

  result.items = inner.solution;
  for (const std::int32_t i : inner.solution)
    result.size_total += instance.items[static_cast<std::size_t>(i)].size;
  result.prob_below_estimate = std::abs(inner.exact_value);
  result.certified_error = expsum.certified_error;
  result.prob_above_certified =
      std::max(0.0, 1.0 - result.prob_below_estimate - expsum.certified_error);
  result.expsum_terms = expsum.size();
  result.inner = std::move(inner);
  return result;
}

}  // namespace eumax
