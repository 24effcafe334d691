// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#include "eumax/esum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>

#include "eumax/errors.hpp"

namespace eumax {

namespace {

constexpr double kPi = std::numbers::pi;
using Cplx = std::complex<double>;

// eta = 2 keeps every base at modulus 1/2, but the damped extension
// eta^x * ext(x) then peaks near eta^{2T}; for utilities with a large tail
// point that peak makes an absolute-error Fourier target hopeless. Capping
// eta^T at 2^kKappa keeps the damped function O(1) while the tail argument
// (eta^{-x} decay past h*T) goes through unchanged for any eta > 1.
constexpr double kKappa = 4.0;

double pick_eta(double t_eps) {
  return t_eps <= kKappa ? 2.0 : std::exp2(kKappa / t_eps);
}

// The h loop starts at the smallest window whose tail condition plausibly
// holds, seeded by a cheap low-cutoff estimate of the coefficient mass; the
// real check against the converged coefficients still gates the result and
// raises h when the estimate was short. Guessing from eps alone (ignoring
// the mass) widens the window and inflates the harmonic count for nothing.
int seed_h(double t_eps, double eps, double eta, const RealFn& damped_ext) {
  const double b2 = 2.0 * t_eps;
  const auto scaled = [&](double y) { return damped_ext(y * b2 / kPi); };
  const double mass = fourier_coefficients(scaled, 16).sum_abs_coeffs();
  if (mass * 1.25 <= eps) return 2;
  const double needed = std::log(mass * 1.25 / eps) / (t_eps * std::log(eta));
  return std::max(2, static_cast<int>(std::ceil(needed)));
}

// Cutoff ladder: double while small, then grow by half steps so the final
// cutoff lands near the minimum that meets the target.
int next_cutoff(int n, int cap) {
  const int next = n < 64 ? 2 * n : n + (n + 1) / 2;
  return (n < cap && next > cap) ? cap : next;
}

}  // namespace

Cplx ExponentialSum::evaluate(double x) const {
  Cplx acc = 0.0;
  for (const auto& t : terms) acc += t.coeff * std::exp(x * t.exponent());
  return acc;
}

double ExponentialSum::sum_abs_coeffs() const {
  double s = 0.0;
  for (const auto& t : terms) s += std::abs(t.coeff);
  return s;
}

Cplx ExponentialSum2D::evaluate(double x, double y) const {
  Cplx acc = 0.0;
  for (const auto& t : terms) acc += t.coeff * std::exp(x * t.exponent1() + y * t.exponent2());
  return acc;
}

double ExponentialSum2D::sum_abs_coeffs() const {
  double s = 0.0;
  for (const auto& t : terms) s += std::abs(t.coeff);
  return s;
}

ExtendedUtility::ExtendedUtility(const UtilitySpec& mu, double eps, TailShape tail)
    : mu_(mu), t_eps_(mu.tail_point(eps)), value_at_t_(mu(mu.tail_point(eps))), tail_(tail) {
  if (!(eps > 0.0 && eps < 0.5)) throw InvalidInput("extension needs eps in (0, 0.5)");
  if (!(t_eps_ > 0.0)) throw InvalidInput("extension needs a positive tail point");
}

double ExtendedUtility::operator()(double x) const {
  const double a = std::abs(x);  // even reflection
  if (a <= t_eps_) return mu_(a);
  if (a >= 2.0 * t_eps_) return 0.0;
  const double t = (a - t_eps_) / t_eps_;
  const double down =
      tail_ == TailShape::smoothstep ? 1.0 - (3.0 * t * t - 2.0 * t * t * t) : 1.0 - t;
  return value_at_t_ * down;
}

ExtendedUtility extend_utility(const UtilitySpec& mu, double eps, TailShape tail) {
  return ExtendedUtility(mu, eps, tail);
}

namespace {

// Measured sup of |mu(x) - sum(x)| on [0, grid_max] plus the tail probe of
// |sum| on [grid_max, 2*grid_max]; fills certified_error/tail_error. The
// uniform grid scales with the term count so the error oscillation is
// resolved, and the utility's kinks are sampled exactly since the sup
// concentrates there.
void certify_1d(ExponentialSum& sum, const UtilitySpec& mu, int cert_grid) {
  const int l = sum.size();
  const int grid = std::max(cert_grid, 4 * l);
  std::vector<Cplx> phase(static_cast<std::size_t>(l), Cplx(1.0, 0.0));
  std::vector<Cplx> step(static_cast<std::size_t>(l));
  const double dx = sum.grid_max / grid;
  for (int k = 0; k < l; ++k)
    step[static_cast<std::size_t>(k)] =
        std::polar(1.0, sum.terms[static_cast<std::size_t>(k)].base_angle * dx);

  const double log_eta = std::log(sum.eta);
  double worst = 0.0;
  for (int j = 0; j <= grid; ++j) {
    const double x = j * dx;
    Cplx acc = 0.0;
    for (int k = 0; k < l; ++k)
      acc += sum.terms[static_cast<std::size_t>(k)].coeff * phase[static_cast<std::size_t>(k)];
    const Cplx value = acc * std::exp(-x * log_eta);
    worst = std::max(worst, std::abs(value - mu(x)));
    for (int k = 0; k < l; ++k) phase[static_cast<std::size_t>(k)] *= step[static_cast<std::size_t>(k)];
  }

  std::vector<double> corners = mu.breakpoints();
  corners.push_back(sum.t_eps);
  corners.push_back(2.0 * sum.t_eps);
  for (const double c : corners) {
    for (int off = -2; off <= 2; ++off) {
      const double x = c + off * 0.25 * dx;
      if (x < 0.0 || x > sum.grid_max) continue;
      worst = std::max(worst, std::abs(sum.evaluate(x) - mu(x)));
    }
  }

  double tail_worst = 0.0;
  const int probe = 512;
  for (int j = 0; j <= probe; ++j) {
    const double x = sum.grid_max + sum.grid_max * j / probe;
    tail_worst = std::max(tail_worst, std::abs(sum.evaluate(x)));
  }
  sum.tail_error = tail_worst;
  sum.certified_error = std::max(worst, tail_worst);
}

}  // namespace

ExponentialSum esum_decompose(const UtilitySpec& mu, double eps, const DecomposeOptions& options) {
  if (!(eps > 0.0 && eps < 0.5)) throw InvalidInput("decomposition needs eps in (0, 0.5)");
  if (options.max_terms < 3) throw InvalidInput("decomposition needs max_terms >= 3");

  if (mu.below_everywhere(eps)) {
    // The zero sum is already an eps-approximation.
    ExponentialSum sum;
    sum.t_eps = 1.0;
    sum.h = 2.0;
    sum.grid_max = 4.0;
    certify_1d(sum, mu, options.cert_grid);
    return sum;
  }

  const double t_eps = mu.tail_point(eps);
  const double eta = pick_eta(t_eps);
  const double log_eta = std::log(eta);
  const ExtendedUtility ext = extend_utility(mu, eps, options.tail);

  const int n_cap = (options.max_terms - 1) / 2;
  const auto damped_ext = [&](double x) { return std::exp(x * log_eta) * ext(x); };
  int h = seed_h(t_eps, eps, eta, damped_ext);

  for (int iter = 0; iter < options.max_h_iters; ++iter, ++h) {
    const double b = h * t_eps;
    const auto scaled = [&](double y) { return damped_ext(y * b / kPi); };

    FourierPartialSum ps;
    bool reached = false;
    for (int n = std::min(8, n_cap); n <= n_cap; n = next_cutoff(n, n_cap)) {
      ps = fourier_coefficients(scaled, n);
      if (sup_error(ps, scaled, std::max(options.fourier_grid, 4 * n)) <= 0.98 * eps) {
        reached = true;
        break;
      }
      if (n == n_cap) break;
    }
    if (!reached)
      throw TermBudgetExceeded("decomposition cannot reach eps within the term budget");

    // Tail feasibility: eta^{h T} must dominate sum|c_k|/eps.
    const double sum_abs = ps.sum_abs_coeffs();
    if (sum_abs > eps && b * log_eta < std::log(sum_abs / eps)) continue;

    ExponentialSum sum;
    sum.eta = eta;
    sum.h = h;
    sum.t_eps = t_eps;
    sum.grid_max = 2.0 * b;
    const int n = ps.harmonics();
    sum.terms.reserve(static_cast<std::size_t>(2 * n + 1));
    for (int k = -n; k <= n; ++k)
      sum.terms.push_back(ExpTerm{ps.coeff(k), -log_eta, k * kPi / b});
    certify_1d(sum, mu, options.cert_grid);
    return sum;
  }
  throw ConvergenceFailure("h loop did not settle; tail point may be mis-specified");
}

ExponentialSum esum_decompose(const UtilitySpec& mu, double eps, int max_terms) {
  DecomposeOptions options;
  options.max_terms = max_terms;
  return esum_decompose(mu, eps, options);
}

namespace {

// The terms sit on a (2N+1)^2 frequency grid, so the worst value over a set
// of sample coordinates factors into two matrix products per row: contract
// the k1 axis against x, then dot against the k2 phases per y.
double grid_worst_2d(const FourierPartialSum2D& ps, double angle_scale, double damp,
                     std::span<const double> samples, const RealFn2& reference) {
  const int w = 2 * ps.harmonics() + 1;
  const std::size_t g = samples.size();

  std::vector<Cplx> axis(g * static_cast<std::size_t>(w));
  for (std::size_t j = 0; j < g; ++j)
    for (int k = -ps.harmonics(); k <= ps.harmonics(); ++k)
      axis[j * w + static_cast<std::size_t>(k + ps.harmonics())] =
          std::polar(1.0, k * angle_scale * samples[j]);

  std::vector<Cplx> contracted(g * static_cast<std::size_t>(w), Cplx(0.0));
  for (std::size_t j = 0; j < g; ++j)
    for (int k1 = 0; k1 < w; ++k1) {
      const Cplx phase = axis[j * w + static_cast<std::size_t>(k1)];
      const Cplx* row = ps.coeffs().data() + static_cast<std::size_t>(k1) * w;
      Cplx* out = contracted.data() + j * w;
      for (int k2 = 0; k2 < w; ++k2) out[static_cast<std::size_t>(k2)] += phase * row[k2];
    }

  double worst = 0.0;
  for (std::size_t jx = 0; jx < g; ++jx) {
    for (std::size_t jy = 0; jy < g; ++jy) {
      Cplx acc = 0.0;
      const Cplx* crow = contracted.data() + jx * w;
      const Cplx* yrow = axis.data() + jy * w;
      for (int k2 = 0; k2 < w; ++k2) acc += crow[static_cast<std::size_t>(k2)] * yrow[k2];
      const Cplx value = acc * std::exp(damp * (samples[jx] + samples[jy]));
      worst = std::max(worst, std::abs(value - reference(samples[jx], samples[jy])));
    }
  }
  return worst;
}

std::vector<double> uniform_samples(double lo, double hi, int grid) {
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(grid) + 1);
  for (int j = 0; j <= grid; ++j) xs.push_back(lo + (hi - lo) * j / grid);
  return xs;
}

// Max |damped partial sum| over the cross product xs x ys, factored the same
// way as grid_worst_2d.
double rect_worst_2d(const FourierPartialSum2D& ps, double angle_scale, double damp,
                     std::span<const double> xs, std::span<const double> ys) {
  const int w = 2 * ps.harmonics() + 1;
  const auto phases = [&](std::span<const double> ss) {
    std::vector<Cplx> out(ss.size() * static_cast<std::size_t>(w));
    for (std::size_t j = 0; j < ss.size(); ++j)
      for (int k = -ps.harmonics(); k <= ps.harmonics(); ++k)
        out[j * w + static_cast<std::size_t>(k + ps.harmonics())] =
            std::polar(1.0, k * angle_scale * ss[j]);
    return out;
  };
  const std::vector<Cplx> xphase = phases(xs);
  const std::vector<Cplx> yphase = phases(ys);

  std::vector<Cplx> contracted(xs.size() * static_cast<std::size_t>(w), Cplx(0.0));
  for (std::size_t j = 0; j < xs.size(); ++j)
    for (int k1 = 0; k1 < w; ++k1) {
      const Cplx phase = xphase[j * w + static_cast<std::size_t>(k1)];
      const Cplx* row = ps.coeffs().data() + static_cast<std::size_t>(k1) * w;
      Cplx* out = contracted.data() + j * w;
      for (int k2 = 0; k2 < w; ++k2) out[static_cast<std::size_t>(k2)] += phase * row[k2];
    }
  double worst = 0.0;
  for (std::size_t jx = 0; jx < xs.size(); ++jx)
    for (std::size_t jy = 0; jy < ys.size(); ++jy) {
      Cplx acc = 0.0;
      const Cplx* crow = contracted.data() + jx * w;
      const Cplx* yrow = yphase.data() + jy * w;
      for (int k2 = 0; k2 < w; ++k2) acc += crow[static_cast<std::size_t>(k2)] * yrow[k2];
      worst = std::max(worst, std::abs(acc) * std::exp(damp * (xs[jx] + ys[jy])));
    }
  return worst;
}

void certify_2d(ExponentialSum2D& sum, const FourierPartialSum2D& ps, double b,
                const Utility2D& mu2, int grid) {
  const int w = 2 * ps.harmonics() + 1;
  std::vector<double> samples = uniform_samples(0.0, sum.grid_max, std::max(grid, 2 * w));
  for (const UtilitySpec* axis_mu : {&mu2.fx, &mu2.fy}) {
    for (const double c : axis_mu->breakpoints())
      if (c >= 0.0 && c <= sum.grid_max) samples.push_back(c);
  }
  samples.push_back(std::min(sum.t_eps, sum.grid_max));
  samples.push_back(std::min(2.0 * sum.t_eps, sum.grid_max));

  const double worst =
      grid_worst_2d(ps, kPi / b, -std::log(sum.eta), samples,
                    [&](double x, double y) { return mu2(x, y); });

  // Tail probe on the band max(x, y) in [grid_max, 2 grid_max]; mu2 vanishes
  // there so the probe measures the bare sum.
  const auto beyond = uniform_samples(sum.grid_max, 2.0 * sum.grid_max, 32);
  const auto inside = uniform_samples(0.0, 2.0 * sum.grid_max, 48);
  const double damp = -std::log(sum.eta);
  const double tail_worst = std::max(rect_worst_2d(ps, kPi / b, damp, beyond, inside),
                                     rect_worst_2d(ps, kPi / b, damp, inside, beyond));
  sum.tail_error = tail_worst;
  sum.certified_error = std::max(worst, tail_worst);
}

void certify_2d_empty(ExponentialSum2D& sum, const Utility2D& mu2, int grid) {
  double worst = 0.0;
  for (int i = 0; i <= grid; ++i)
    for (int j = 0; j <= grid; ++j)
      worst = std::max(worst, std::abs(mu2(sum.grid_max * i / grid, sum.grid_max * j / grid)));
  sum.certified_error = worst;
}

}  // namespace

ExponentialSum2D esum_decompose_2d(const Utility2D& mu2, double eps, int max_terms) {
  DecomposeOptions options;
  options.max_terms = max_terms;
  return esum_decompose_2d(mu2, eps, options);
}

ExponentialSum2D esum_decompose_2d(const Utility2D& mu2, double eps,
                                   const DecomposeOptions& options) {
  if (!(eps > 0.0 && eps < 0.5)) throw InvalidInput("decomposition needs eps in (0, 0.5)");
  if (options.max_terms < 3) throw InvalidInput("decomposition needs max_terms >= 3");

  if (mu2.fx.below_everywhere(eps) || mu2.fy.below_everywhere(eps)) {
    ExponentialSum2D sum;
    sum.t_eps = 1.0;
    sum.h = 2.0;
    sum.grid_max = 4.0;
    certify_2d_empty(sum, mu2, options.cert_grid_2d);
    return sum;
  }

  // Each axis extension carries eps/2 so the product extension stays within
  // eps of mu2 on the nonnegative quadrant.
  const double tx = mu2.fx.tail_point(eps / 2.0);
  const double ty = mu2.fy.tail_point(eps / 2.0);
  const double t_eps = std::max(tx, ty);
  const double eta = pick_eta(t_eps);
  const double log_eta = std::log(eta);
  const ExtendedUtility ext_x = extend_utility(mu2.fx, eps / 2.0, options.tail);
  const ExtendedUtility ext_y = extend_utility(mu2.fy, eps / 2.0, options.tail);

  int n_cap = 1;
  while ((2 * (n_cap + 1) + 1) * (2 * (n_cap + 1) + 1) <= options.max_terms) ++n_cap;

  // Seed h from the product of the per-axis coefficient masses.
  const double mass_x = fourier_coefficients(
      [&](double y) {
        const double x = y * 2.0 * t_eps / kPi;
        return std::exp(x * log_eta) * ext_x(x);
      }, 16).sum_abs_coeffs();
  const double mass_y = fourier_coefficients(
      [&](double y) {
        const double x = y * 2.0 * t_eps / kPi;
        return std::exp(x * log_eta) * ext_y(x);
      }, 16).sum_abs_coeffs();
  int h = 2;
  if (mass_x * mass_y * 1.25 > eps)
    h = std::max(2, static_cast<int>(std::ceil(std::log(mass_x * mass_y * 1.25 / eps) /
                                               (t_eps * log_eta))));

  for (int iter = 0; iter < options.max_h_iters; ++iter, ++h) {
    const double b = h * t_eps;
    const auto scaled_x = [&](double u) {
      const double x = u * b / kPi;
      return std::exp(x * log_eta) * ext_x(x);
    };
    const auto scaled_y = [&](double u) {
      const double x = u * b / kPi;
      return std::exp(x * log_eta) * ext_y(x);
    };
    const auto scaled = [&](double u, double v) { return scaled_x(u) * scaled_y(v); };

    FourierPartialSum2D ps;
    bool reached = false;
    // The integrand is a product, so the tensor-trapezoid coefficients are
    // exactly the outer product of the per-axis coefficient vectors. The 2-D
    // budget leaves room for coefficient pruning: extension eps + 0.9 eps
    // 0.9 eps Fourier + pruned mass inside the remaining slack.
    for (int n = std::min(4, n_cap); n <= n_cap; n = next_cutoff(n, n_cap)) {
      const FourierPartialSum axis_x = fourier_coefficients(scaled_x, n);
      const FourierPartialSum axis_y = fourier_coefficients(scaled_y, n);
      const int w = 2 * n + 1;
      std::vector<Cplx> grid(static_cast<std::size_t>(w) * w);
      for (int k1 = 0; k1 < w; ++k1)
        for (int k2 = 0; k2 < w; ++k2)
          grid[static_cast<std::size_t>(k1) * w + k2] =
              axis_x.coeffs()[static_cast<std::size_t>(k1)] *
              axis_y.coeffs()[static_cast<std::size_t>(k2)];
      ps = FourierPartialSum2D(n, std::move(grid));
      const auto samples = uniform_samples(-kPi, kPi, std::max(96, 4 * n));
      const double err = grid_worst_2d(ps, 1.0, 0.0, samples, scaled);
      if (err <= 0.9 * eps) {
        reached = true;
        break;
      }
      if (n == n_cap) break;
    }
    if (!reached)
      throw TermBudgetExceeded("2-D decomposition cannot reach eps within the term budget");

    double sum_abs = 0.0;
    for (const auto& c : ps.coeffs()) sum_abs += std::abs(c);
    if (sum_abs > eps && b * log_eta < std::log(sum_abs / eps)) continue;

    ExponentialSum2D sum;
    sum.eta = eta;
    sum.h = h;
    sum.t_eps = t_eps;
    sum.grid_max = 2.0 * b;
    const int n = ps.harmonics();
    sum.terms.reserve(static_cast<std::size_t>(2 * n + 1) * (2 * n + 1));
    for (int k1 = -n; k1 <= n; ++k1)
      for (int k2 = -n; k2 <= n; ++k2)
        sum.terms.push_back(
            ExpTerm2D{ps.coeff(k1, k2), -log_eta, k1 * kPi / b, -log_eta, k2 * kPi / b});
    certify_2d(sum, ps, b, mu2, options.cert_grid_2d);

    // Rectangular sums carry thousands of negligible coefficients; dropping
    // coefficient mass m changes the sum by at most m anywhere on the
    // nonnegative quadrant (every base has modulus <= 1), so the certificate
    // adjusts additively. Spend the slack left under the 2 eps budget, keeping
    // a quarter of it in reserve.
    std::sort(sum.terms.begin(), sum.terms.end(),
              [](const ExpTerm2D& a, const ExpTerm2D& c) {
                return std::abs(a.coeff) < std::abs(c.coeff);
              });
    const double budget =
        std::min(std::max(0.0, 0.75 * (2.0 * eps - sum.certified_error)), 0.5 * eps);
    double dropped = 0.0;
    std::size_t cut = 0;
    while (cut < sum.terms.size() && dropped + std::abs(sum.terms[cut].coeff) <= budget) {
      dropped += std::abs(sum.terms[cut].coeff);
      ++cut;
    }
    sum.terms.erase(sum.terms.begin(), sum.terms.begin() + static_cast<std::ptrdiff_t>(cut));
    sum.certified_error += dropped;
    sum.tail_error += dropped;
    return sum;
  }
  throw ConvergenceFailure("2-D h loop did not settle; tail point may be mis-specified");
}

}  // namespace eumax
