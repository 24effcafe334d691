// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <vector>

#include "eumax/fourier.hpp"
#include "eumax/utility.hpp"

namespace eumax {

/// One term c * b^x of an exponential sum. The base b is kept as
/// (log-modulus, angle) so b^x = exp(x*(log_modulus + i*angle)) is
/// single-valued: the angle is the true scaled frequency and is NOT reduced
/// mod 2pi, which matters at non-integer x.
struct ExpTerm {
  std::complex<double> coeff;
  double base_log_modulus = 0.0;  // <= 0, so |b| <= 1
  double base_angle = 0.0;

  std::complex<double> exponent() const { return {base_log_modulus, base_angle}; }
  std::complex<double> base() const { return std::polar(std::exp(base_log_modulus), base_angle); }
};

/// mu~(x) = sum_k c_k b_k^x approximating a utility on [0, inf).
/// certified_error is the measured sup of |mu(x) - mu~(x)| over a dense grid
/// of [0, grid_max] combined with the tail probe max of |mu~| on
/// [grid_max, 2*grid_max].
struct ExponentialSum {
  std::vector<ExpTerm> terms;
  double eta = 2.0;
  double h = 2.0;
  double t_eps = 0.0;
  double certified_error = 0.0;
  double tail_error = 0.0;
  double grid_max = 0.0;

  std::complex<double> evaluate(double x) const;
  double sum_abs_coeffs() const;
  int size() const { return static_cast<int>(terms.size()); }
};

/// One term c * b1^x * b2^y of a 2-D exponential sum.
struct ExpTerm2D {
  std::complex<double> coeff;
  double base_log_modulus1 = 0.0;
  double base_angle1 = 0.0;
  double base_log_modulus2 = 0.0;
  double base_angle2 = 0.0;

  std::complex<double> exponent1() const { return {base_log_modulus1, base_angle1}; }
  std::complex<double> exponent2() const { return {base_log_modulus2, base_angle2}; }
};

struct ExponentialSum2D {
  std::vector<ExpTerm2D> terms;
  double eta = 2.0;
  double h = 2.0;
  double t_eps = 0.0;
  double certified_error = 0.0;
  double tail_error = 0.0;
  double grid_max = 0.0;

  std::complex<double> evaluate(double x, double y) const;
  double sum_abs_coeffs() const;
  int size() const { return static_cast<int>(terms.size()); }
};

enum class TailShape { smoothstep, linear };

struct DecomposeOptions {
  int max_terms = 2001;                 // cap on 2N+1 (or (2N+1)^2 in 2-D)
  TailShape tail = TailShape::smoothstep;
  int cert_grid = 10000;                // certification grid on [0, grid_max]
  int fourier_grid = 2048;              // inner sup-error grid on [-pi, pi]
  int cert_grid_2d = 200;               // per-axis certification grid in 2-D
  int oversample_2d = 4;                // 2-D coefficient sampling multiplier
  int max_h_iters = 20;
};

/// The compactly supported even extension of mu: equal to mu on [0, T_eps],
/// a C1 ramp from mu(T_eps) to 0 on [T_eps, 2*T_eps], zero beyond, and
/// even-reflected onto negative x. Satisfies |ext(x) - mu(x)| <= eps for
/// x >= 0.
class ExtendedUtility {
 public:
  ExtendedUtility(const UtilitySpec& mu, double eps, TailShape tail = TailShape::smoothstep);
  double operator()(double x) const;
  double tail_point() const { return t_eps_; }

 private:
  UtilitySpec mu_;
  double t_eps_;
  double value_at_t_;
  TailShape tail_;
};

ExtendedUtility extend_utility(const UtilitySpec& mu, double eps,
                               TailShape tail = TailShape::smoothstep);

/// Decomposes mu into an exponential sum with certified error <= 2*eps:
/// extend, damp by eta^x, Fourier-decompose on [-h*T_eps, h*T_eps] with an
/// adaptive harmonic cutoff, rescale the bases by 1/eta, and certify on a
/// dense grid. Throws TermBudgetExceeded when the cutoff cannot reach the
/// target within max_terms.
ExponentialSum esum_decompose(const UtilitySpec& mu, double eps,
                              const DecomposeOptions& options = {});
ExponentialSum esum_decompose(const UtilitySpec& mu, double eps, int max_terms);

/// 2-D analogue for separable utilities (rectangular partial sums); the term
/// budget counts (2N+1)^2.
ExponentialSum2D esum_decompose_2d(const Utility2D& mu2, double eps,
                                   const DecomposeOptions& options = {});
ExponentialSum2D esum_decompose_2d(const Utility2D& mu2, double eps, int max_terms);

}  // namespace eumax
