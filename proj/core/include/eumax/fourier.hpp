// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace eumax {

using RealFn = std::function<double(double)>;
using RealFn2 = std::function<double(double, double)>;

/// Truncated Fourier series of a real function on [-pi, pi]:
/// (S_N f)(x) = sum_{k=-N..N} c_k e^{ikx}. Coefficients are Hermitian
/// (c_{-k} = conj(c_k)) so the evaluation is real up to roundoff.
class FourierPartialSum {
 public:
  FourierPartialSum() = default;
  FourierPartialSum(int n, std::vector<std::complex<double>> coeffs);

  int harmonics() const { return n_; }
  std::complex<double> coeff(int k) const { return coeffs_[static_cast<std::size_t>(k + n_)]; }
  const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }

  std::complex<double> evaluate_complex(double x) const;
  double evaluate(double x) const { return evaluate_complex(x).real(); }

  double sum_abs_coeffs() const;

 private:
  int n_ = 0;
  std::vector<std::complex<double>> coeffs_;  // index k + n_
};

/// Rectangular 2-D partial sum on [-pi, pi]^2 with (2N+1)^2 coefficients.
class FourierPartialSum2D {
 public:
  FourierPartialSum2D() = default;
  FourierPartialSum2D(int n, std::vector<std::complex<double>> coeffs);

  int harmonics() const { return n_; }
  std::complex<double> coeff(int k1, int k2) const {
    const int w = 2 * n_ + 1;
    return coeffs_[static_cast<std::size_t>((k1 + n_) * w + (k2 + n_))];
  }
  const std::vector<std::complex<double>>& coeffs() const { return coeffs_; }

  std::complex<double> evaluate_complex(double x, double y) const;
  double evaluate(double x, double y) const { return evaluate_complex(x, y).real(); }

 private:
  int n_ = 0;
  std::vector<std::complex<double>> coeffs_;  // row-major (k1 + n_, k2 + n_)
};

/// Smoothness class used by rate tests: |f(x)-f(y)| <= coefficient*|x-y|^alpha.
struct HolderSpec {
  double alpha = 1.0;        // in (0, 1]
  double coefficient = 1.0;  // |f|_{C^{0,alpha}}
};

/// Coefficients by the trapezoidal rule on oversample*(2N+1) uniform samples
/// of [-pi, pi]; Hermitian symmetry is enforced by averaging c_k with
/// conj(c_{-k}). Requires oversample >= 4.
FourierPartialSum fourier_coefficients(const RealFn& f, int n, int oversample = 8);

/// Max of |f(x) - (S_N f)(x)| over a uniform grid of [-pi, pi].
double sup_error(const FourierPartialSum& ps, const RealFn& f, int grid_size = 2000);

/// Tensor-product trapezoid analogue of fourier_coefficients.
FourierPartialSum2D fourier_coefficients_2d(const RealFn2& f, int n, int oversample = 8);

double sup_error_2d(const FourierPartialSum2D& ps, const RealFn2& f, int grid_size = 160);

}  // namespace eumax
