// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#include "eumax/fourier.hpp"

#include <cmath>
#include <numbers>

#include "eumax/errors.hpp"

namespace eumax {

namespace {
constexpr double kPi = std::numbers::pi;
using Cplx = std::complex<double>;
}  // namespace

FourierPartialSum::FourierPartialSum(int n, std::vector<Cplx> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  if (n_ < 0 || coeffs_.size() != static_cast<std::size_t>(2 * n_ + 1))
    throw InvalidInput("partial sum needs 2N+1 coefficients");
}

Cplx FourierPartialSum::evaluate_complex(double x) const {
  // Horner-style recurrence over e^{ix}: sum_k c_k e^{ikx} with k from -N..N.
  const Cplx w = std::polar(1.0, x);
  Cplx acc = 0.0;
  for (int k = n_; k >= -n_; --k) acc = acc * w + coeff(k);
  return acc * std::polar(1.0, -n_ * x);
}

double FourierPartialSum::sum_abs_coeffs() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::abs(c);
  return s;
}

FourierPartialSum2D::FourierPartialSum2D(int n, std::vector<Cplx> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  const std::size_t w = static_cast<std::size_t>(2 * n_ + 1);
  if (n_ < 0 || coeffs_.size() != w * w)
    throw InvalidInput("2-D partial sum needs (2N+1)^2 coefficients");
}

Cplx FourierPartialSum2D::evaluate_complex(double x, double y) const {
  const int w = 2 * n_ + 1;
  // Contract the k2 axis first, then the k1 axis.
  std::vector<Cplx> row(static_cast<std::size_t>(w));
  const Cplx ey = std::polar(1.0, y);
  for (int i = 0; i < w; ++i) {
    Cplx acc = 0.0;
    for (int j = w - 1; j >= 0; --j) acc = acc * ey + coeffs_[static_cast<std::size_t>(i * w + j)];
    row[static_cast<std::size_t>(i)] = acc * std::polar(1.0, -n_ * y);
  }
  const Cplx ex = std::polar(1.0, x);
  Cplx acc = 0.0;
  for (int i = w - 1; i >= 0; --i) acc = acc * ex + row[static_cast<std::size_t>(i)];
  return acc * std::polar(1.0, -n_ * x);
}

FourierPartialSum fourier_coefficients(const RealFn& f, int n, int oversample) {
  if (n <= 0) throw InvalidInput("harmonic cutoff N must be positive");
  if (oversample < 4) throw InvalidInput("oversample must be >= 4");
  const int m = oversample * (2 * n + 1);  // panels; m+1 trapezoid samples
  const double dx = 2.0 * kPi / m;

  std::vector<double> samples(static_cast<std::size_t>(m + 1));
  for (int j = 0; j <= m; ++j) samples[static_cast<std::size_t>(j)] = f(-kPi + j * dx);

  std::vector<Cplx> coeffs(static_cast<std::size_t>(2 * n + 1));
  for (int k = -n; k <= n; ++k) {
    Cplx acc = 0.5 * (samples.front() * std::polar(1.0, -k * -kPi) +
                      samples.back() * std::polar(1.0, -k * kPi));
    for (int j = 1; j < m; ++j) {
      const double x = -kPi + j * dx;
      acc += samples[static_cast<std::size_t>(j)] * std::polar(1.0, -k * x);
    }
    coeffs[static_cast<std::size_t>(k + n)] = acc * dx / (2.0 * kPi);
  }
  // Real input: enforce c_{-k} = conj(c_k) exactly.
  for (int k = 1; k <= n; ++k) {
    const Cplx avg =
        0.5 * (coeffs[static_cast<std::size_t>(k + n)] +
               std::conj(coeffs[static_cast<std::size_t>(-k + n)]));
    coeffs[static_cast<std::size_t>(k + n)] = avg;
    coeffs[static_cast<std::size_t>(-k + n)] = std::conj(avg);
  }
  coeffs[static_cast<std::size_t>(n)] = Cplx(coeffs[static_cast<std::size_t>(n)].real(), 0.0);
  return FourierPartialSum(n, std::move(coeffs));
}

double sup_error(const FourierPartialSum& ps, const RealFn& f, int grid_size) {
  if (grid_size < 2) throw InvalidInput("sup_error grid must have at least 2 points");
  double worst = 0.0;
  for (int j = 0; j <= grid_size; ++j) {
    const double x = -kPi + 2.0 * kPi * j / grid_size;
    worst = std::max(worst, std::abs(f(x) - ps.evaluate(x)));
  }
  return worst;
}

FourierPartialSum2D fourier_coefficients_2d(const RealFn2& f, int n, int oversample) {
  if (n <= 0) throw InvalidInput("harmonic cutoff N must be positive");
  if (oversample < 4) throw InvalidInput("oversample must be >= 4");
  const int m = oversample * (2 * n + 1);
  const int w = 2 * n + 1;
  const double dx = 2.0 * kPi / m;

  std::vector<double> weights(static_cast<std::size_t>(m + 1), 1.0);
  weights.front() = weights.back() = 0.5;

  // Stage 1: contract the x axis. partial[k1][j2] = sum_j1 w_j1 f(x_j1, y_j2) e^{-i k1 x_j1}.
  std::vector<Cplx> partial(static_cast<std::size_t>(w) * (m + 1), Cplx(0.0));
  std::vector<double> fx(static_cast<std::size_t>(m + 1));
  for (int j2 = 0; j2 <= m; ++j2) {
    const double y = -kPi + j2 * dx;
    for (int j1 = 0; j1 <= m; ++j1)
      fx[static_cast<std::size_t>(j1)] =
          weights[static_cast<std::size_t>(j1)] * f(-kPi + j1 * dx, y);
    for (int k1 = -n; k1 <= n; ++k1) {
      Cplx acc = 0.0;
      const Cplx step = std::polar(1.0, -k1 * dx);
      Cplx phase = std::polar(1.0, -k1 * -kPi);
      for (int j1 = 0; j1 <= m; ++j1) {
        acc += fx[static_cast<std::size_t>(j1)] * phase;
        phase *= step;
      }
      partial[static_cast<std::size_t>((k1 + n) * (m + 1) + j2)] = acc;
    }
  }
  // Stage 2: contract the y axis.
  std::vector<Cplx> coeffs(static_cast<std::size_t>(w) * w, Cplx(0.0));
  const double norm = dx * dx / (4.0 * kPi * kPi);
  for (int k1 = -n; k1 <= n; ++k1) {
    for (int k2 = -n; k2 <= n; ++k2) {
      Cplx acc = 0.0;
      const Cplx step = std::polar(1.0, -k2 * dx);
      Cplx phase = std::polar(1.0, -k2 * -kPi);
      for (int j2 = 0; j2 <= m; ++j2) {
        acc += weights[static_cast<std::size_t>(j2)] *
               partial[static_cast<std::size_t>((k1 + n) * (m + 1) + j2)] * phase;
        phase *= step;
      }
      coeffs[static_cast<std::size_t>((k1 + n) * w + (k2 + n))] = acc * norm;
    }
  }
  // Hermitian pairing (k1,k2) <-> (-k1,-k2).
  for (int k1 = -n; k1 <= n; ++k1) {
    for (int k2 = -n; k2 <= n; ++k2) {
      if (k1 < 0 || (k1 == 0 && k2 < 0)) continue;
      auto& a = coeffs[static_cast<std::size_t>((k1 + n) * w + (k2 + n))];
      auto& b = coeffs[static_cast<std::size_t>((-k1 + n) * w + (-k2 + n))];
      const Cplx avg = 0.5 * (a + std::conj(b));
      a = avg;
      b = std::conj(avg);
    }
  }
  return FourierPartialSum2D(n, std::move(coeffs));
}

double sup_error_2d(const FourierPartialSum2D& ps, const RealFn2& f, int grid_size) {
  if (grid_size < 2) throw InvalidInput("sup_error grid must have at least 2 points");
  double worst = 0.0;
  for (int i = 0; i <= grid_size; ++i) {
    const double x = -kPi + 2.0 * kPi * i / grid_size;
    for (int j = 0; j <= grid_size; ++j) {
      const double y = -kPi + 2.0 * kPi * j / grid_size;
      worst = std::max(worst, std::abs(f(x, y) - ps.evaluate(x, y)));
    }
  }
  return worst;
}

}  // namespace eumax
