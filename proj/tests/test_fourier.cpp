// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#include "eumax/fourier.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using eumax::FourierPartialSum;
using eumax::fourier_coefficients;
using eumax::fourier_coefficients_2d;
using eumax::sup_error;
using eumax::sup_error_2d;

namespace {

constexpr double kPi = std::numbers::pi;

// Continuous ramp on [-pi, pi]: 1 inside |x| <= 1, linear down to 0 at
// 1 + width, zero beyond. Lipschitz with constant 1/width.
auto ramp(double width) {
  return [width](double x) {
    const double a = std::abs(x);
    if (a <= 1.0) return 1.0;
    if (a >= 1.0 + width) return 0.0;
    return 1.0 - (a - 1.0) / width;
  };
}

}  // namespace

TEST_CASE("cosine has the two expected coefficients") {
  const auto ps = fourier_coefficients([](double x) { return std::cos(x); }, 2);
  CHECK(std::abs(ps.coeff(1) - std::complex<double>(0.5, 0.0)) < 1e-10);
  CHECK(std::abs(ps.coeff(-1) - std::complex<double>(0.5, 0.0)) < 1e-10);
  CHECK(std::abs(ps.coeff(0)) < 1e-10);
  CHECK(std::abs(ps.coeff(2)) < 1e-10);

  CHECK(ps.evaluate(0.0) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(ps.evaluate(kPi / 2.0)) < 1e-10);
}

TEST_CASE("zero function gives zero coefficients") {
  const auto ps = fourier_coefficients([](double) { return 0.0; }, 4);
  for (int k = -4; k <= 4; ++k) CHECK(std::abs(ps.coeff(k)) < 1e-14);
}

TEST_CASE("triangle wave coefficients match the analytic form") {
  // |x| on [-pi, pi]: c_0 = pi/2, c_k = (cos(k pi) - 1) / (pi k^2). The
  // trapezoid rule sees the corners, so allow its O(h^2) bias.
  const auto ps = fourier_coefficients([](double x) { return std::abs(x); }, 8, 64);
  CHECK(std::abs(ps.coeff(0).real() - kPi / 2.0) < 1e-5);
  for (int k = 1; k <= 8; ++k) {
    const double analytic = (std::cos(k * kPi) - 1.0) / (kPi * k * k);
    CHECK(std::abs(ps.coeff(k).real() - analytic) < 1e-5);
    CHECK(std::abs(ps.coeff(k).imag()) < 1e-10);
  }
  // Evaluation at pi/2 equals the direct coefficient sum.
  std::complex<double> direct = 0.0;
  for (int k = -8; k <= 8; ++k) direct += ps.coeff(k) * std::polar(1.0, k * kPi / 2.0);
  CHECK(ps.evaluate(kPi / 2.0) == doctest::Approx(direct.real()).epsilon(1e-12));
}

TEST_CASE("constants are captured exactly by c_0") {
  const auto ps = fourier_coefficients([](double) { return 0.3; }, 1);
  CHECK(sup_error(ps, [](double) { return 0.3; }, 2000) < 1e-10);
}

TEST_CASE("hermitian symmetry holds for a rough real input") {
  const auto f = [](double x) { return std::exp(0.3 * x) * ramp(0.7)(x); };
  const auto ps = fourier_coefficients(f, 16);
  for (int k = 1; k <= 16; ++k)
    CHECK(std::abs(ps.coeff(-k) - std::conj(ps.coeff(k))) < 1e-10);
  // Evaluations are real up to roundoff against the coefficient mass.
  const double scale = ps.sum_abs_coeffs();
  for (double x : {-2.5, -0.3, 0.0, 1.1, 2.9})
    CHECK(std::abs(ps.evaluate_complex(x).imag()) <= 1e-9 * scale + 1e-12);
}

TEST_CASE("parseval inequality on sampled test functions") {
  const auto funcs = {
      eumax::RealFn([](double x) { return std::cos(2.0 * x) * 0.5; }),
      eumax::RealFn(ramp(0.5)),
      eumax::RealFn([](double x) { return std::abs(std::sin(x)); }),
  };
  for (const auto& f : funcs) {
    const auto ps = fourier_coefficients(f, 24);
    double coeff_mass = 0.0;
    for (int k = -24; k <= 24; ++k) coeff_mass += std::norm(ps.coeff(k));
    // (1/2pi) integral of f^2 by a fine trapezoid.
    const int m = 4000;
    double integral = 0.0;
    for (int j = 0; j <= m; ++j) {
      const double x = -kPi + 2.0 * kPi * j / m;
      const double w = (j == 0 || j == m) ? 0.5 : 1.0;
      integral += w * f(x) * f(x);
    }
    integral *= 2.0 * kPi / m / (2.0 * kPi);
    CHECK(coeff_mass <= integral + 1e-6);
  }
}

TEST_CASE("jackson rate: doubling N shrinks the ramp sup error by 25 percent") {
  const auto f = ramp(0.5);
  for (int m : {8, 16, 32}) {
    const double at_m = sup_error(fourier_coefficients(f, m), f, 4000);
    const double at_2m = sup_error(fourier_coefficients(f, 2 * m), f, 4000);
    CHECK(at_2m <= 0.75 * at_m);
  }
}

TEST_CASE("2-D product cosine coefficients") {
  const auto ps = fourier_coefficients_2d(
      [](double x, double y) { return std::cos(x) * std::cos(y); }, 2);
  for (int s1 : {-1, 1})
    for (int s2 : {-1, 1})
      CHECK(std::abs(ps.coeff(s1, s2) - std::complex<double>(0.25, 0.0)) < 1e-9);
  CHECK(std::abs(ps.coeff(0, 0)) < 1e-9);
  CHECK(std::abs(ps.coeff(2, 1)) < 1e-9);
}

TEST_CASE("2-D constant lands on c_00") {
  const auto ps = fourier_coefficients_2d([](double, double) { return 1.0; }, 1);
  CHECK(std::abs(ps.coeff(0, 0) - std::complex<double>(1.0, 0.0)) < 1e-10);
  CHECK(std::abs(ps.coeff(1, 0)) < 1e-10);
  CHECK(std::abs(ps.coeff(1, -1)) < 1e-10);
}

TEST_CASE("2-D plateau error decreases when N doubles") {
  const auto plateau = [](double x, double y) { return ramp(0.6)(x) * ramp(0.6)(y); };
  const double at_8 = sup_error_2d(fourier_coefficients_2d(plateau, 8), plateau, 96);
  const double at_16 = sup_error_2d(fourier_coefficients_2d(plateau, 16), plateau, 96);
  CHECK(at_16 < at_8);
}

TEST_CASE("2-D hermitian pairing") {
  const auto f = [](double x, double y) { return ramp(0.5)(x) * (1.0 + 0.2 * std::sin(y)); };
  const auto ps = fourier_coefficients_2d(f, 6);
  for (int k1 = -6; k1 <= 6; ++k1)
    for (int k2 = -6; k2 <= 6; ++k2)
      CHECK(std::abs(ps.coeff(-k1, -k2) - std::conj(ps.coeff(k1, k2))) < 1e-10);
}
