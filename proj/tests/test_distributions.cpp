// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#include "eumax/distributions.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "eumax/errors.hpp"

using eumax::Complex;
using eumax::Distribution;
using eumax::InvalidInput;
using eumax::Moment;
using eumax::moment;
using eumax::moment_quadrature;

namespace {

// Independent oracle for the Poisson moment: truncated series
// sum_{k<=50} phi^k e^{-lambda} lambda^k / k!.
Complex poisson_series(double lambda, Complex phi) {
  Complex acc = 0.0;
  double log_fact = 0.0;
  for (int k = 0; k <= 50; ++k) {
    if (k > 0) log_fact += std::log(static_cast<double>(k));
    acc += std::pow(phi, k) * std::exp(-lambda + k * std::log(lambda) - log_fact);
  }
  return acc;
}

std::vector<Distribution> all_variants() {
  return {Distribution::discrete({0.0, 0.9, 1.9}, {0.2, 0.7, 0.1}),
          Distribution::poisson(1.3),
          Distribution::exponential(2.0),
          Distribution::gaussian(1.0, 0.1)};
}

}  // namespace

TEST_CASE("poisson moment matches the truncated series oracle") {
  const auto dist = Distribution::poisson(1.0);
  const Moment m = moment(dist, 0.5);
  CHECK(m.value.real() == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
  CHECK(m.value.imag() == doctest::Approx(0.0).epsilon(1e-12));
  const Complex oracle = poisson_series(1.0, 0.5);
  CHECK(std::abs(m.value - oracle) < 1e-12);

  // Complex phi as well.
  const Complex phi = std::polar(0.8, 1.1);
  CHECK(std::abs(moment(dist, phi).value - poisson_series(1.0, phi)) < 1e-12);
}

TEST_CASE("discrete moment is the direct weighted sum") {
  const auto dist = Distribution::discrete({0.9, 1.9}, {0.9, 0.1});
  const Moment m = moment(dist, 0.5);
  const double oracle = 0.9 * std::pow(0.5, 0.9) + 0.1 * std::pow(0.5, 1.9);
  CHECK(m.value.real() == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(oracle == doctest::Approx(0.509093).epsilon(1e-5));
  CHECK(m.method == Moment::Method::direct_sum);
  CHECK(m.abs_error_bound == 0.0);
}

TEST_CASE("phi = 1 gives a unit moment for every variant") {
  for (const auto& dist : all_variants()) {
    const Moment m = moment(dist, 1.0);
    CHECK(std::abs(m.value - Complex(1.0, 0.0)) < 1e-12);
  }
}

TEST_CASE("a point mass at zero has unit moments everywhere") {
  const auto dist = Distribution::point_mass(0.0);
  for (const Complex phi : {Complex(0.3, 0.0), Complex(0.0, 0.0), std::polar(1.0, 2.0)}) {
    CHECK(std::abs(moment(dist, phi).value - Complex(1.0, 0.0)) < 1e-12);
  }
}

TEST_CASE("moments stay inside the unit disk on a 100-point phi grid") {
  for (const auto& dist : all_variants()) {
    for (int mi = 1; mi <= 10; ++mi) {
      for (int ai = 0; ai < 10; ++ai) {
        const Complex phi = std::polar(0.1 * mi, 2.0 * std::numbers::pi * ai / 10.0);
        CHECK(std::abs(moment(dist, phi).value) <= 1.0 + 1e-9);
      }
    }
  }
}

TEST_CASE("discrete moment agrees with a seeded Monte Carlo estimate") {
  const auto dist = Distribution::discrete({0.0, 0.4, 1.1}, {0.25, 0.5, 0.25});
  const Complex phi = std::polar(0.7, 0.9);
  const Complex s = std::log(phi);
  const std::int64_t samples = 1000000;
  Complex sum = 0.0;
  double sumsq_re = 0.0, sumsq_im = 0.0;
  for (std::int64_t j = 0; j < samples; ++j) {
    const double w = dist.sample(42, 0, static_cast<std::uint64_t>(j));
    const Complex v = std::exp(s * w);
    sum += v;
    sumsq_re += v.real() * v.real();
    sumsq_im += v.imag() * v.imag();
  }
  const Complex mean = sum / static_cast<double>(samples);
  const double se_re = std::sqrt(
      (sumsq_re / samples - mean.real() * mean.real()) / static_cast<double>(samples));
  const double se_im = std::sqrt(
      (sumsq_im / samples - mean.imag() * mean.imag()) / static_cast<double>(samples));
  const Complex exact = moment(dist, phi).value;
  CHECK(std::abs(mean.real() - exact.real()) < 3.0 * se_re + 1e-9);
  CHECK(std::abs(mean.imag() - exact.imag()) < 3.0 * se_im + 1e-9);
}

TEST_CASE("exponential closed form vs composite quadrature") {
  const double rate = 2.0;
  const auto density = [rate](double x) { return rate * std::exp(-rate * x); };
  const Complex phi = 0.5;
  const Moment q = moment_quadrature(density, 0.0, 20.0 / rate, phi, 64, 8);
  const Complex closed = rate / (rate - std::log(phi));
  CHECK(std::abs(q.value - closed) < 1e-8);
  CHECK(closed.real() == doctest::Approx(2.0 / (2.0 + std::log(2.0))).epsilon(1e-12));
  CHECK(q.method == Moment::Method::quadrature);
  CHECK(q.abs_error_bound < 1e-10);
}

TEST_CASE("near point mass integrates to roughly one") {
  // Narrow triangle density at zero: height 2/w on [0, w].
  const double w = 1e-3;
  const auto density = [w](double x) { return x < 0.0 || x > w ? 0.0 : 2.0 / w * (1.0 - x / w); };
  const Moment q = moment_quadrature(density, 0.0, w, 0.5, 32, 6);
  CHECK(q.value.real() == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("gaussian closed form vs quadrature on a truncated window") {
  const auto density = [](double x) {
    const double z = (x - 1.0) / 0.1;
    return std::exp(-0.5 * z * z) / (0.1 * std::sqrt(2.0 * std::numbers::pi));
  };
  const Complex phi = 0.5;
  const Moment q = moment_quadrature(density, 0.5, 1.5, phi, 64, 8);
  const Complex lnphi = std::log(phi);
  const Complex closed = std::exp(lnphi + 0.005 * lnphi * lnphi);
  CHECK(std::abs(q.value - closed) < 1e-5);
}

TEST_CASE("moment input validation") {
  const auto pois = Distribution::poisson(1.0);
  CHECK_THROWS_AS(moment(pois, Complex(1.5, 0.0)), InvalidInput);
  CHECK_THROWS_AS(moment(pois, Complex(0.0, 0.0)), InvalidInput);
  CHECK_THROWS_AS(moment(Distribution::exponential(0.5), Complex(0.0, 0.0)), InvalidInput);
  // Gaussian with visible negative mass is rejected at construction.
  CHECK_THROWS_AS(Distribution::gaussian(0.5, 0.5), InvalidInput);
  CHECK_NOTHROW(Distribution::gaussian(1.0, 0.1));
}

TEST_CASE("quadrature input validation") {
  const auto density = [](double) { return 1.0; };
  CHECK_THROWS_AS(moment_quadrature(density, 0.0, 1.0, 0.5, 0, 8), InvalidInput);
  CHECK_THROWS_AS(moment_quadrature(density, 0.0, 1.0, 0.5, 16, 0), InvalidInput);
  CHECK_THROWS_AS(moment_quadrature(density, 1.0, 0.5, 0.5, 16, 8), InvalidInput);
  // Mass check: a density integrating to 2 must be rejected.
  const auto heavy = [](double) { return 2.0; };
  CHECK_THROWS_AS(moment_quadrature(heavy, 0.0, 1.0, 0.5, 16, 8), InvalidInput);
  CHECK_THROWS_AS(moment_quadrature(density, 0.0, 1.0, Complex(1.2, 0.0), 16, 8), InvalidInput);
}

TEST_CASE("distribution construction validation") {
  CHECK_THROWS_AS(Distribution::discrete({-0.1}, {1.0}), InvalidInput);
  CHECK_THROWS_AS(Distribution::discrete({0.5, 1.0}, {0.6, 0.5}), InvalidInput);
  CHECK_THROWS_AS(Distribution::discrete({0.5}, {0.0}), InvalidInput);
  CHECK_THROWS_AS(Distribution::poisson(0.0), InvalidInput);
  CHECK_THROWS_AS(Distribution::exponential(-1.0), InvalidInput);
}

TEST_CASE("default truncation support keeps the tail tiny") {
  const auto exp2 = Distribution::exponential(2.0);
  const auto [a, b] = eumax::default_support(exp2);
  CHECK(a == 0.0);
  CHECK(std::exp(-2.0 * b) < 1e-9);
}
