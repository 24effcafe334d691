// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#include "eumax/esum.hpp"

#include <doctest.h>

#include <cmath>

#include "eumax/errors.hpp"

using eumax::DecomposeOptions;
using eumax::esum_decompose;
using eumax::esum_decompose_2d;
using eumax::ExponentialSum;
using eumax::extend_utility;
using eumax::TermBudgetExceeded;
using eumax::Utility2D;
using eumax::UtilitySpec;

TEST_CASE("extension keeps the inverse utility on [0, T_eps]") {
  const auto inv = UtilitySpec::inverse();
  const auto ext = extend_utility(inv, 0.1);
  CHECK(ext.tail_point() == doctest::Approx(9.0));
  CHECK(ext(4.0) == doctest::Approx(0.2).epsilon(1e-12));  // 1/(4+1), untouched
  CHECK(ext(18.0) == doctest::Approx(0.0));                // zero at 2 T_eps
  CHECK(ext(25.0) == 0.0);
}

TEST_CASE("extension reads the ramp straight from the utility") {
  const auto ramp = UtilitySpec::threshold_ramp(0.5, 1.0);
  const auto ext = extend_utility(ramp, 0.05);
  CHECK(ext.tail_point() == doctest::Approx(1.5));
  CHECK(ext(1.25) == doctest::Approx(0.5));
  // Even reflection and continuity at zero on a fine grid.
  for (double x = 0.0; x < 3.0; x += 0.01) CHECK(ext(-x) == doctest::Approx(ext(x)));
  CHECK(ext(1e-9) == doctest::Approx(ext(0.0)).epsilon(1e-6));
}

TEST_CASE("extension error stays within eps for x >= 0") {
  const auto inv = UtilitySpec::inverse();
  const double eps = 0.2;
  const auto ext = extend_utility(inv, eps);
  for (double x = 0.0; x < 30.0; x += 0.01) CHECK(std::abs(ext(x) - inv(x)) <= eps + 1e-12);
}

TEST_CASE("extension rejects eps outside (0, 0.5)") {
  const auto inv = UtilitySpec::inverse();
  CHECK_THROWS_AS(extend_utility(inv, 0.0), eumax::InvalidInput);
  CHECK_THROWS_AS(extend_utility(inv, 0.9), eumax::InvalidInput);
}

TEST_CASE("threshold ramp decomposes within the certified budget") {
  const auto mu = UtilitySpec::threshold_ramp(0.5, 1.0);
  const ExponentialSum sum = esum_decompose(mu, 0.1, 81);
  CHECK(sum.size() <= 81);
  CHECK(sum.certified_error <= 0.2);
  CHECK(sum.tail_error <= 0.2);
  CHECK(sum.grid_max == doctest::Approx(2.0 * sum.h * sum.t_eps));
  for (const auto& t : sum.terms) {
    CHECK(std::exp(t.base_log_modulus) <= 1.0 + 1e-12);
  }
  // Spot-check the certificate at a few points.
  for (double x : {0.0, 0.7, 1.2, 1.4, 2.5, 6.0})
    CHECK(std::abs(sum.evaluate(x) - mu(x)) <= sum.certified_error + 1e-9);
}

TEST_CASE("inverse at eps 0.25 keeps eta = 2 and certifies within 0.5") {
  const auto mu = UtilitySpec::inverse();
  const ExponentialSum sum = esum_decompose(mu, 0.25, 81);
  CHECK(sum.eta == doctest::Approx(2.0));
  CHECK(sum.t_eps == doctest::Approx(3.0));
  CHECK(sum.certified_error <= 0.5);
  for (const auto& t : sum.terms)
    CHECK(std::exp(t.base_log_modulus) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("an everywhere-tiny utility decomposes to the empty sum") {
  const auto mu = UtilitySpec::piecewise_linear({{0.0, 0.0}, {1.0, 0.0}});
  const ExponentialSum sum = esum_decompose(mu, 0.1, 81);
  CHECK(sum.size() == 0);
  CHECK(sum.certified_error == 0.0);
}

TEST_CASE("term budget failure is reported as such") {
  const auto mu = UtilitySpec::threshold_ramp(0.05, 1.0);  // very sharp ramp
  CHECK_THROWS_AS(esum_decompose(mu, 0.05, 9), TermBudgetExceeded);
}

TEST_CASE("measured slope of the extension respects the piecewise bound") {
  const auto mu = UtilitySpec::threshold_ramp(0.5, 1.0);
  const auto ext = extend_utility(mu, 0.1);
  double worst = 0.0;
  const double dx = 1e-3;
  for (double x = -4.0; x < 4.0; x += dx)
    worst = std::max(worst, std::abs(ext(x + dx) - ext(x)) / dx);
  CHECK(worst <= 2.0 / 0.5 + 1e-6);
}

TEST_CASE("tail probe stays under the certificate") {
  const auto mu = UtilitySpec::threshold_ramp(0.25, 1.0);
  const ExponentialSum sum = esum_decompose(mu, 0.1, 401);
  for (double x = sum.grid_max; x <= 2.0 * sum.grid_max; x += sum.grid_max / 64.0)
    CHECK(std::abs(sum.evaluate(x)) <= sum.certified_error + 1e-9);
}

TEST_CASE("plateau decomposes in two dimensions") {
  const Utility2D mu2 = Utility2D::plateau(0.5, 1.0, 1.0);
  const auto sum = esum_decompose_2d(mu2, 0.15, 40001);
  CHECK(sum.certified_error <= 0.3);
  // Spot checks on [0, 6]^2.
  for (double x : {0.0, 0.9, 1.3, 2.8})
    for (double y : {0.2, 1.1, 5.5})
      CHECK(std::abs(sum.evaluate(x, y) - mu2(x, y)) <= sum.certified_error + 1e-9);
}

TEST_CASE("zero 2-D utility gives the empty sum") {
  const Utility2D mu2{UtilitySpec::piecewise_linear({{0.0, 0.0}, {1.0, 0.0}}),
                      UtilitySpec::threshold_ramp(0.5, 1.0)};
  const auto sum = esum_decompose_2d(mu2, 0.1, 4001);
  CHECK(sum.size() == 0);
  CHECK(sum.certified_error == 0.0);
}

TEST_CASE("separable product error stacks like two 1-D errors") {
  const auto g = UtilitySpec::threshold_ramp(0.5, 1.0);
  const double eps = 0.15;
  const auto one_d = esum_decompose(g, eps, 4001);
  const auto two_d = esum_decompose_2d(Utility2D{g, g}, eps, 40001);
  const double e1 = one_d.certified_error;
  CHECK(two_d.certified_error <= 2.0 * e1 + e1 * e1 + 0.05);
}
