// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace eumax {

/// A utility function mu: [0, inf) -> [0, 1] that vanishes at infinity.
/// tail_point(eps) returns T with mu(x) <= eps for all x > T.
class UtilitySpec {
 public:
  /// 1 on [0, threshold], linear down to 0 at threshold + delta_u, 0 after.
  struct ThresholdRamp {
    double delta_u;
    double threshold;
  };
  /// mu(x) = 1 / (x + 1).
  struct Inverse {};
  /// Piecewise-linear interpolation of (x, y) breakpoints with y in [0, 1],
  /// strictly increasing x, and final y = 0. Constant before the first
  /// breakpoint and 0 after the last.
  struct PiecewiseLinear {
    std::vector<std::pair<double, double>> points;
  };

  static UtilitySpec threshold_ramp(double delta_u, double threshold = 1.0);
  static UtilitySpec inverse();
  static UtilitySpec piecewise_linear(std::vector<std::pair<double, double>> points);

  double operator()(double x) const;
  double tail_point(double eps) const;

  /// True when mu(x) <= eps for every x >= 0 (degenerate decomposition input).
  bool below_everywhere(double eps) const;

  /// Kink locations of mu on [0, inf); certification grids sample these
  /// exactly since the sup error concentrates there.
  std::vector<double> breakpoints() const;

  const ThresholdRamp* as_threshold_ramp() const { return std::get_if<ThresholdRamp>(&v_); }
  const Inverse* as_inverse() const { return std::get_if<Inverse>(&v_); }
  const PiecewiseLinear* as_piecewise_linear() const { return std::get_if<PiecewiseLinear>(&v_); }

  std::string describe() const;

 private:
  template <typename T>
  explicit UtilitySpec(T v) : v_(std::move(v)) {}
  std::variant<ThresholdRamp, Inverse, PiecewiseLinear> v_;
};

/// Separable 2-D utility mu2(x, y) = fx(x) * fy(y); covers the plateau
/// variant of the 2-D threshold function when both factors are ramps.
struct Utility2D {
  UtilitySpec fx;
  UtilitySpec fy;

  static Utility2D plateau(double delta_u, double threshold1 = 1.0, double threshold2 = 1.0) {
    return {UtilitySpec::threshold_ramp(delta_u, threshold1),
            UtilitySpec::threshold_ramp(delta_u, threshold2)};
  }

  double operator()(double x, double y) const { return fx(x) * fy(y); }
};

}  // namespace eumax
