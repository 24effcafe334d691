// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#include "eumax/utility.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "eumax/errors.hpp"

namespace eumax {

UtilitySpec UtilitySpec::threshold_ramp(double delta_u, double threshold) {
  if (!(delta_u > 0.0)) throw InvalidInput("threshold ramp needs delta_u > 0");
  if (!(threshold > 0.0)) throw InvalidInput("threshold ramp needs threshold > 0");
  return UtilitySpec(ThresholdRamp{delta_u, threshold});
}

UtilitySpec UtilitySpec::inverse() { return UtilitySpec(Inverse{}); }

UtilitySpec UtilitySpec::piecewise_linear(std::vector<std::pair<double, double>> points) {
  if (points.empty()) throw InvalidInput("piecewise-linear utility needs breakpoints");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i].first >= 0.0)) throw InvalidInput("breakpoint x must be >= 0");
    if (!(points[i].second >= 0.0 && points[i].second <= 1.0))
      throw InvalidInput("breakpoint y must lie in [0,1]");
    if (i > 0 && !(points[i].first > points[i - 1].first))
      throw InvalidInput("breakpoint x values must be strictly increasing");
  }
  if (points.back().second != 0.0)
    throw InvalidInput("piecewise-linear utility must end at y = 0");
  return UtilitySpec(PiecewiseLinear{std::move(points)});
}

double UtilitySpec::operator()(double x) const {
  if (const auto* r = as_threshold_ramp()) {
    if (x <= r->threshold) return 1.0;
    if (x >= r->threshold + r->delta_u) return 0.0;
    return 1.0 - (x - r->threshold) / r->delta_u;
  }
  if (as_inverse()) return 1.0 / (x + 1.0);
  const auto& pts = as_piecewise_linear()->points;
  if (x <= pts.front().first) return pts.front().second;
  if (x >= pts.back().first) return 0.0;
  auto it = std::upper_bound(pts.begin(), pts.end(), x,
                             [](double v, const auto& p) { return v < p.first; });
  const auto& hi = *it;
  const auto& lo = *(it - 1);
  const double t = (x - lo.first) / (hi.first - lo.first);
  return lo.second + t * (hi.second - lo.second);
}

double UtilitySpec::tail_point(double eps) const {
  if (!(eps > 0.0)) throw InvalidInput("tail point needs eps > 0");
  if (const auto* r = as_threshold_ramp()) return r->threshold + r->delta_u;
  if (as_inverse()) return 1.0 / eps - 1.0;
  // Last x where the piecewise-linear graph sits above eps.
  const auto& pts = as_piecewise_linear()->points;
  double tail = 0.0;
  double prev_x = 0.0, prev_y = pts.front().second;
  for (const auto& [x, y] : pts) {
    if (prev_y > eps && y > eps) {
      tail = x;
    } else if (prev_y > eps && y <= eps) {
      const double t = (prev_y - eps) / (prev_y - y);
      tail = prev_x + t * (x - prev_x);
    } else if (prev_y <= eps && y > eps) {
      tail = x;  // rises back above eps; keep scanning
    }
    if (y > eps) tail = std::max(tail, x);
    prev_x = x;
    prev_y = y;
  }
  return tail;
}

bool UtilitySpec::below_everywhere(double eps) const {
  if (as_inverse()) return 1.0 <= eps;
  if (as_threshold_ramp()) return 1.0 <= eps;
  for (const auto& [x, y] : as_piecewise_linear()->points)
    if (y > eps) return false;
  return true;
}

std::vector<double> UtilitySpec::breakpoints() const {
  if (const auto* r = as_threshold_ramp()) return {r->threshold, r->threshold + r->delta_u};
  if (as_inverse()) return {};
  std::vector<double> xs;
  for (const auto& [x, y] : as_piecewise_linear()->points) xs.push_back(x);
  return xs;
}

std::string UtilitySpec::describe() const {
  std::ostringstream os;
  if (const auto* r = as_threshold_ramp()) {
    os << "threshold_ramp(delta_u=" << r->delta_u << ", threshold=" << r->threshold << ")";
  } else if (as_inverse()) {
    os << "inverse";
  } else {
    os << "piecewise_linear(" << as_piecewise_linear()->points.size() << " points)";
  }
  return os.str();
}

}  // namespace eumax
