// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#include "eumax/rounding.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <numbers>

#include "eumax/errors.hpp"

namespace eumax {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Floor with a small forgiveness band so values computed as x/step land on
// the intended integer when the quotient sits a few ulps below it.
std::int64_t floor_tol(double x) { return static_cast<std::int64_t>(std::floor(x + 1e-9)); }

}  // namespace

RoundingParams derive_params(int n, int num_terms, double eps, double rounding_scale) {
  if (n < 1) throw InvalidInput("rounding params need n >= 1");
  if (num_terms < 1) throw InvalidInput("rounding params need L >= 1");
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidInput("rounding params need eps in (0,1)");
  if (!(rounding_scale >= 1.0)) throw InvalidInput("rounding_scale must be >= 1");

  RoundingParams p;
  p.n = n;
  p.num_terms = num_terms;
  p.eps = eps;
  p.rounding_scale = rounding_scale;
  p.gamma = eps / (static_cast<double>(num_terms) * n) * rounding_scale;
  p.delta = p.gamma;
  const double j = std::ceil(-std::log(eps / num_terms) / p.gamma);
  const double k = std::ceil(kTwoPi * n / p.delta);
  if (!(j < 2e9) || !(k < 2e9))
    throw InvalidInput("rounding grid too fine (J or K overflows); increase rounding_scale");
  p.j_cap = static_cast<std::int32_t>(j);
  p.k_cap = static_cast<std::int32_t>(k);
  return p;
}

ElementVector round_element(std::span<const std::complex<double>> moments,
                            const RoundingParams& params) {
  if (static_cast<int>(moments.size()) != params.num_terms)
    throw InvalidInput("round_element: moment count does not match L");
  ElementVector ev;
  ev.ab.resize(2 * moments.size());
  for (std::size_t i = 0; i < moments.size(); ++i) {
    double mod = std::abs(moments[i]);
    if (mod > 1.0 + 1e-6)
      throw InvalidInput("round_element: moment modulus exceeds 1 (invalid phi upstream)");
    mod = std::min(mod, 1.0);
    std::int32_t a;
    if (mod == 0.0) {
      a = kOverflow;
    } else {
      const std::int64_t raw = floor_tol(-std::log(mod) / params.gamma);
      a = raw > params.j_cap ? kOverflow : static_cast<std::int32_t>(raw);
    }
    double arg = std::arg(moments[i]);  // (-pi, pi]
    if (arg < 0.0) arg += kTwoPi;       // normalize into [0, 2 pi)
    if (arg >= kTwoPi) arg -= kTwoPi;
    const std::int32_t b = static_cast<std::int32_t>(floor_tol(arg / params.delta));
    ev.ab[2 * i] = a;
    ev.ab[2 * i + 1] = b;
  }
  return ev;
}

void accumulate_saturating(ConfigVector& cfg, const ElementVector& delta,
                           std::span<const std::int32_t> alpha_caps) {
  for (std::size_t i = 0; i * 2 < cfg.size(); ++i) {
    const std::int64_t cap = alpha_caps[i];
    const std::int64_t add = delta.ab[2 * i] == kOverflow ? cap + 1 : delta.ab[2 * i];
    cfg[2 * i] = static_cast<std::int32_t>(std::min<std::int64_t>(cap, cfg[2 * i] + add));
    cfg[2 * i + 1] += delta.ab[2 * i + 1];
  }
}

std::complex<double> score_config(const ConfigVector& cfg,
                                  std::span<const std::complex<double>> coeffs,
                                  const RoundingParams& params) {
  if (cfg.size() != 2 * coeffs.size())
    throw InvalidInput("score_config: configuration width does not match L");
  std::complex<double> acc = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const double alpha = cfg[2 * k];
    const double beta = cfg[2 * k + 1];
    acc += coeffs[k] * std::polar(std::exp(-alpha * params.gamma), beta * params.delta);
  }
  return acc;
}

std::string encode_config(const ConfigVector& cfg, const RoundingParams& params) {
  namespace mp = boost::multiprecision;
  const mp::cpp_int alpha_radix =
      mp::cpp_int(params.n) * params.n * (mp::cpp_int(params.j_cap) + 1) + 1;
  const mp::cpp_int beta_radix = mp::cpp_int(params.k_cap) + 1;
  const std::int64_t sentinel =
      static_cast<std::int64_t>(params.n) * (static_cast<std::int64_t>(params.j_cap) + 1);

  mp::cpp_int acc = 0;
  for (std::size_t i = 0; i * 2 < cfg.size(); ++i) {
    const std::int64_t alpha = cfg[2 * i] >= params.j_cap ? sentinel : cfg[2 * i];
    acc = acc * alpha_radix + alpha;
    acc = acc * beta_radix + cfg[2 * i + 1];
  }
  return acc.str();
}

ConfigVector decode_config(const std::string& encoded, const RoundingParams& params) {
  namespace mp = boost::multiprecision;
  const mp::cpp_int alpha_radix =
      mp::cpp_int(params.n) * params.n * (mp::cpp_int(params.j_cap) + 1) + 1;
  const mp::cpp_int beta_radix = mp::cpp_int(params.k_cap) + 1;
  const std::int64_t sentinel =
      static_cast<std::int64_t>(params.n) * (static_cast<std::int64_t>(params.j_cap) + 1);

  mp::cpp_int acc(encoded);
  ConfigVector cfg(static_cast<std::size_t>(2 * params.num_terms), 0);
  for (int i = params.num_terms - 1; i >= 0; --i) {
    const std::int64_t beta = static_cast<std::int64_t>(acc % beta_radix);
    acc /= beta_radix;
    const std::int64_t alpha = static_cast<std::int64_t>(acc % alpha_radix);
    acc /= alpha_radix;
    cfg[static_cast<std::size_t>(2 * i)] =
        alpha == sentinel ? params.j_cap : static_cast<std::int32_t>(alpha);
    cfg[static_cast<std::size_t>(2 * i + 1)] = static_cast<std::int32_t>(beta);
  }
  return cfg;
}

}  // namespace eumax
