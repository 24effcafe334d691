// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace eumax {

/// Scaling/rounding constants for the configuration dynamic program, derived
/// from the element count n, term count L, and the rounding budget eps:
/// gamma = delta = eps/(L n) (times rounding_scale), J = ceil(-ln(eps/L)/gamma),
/// K = ceil(2 pi n / delta).
struct RoundingParams {
  int n = 0;
  int num_terms = 0;  // L
  double eps = 0.0;
  double rounding_scale = 1.0;
  double gamma = 0.0;
  double delta = 0.0;
  std::int32_t j_cap = 0;  // J
  std::int32_t k_cap = 0;  // K
};

RoundingParams derive_params(int n, int num_terms, double eps, double rounding_scale = 1.0);

/// Sentinel for a zero-modulus moment (or any floored value past J): the
/// scaled -ln|m| is effectively infinite and saturates every sum it enters.
inline constexpr std::int32_t kOverflow = INT32_MAX;

/// Per-element rounded vector <a_1, b_1, ..., a_L, b_L>: a_i is the floored
/// scaled -ln-modulus (kOverflow past J), b_i the floored scaled argument
/// with arg normalized into [0, 2 pi).
struct ElementVector {
  std::vector<std::int32_t> ab;  // interleaved, length 2L
  int num_terms() const { return static_cast<int>(ab.size() / 2); }
  std::int32_t a(int i) const { return ab[static_cast<std::size_t>(2 * i)]; }
  std::int32_t b(int i) const { return ab[static_cast<std::size_t>(2 * i + 1)]; }
};

ElementVector round_element(std::span<const std::complex<double>> moments,
                            const RoundingParams& params);

/// A configuration <alpha_1, beta_1, ..., alpha_L, beta_L>: alpha_i in [0, J]
/// with J meaning saturated, beta_i in [0, K] kept as an unreduced sum.
using ConfigVector = std::vector<std::int32_t>;

/// Saturating accumulate: alpha_i = min(J, alpha_i + a_i), beta_i += b_i.
void accumulate_saturating(ConfigVector& cfg, const ElementVector& delta,
                           std::span<const std::int32_t> alpha_caps);

/// sum_k c_k e^{-alpha_k gamma + i beta_k delta}; alpha_k = J scores as
/// e^{-J gamma} <= eps/L.
std::complex<double> score_config(const ConfigVector& cfg,
                                  std::span<const std::complex<double>> coeffs,
                                  const RoundingParams& params);

/// Mixed-radix packing of a configuration into a single nonnegative integer
/// (decimal string), using the sentinel value n(J+1) for saturated
/// coordinates; radix n^2(J+1)+1 for alphas and K+1 for betas. A documented
/// serialization used to cross-check the reachable-set enumeration against a
/// literal exact-sum formulation at small scale.
std::string encode_config(const ConfigVector& cfg, const RoundingParams& params);
ConfigVector decode_config(const std::string& encoded, const RoundingParams& params);

}  // namespace eumax
