// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace eumax {

using Complex = std::complex<double>;

/// A nonnegative random element weight. Immutable after construction; all
/// invariants are checked by the factory functions.
class Distribution {
 public:
  struct DiscreteFinite {
    std::vector<double> values;  // >= 0
    std::vector<double> probs;   // each in (0,1], sum to 1 within 1e-12
  };
  struct Poisson {
    double lambda;  // > 0
  };
  struct Exponential {
    double rate;  // > 0
  };
  struct Gaussian {
    double mean;
    double stddev;  // > 0; Pr(w < 0) must be <= 1e-6
  };

  /// Default-constructed weight is the point mass at zero.
  Distribution() : v_(DiscreteFinite{{0.0}, {1.0}}) {}

  static Distribution discrete(std::vector<double> values, std::vector<double> probs);
  static Distribution point_mass(double value);
  static Distribution poisson(double lambda);
  static Distribution exponential(double rate);
  static Distribution gaussian(double mean, double stddev);

  bool is_discrete_finite() const { return std::holds_alternative<DiscreteFinite>(v_); }
  bool is_continuous() const {
    return std::holds_alternative<Exponential>(v_) || std::holds_alternative<Gaussian>(v_);
  }

  const DiscreteFinite* as_discrete() const { return std::get_if<DiscreteFinite>(&v_); }
  const Poisson* as_poisson() const { return std::get_if<Poisson>(&v_); }
  const Exponential* as_exponential() const { return std::get_if<Exponential>(&v_); }
  const Gaussian* as_gaussian() const { return std::get_if<Gaussian>(&v_); }

  double mean() const;

  /// Seeded counter-based sample; draw `counter` of stream `stream`.
  double sample(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) const;

  std::string describe() const;

 private:
  template <typename T>
  explicit Distribution(T v) : v_(std::move(v)) {}
  std::variant<DiscreteFinite, Poisson, Exponential, Gaussian> v_;
};

/// A complex moment E[phi^w] together with how it was obtained and a bound on
/// its absolute error.
struct Moment {
  enum class Method { closed_form, direct_sum, quadrature };
  Complex value;
  Method method = Method::closed_form;
  double abs_error_bound = 0.0;
};

/// E[phi^w] for |phi| <= 1. Uses the principal branch of log(phi); rejects
/// phi = 0 for the Poisson/Exponential/Gaussian variants and rejects inputs
/// that make the integral diverge.
Moment moment(const Distribution& dist, Complex phi);

/// E[e^{s w}] for an exponent s with Re(s) <= 0. This is the branch-free entry
/// point: exponential-sum terms carry their exponent directly, so evaluating a
/// certified sum and taking its expectation use the same function of w.
Moment moment_from_exponent(const Distribution& dist, Complex s);

/// Composite Gauss-Legendre approximation of E[phi^w] = integral of
/// phi^x density(x) over [a,b]. `subintervals` panels, `degree` nodes each.
/// The reported abs_error_bound is the observed change between the
/// `subintervals` and 2x`subintervals` rules.
Moment moment_quadrature(const std::function<double(double)>& density, double a, double b,
                         Complex phi, int subintervals, int degree);

/// Same integral with an explicit exponent s (integrand e^{s x} density(x)).
Moment moment_quadrature_from_exponent(const std::function<double(double)>& density, double a,
                                       double b, Complex s, int subintervals, int degree);

/// Truncation interval [0, b] whose tail mass is below 1e-10, for the
/// continuous variants.
std::pair<double, double> default_support(const Distribution& dist);

}  // namespace eumax
