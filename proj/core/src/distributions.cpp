// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#include "eumax/distributions.hpp"

#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

#include "eumax/errors.hpp"
#include "eumax/rng.hpp"

namespace eumax {

namespace {

constexpr double kProbSumTol = 1e-12;
constexpr double kPhiModulusTol = 1e-9;

double standard_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

}  // namespace

Distribution Distribution::discrete(std::vector<double> values, std::vector<double> probs) {
  if (values.empty() || values.size() != probs.size())
    throw InvalidInput("discrete distribution needs matching nonempty values/probs");
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] >= 0.0)) throw InvalidInput("discrete distribution values must be >= 0");
    if (!(probs[i] > 0.0 && probs[i] <= 1.0))
      throw InvalidInput("discrete distribution probabilities must lie in (0,1]");
    sum += probs[i];
  }
  if (std::abs(sum - 1.0) > kProbSumTol)
    throw InvalidInput("discrete distribution probabilities must sum to 1");
  return Distribution(DiscreteFinite{std::move(values), std::move(probs)});
}

Distribution Distribution::point_mass(double value) { return discrete({value}, {1.0}); }

Distribution Distribution::poisson(double lambda) {
  if (!(lambda > 0.0)) throw InvalidInput("poisson lambda must be positive");
  return Distribution(Poisson{lambda});
}

Distribution Distribution::exponential(double rate) {
  if (!(rate > 0.0)) throw InvalidInput("exponential rate must be positive");
  return Distribution(Exponential{rate});
}

Distribution Distribution::gaussian(double mean, double stddev) {
  if (!(stddev > 0.0)) throw InvalidInput("gaussian stddev must be positive");
  // Positive support requirement: Pr(w < 0) <= 1e-6.
  if (standard_normal_cdf(-mean / stddev) > 1e-6)
    throw InvalidInput("gaussian rejected: Pr(w < 0) exceeds 1e-6");
  return Distribution(Gaussian{mean, stddev});
}

double Distribution::mean() const {
  if (const auto* d = as_discrete()) {
    double m = 0.0;
    for (std::size_t i = 0; i < d->values.size(); ++i) m += d->values[i] * d->probs[i];
    return m;
  }
  if (const auto* p = as_poisson()) return p->lambda;
  if (const auto* e = as_exponential()) return 1.0 / e->rate;
  return as_gaussian()->mean;
}

double Distribution::sample(std::uint64_t seed, std::uint64_t stream,
                            std::uint64_t counter) const {
  const double u = rng::uniform01(seed, stream, 2 * counter);
  if (const auto* d = as_discrete()) {
    double acc = 0.0;
    for (std::size_t i = 0; i < d->values.size(); ++i) {
      acc += d->probs[i];
      if (u <= acc) return d->values[i];
    }
    return d->values.back();
  }
  if (const auto* p = as_poisson()) {
    // CDF inversion; fine for desk-scale lambda.
    double pk = std::exp(-p->lambda);
    double acc = pk;
    int k = 0;
    while (u > acc && k < 4000) {
      ++k;
      pk *= p->lambda / k;
      acc += pk;
    }
    return k;
  }
  if (const auto* e = as_exponential()) return -std::log1p(-u) / e->rate;
  const auto* g = as_gaussian();
  // Box-Muller on two counter draws; negative tail (mass <= 1e-6) clamps to 0.
  const double u2 = rng::uniform01(seed, stream, 2 * counter + 1);
  const double z = std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * u2);
  return std::max(0.0, g->mean + g->stddev * z);
}

std::string Distribution::describe() const {
  std::ostringstream os;
  if (const auto* d = as_discrete()) {
    os << "discrete{";
    for (std::size_t i = 0; i < d->values.size(); ++i) {
      if (i) os << ", ";
      os << d->values[i] << ":" << d->probs[i];
    }
    os << "}";
  } else if (const auto* p = as_poisson()) {
    os << "poisson(" << p->lambda << ")";
  } else if (const auto* e = as_exponential()) {
    os << "exponential(" << e->rate << ")";
  } else {
    const auto* g = as_gaussian();
    os << "gaussian(" << g->mean << ", " << g->stddev << ")";
  }
  return os.str();
}

Moment moment_from_exponent(const Distribution& dist, Complex s) {
  if (s.real() > 1e-12)
    throw InvalidInput("moment exponent must have Re(s) <= 0 (|phi| <= 1)");
  if (const auto* d = dist.as_discrete()) {
    Complex acc = 0.0;
    for (std::size_t i = 0; i < d->values.size(); ++i)
      acc += d->probs[i] * std::exp(s * d->values[i]);
    return {acc, Moment::Method::direct_sum, 0.0};
  }
  if (const auto* p = dist.as_poisson()) {
    // E[phi^w] = e^{lambda (phi - 1)} with phi = e^s; depends on e^s only
    // because the support is integral.
    return {std::exp(p->lambda * (std::exp(s) - 1.0)), Moment::Method::closed_form, 0.0};
  }
  if (const auto* e = dist.as_exponential()) {
    if (s.real() >= e->rate)
      throw InvalidInput("exponential moment diverges: Re(ln phi) >= rate");
    return {e->rate / (e->rate - s), Moment::Method::closed_form, 0.0};
  }
  const auto* g = dist.as_gaussian();
  return {std::exp(g->mean * s + 0.5 * g->stddev * g->stddev * s * s),
          Moment::Method::closed_form, 0.0};
}

Moment moment(const Distribution& dist, Complex phi) {
  if (std::abs(phi) > 1.0 + kPhiModulusTol)
    throw InvalidInput("moment requires |phi| <= 1; the moment may diverge otherwise");
  if (const auto* d = dist.as_discrete()) {
    if (phi == Complex(0.0, 0.0)) {
      // phi^0 = 1, phi^v = 0 for v > 0: the moment is Pr(w = 0).
      double p0 = 0.0;
      for (std::size_t i = 0; i < d->values.size(); ++i)
        if (d->values[i] == 0.0) p0 += d->probs[i];
      return {p0, Moment::Method::direct_sum, 0.0};
    }
    return moment_from_exponent(dist, std::log(phi));
  }
  if (phi == Complex(0.0, 0.0))
    throw InvalidInput("phi = 0 is not accepted for this distribution variant");
  Complex s = std::log(phi);  // principal branch
  if (s.real() > 0.0) s.real(0.0);  // |phi| within tolerance of 1; clamp
  return moment_from_exponent(dist, s);
}

namespace {

struct GlTableDeleter {
  void operator()(gsl_integration_glfixed_table* t) const { gsl_integration_glfixed_table_free(t); }
};

Complex composite_gl(const std::function<double(double)>& f_density, Complex s, double a, double b,
                     int panels, gsl_integration_glfixed_table* table, std::size_t degree) {
  Complex acc = 0.0;
  const double width = (b - a) / panels;
  for (int m = 0; m < panels; ++m) {
    const double lo = a + m * width;
    const double hi = lo + width;
    for (std::size_t i = 0; i < degree; ++i) {
      double xi, wi;
      gsl_integration_glfixed_point(lo, hi, i, &xi, &wi, table);
      acc += wi * f_density(xi) * std::exp(s * xi);
    }
  }
  return acc;
}

}  // namespace

Moment moment_quadrature_from_exponent(const std::function<double(double)>& density, double a,
                                       double b, Complex s, int subintervals, int degree) {
  if (subintervals <= 0) throw InvalidInput("quadrature needs a positive subinterval count");
  if (degree <= 0) throw InvalidInput("quadrature needs a positive degree");
  if (!(b > a)) throw InvalidInput("quadrature needs b > a");
  if (s.real() > 1e-12) throw InvalidInput("quadrature exponent must have Re(s) <= 0");

  std::unique_ptr<gsl_integration_glfixed_table, GlTableDeleter> table(
      gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(degree)));

  // Mass check at the finer rule; the density must be a probability density
  // on [a,b] up to truncation.
  const Complex mass =
      composite_gl(density, Complex(0.0, 0.0), a, b, 2 * subintervals, table.get(),
                   static_cast<std::size_t>(degree));
  if (std::abs(mass.real() - 1.0) > 1e-6)
    throw InvalidInput("quadrature density does not integrate to 1 on [a,b]");

  const Complex coarse = composite_gl(density, s, a, b, subintervals, table.get(),
                                      static_cast<std::size_t>(degree));
  const Complex fine = composite_gl(density, s, a, b, 2 * subintervals, table.get(),
                                    static_cast<std::size_t>(degree));
  // Richardson-style surrogate for the unobservable derivative-based bound.
  return {fine, Moment::Method::quadrature, std::abs(fine - coarse)};
}

Moment moment_quadrature(const std::function<double(double)>& density, double a, double b,
                         Complex phi, int subintervals, int degree) {
  if (std::abs(phi) > 1.0 + kPhiModulusTol) throw InvalidInput("quadrature requires |phi| <= 1");
  if (phi == Complex(0.0, 0.0)) throw InvalidInput("phi = 0 is not accepted for quadrature");
  Complex s = std::log(phi);
  if (s.real() > 0.0) s.real(0.0);
  return moment_quadrature_from_exponent(density, a, b, s, subintervals, degree);
}

std::pair<double, double> default_support(const Distribution& dist) {
  constexpr double kTailMass = 1e-10;
  if (const auto* e = dist.as_exponential()) return {0.0, -std::log(kTailMass) / e->rate};
  if (const auto* g = dist.as_gaussian()) {
    // z with upper-tail mass 1e-10 is ~6.36.
    const double z = 6.4;
    return {std::max(0.0, g->mean - z * g->stddev), g->mean + z * g->stddev};
  }
  if (const auto* d = dist.as_discrete()) {
    const auto [lo, hi] = std::minmax_element(d->values.begin(), d->values.end());
    return {*lo, *hi};
  }
  throw InvalidInput("default_support: no truncation rule for this variant");
}

}  // namespace eumax
