#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "landau/propagator.hpp"

namespace landau {

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  int n_used = 0;
};

/// Theory exponent for the fitted decay: the Schwartz-data ceilings
/// min{1,gamma} (vertical) and min{beta,gamma} (curves) when delta = 0, and
/// the regularity-driven regions delta*min{1,gamma}/a resp. beta*delta
/// (capped at min{beta,gamma}) when delta > 0.
double predicted_rate(double a, double gamma, const HoelderCurve& curve,
                      double delta);

struct RateExperiment {
  SpectralFunction spec;
  HoelderCurve curve;
  double a = 2.0;
  double gamma = 1.0;
  double delta = 0.0;  // extra-regularity bookkeeping, metadata only
  double predicted_h = 0.0;
  TimeGrid tgrid;
  std::vector<double> x_samples;
};

RateExperiment make_experiment(SpectralFunction spec, HoelderCurve curve,
                               double a, double gamma, TimeGrid tgrid,
                               std::vector<double> x_samples,
                               double delta = 0.0);

/// (t, |P^t f(Gamma(x,t)) - f(x)|) over the grid; entries below the 1e-12
/// noise floor are dropped. Throws when nothing survives.
std::vector<std::pair<double, double>> error_samples(
    const RateExperiment& exp, double x, const QuadratureControl& ctrl = {});

/// Ordinary least squares on (log t, log err).
RateFit fit_rate(std::span<const std::pair<double, double>> samples);

/// (1/2pi) Int e^{i x xi} Q(xi) f_hat(xi) dxi with Q from the small-t limit:
/// xi (beta < gamma), |xi|^a (beta > gamma or vertical), i xi + |xi|^a
/// (beta = gamma). Pass beta = nullopt for vertical approach.
complexd limit_functional(const SpectralFunction& spec, double x,
                          std::optional<double> beta, double gamma, double a,
                          const QuadratureControl& ctrl = {});

struct RateRow {
  double x = 0.0;
  RateFit fit;
  double predicted_h = 0.0;
  bool o_consistent = false;  // err/t^h decreasing across the final decade
};

/// Per-x slope fits over the final 12 above-floor samples, plus the
/// o-consistency flag from the final-decade slope.
std::vector<RateRow> rate_report(const RateExperiment& exp,
                                 const QuadratureControl& ctrl = {});

}  // namespace landau
