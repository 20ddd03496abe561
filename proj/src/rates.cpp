#include "landau/rates.hpp"

#include <algorithm>
#include <cmath>

#include "landau/parallel.hpp"

namespace landau {

double predicted_rate(double a, double gamma, const HoelderCurve& curve,
                      double delta) {
  require(delta >= 0.0 && std::isfinite(delta), "delta must be nonnegative");
  const bool vertical = curve.kind == HoelderCurve::Kind::vertical;
  const double m = std::min(1.0, gamma);
  const double cap = vertical ? m : std::min(curve.beta, gamma);
  if (delta == 0.0) return cap;  // Schwartz-data ceiling
  const double h = (a >= m && curve.beta >= m / a) ? delta * m / a
                                                   : curve.beta * delta;
  return std::min(h, cap);
}

RateExperiment make_experiment(SpectralFunction spec, HoelderCurve curve,
                               double a, double gamma, TimeGrid tgrid,
                               std::vector<double> x_samples, double delta) {
  require(a > 0.0 && std::isfinite(a), "a must be positive");
  require(gamma > 0.0 && std::isfinite(gamma), "gamma must be positive");
  RateExperiment exp{std::move(spec), curve,  a, gamma, delta, 0.0,
                     std::move(tgrid), std::move(x_samples)};
  exp.predicted_h = predicted_rate(a, gamma, curve, delta);
  return exp;
}

std::vector<std::pair<double, double>> error_samples(
    const RateExperiment& exp, double x, const QuadratureControl& ctrl) {
  if (std::abs(x - exp.curve.anchor) > exp.curve.radius)
    throw std::invalid_argument("x outside the declared ball");
  QuadratureControl tight = ctrl;
  tight.rel_tol = std::min(ctrl.rel_tol, 1e-11);

  const complexd fx = synthesize_point(exp.spec, x, tight);
  std::vector<std::pair<double, double>> samples;
  samples.reserve(exp.tgrid.values.size());
  for (double t : exp.tgrid.values) {
    const double gx = curve_eval(exp.curve, x, t);
    const PropagatorParams p(exp.a, exp.gamma, t);
    const double err = std::abs(propagate_point(exp.spec, gx, p, tight) - fx);
    if (err >= 1e-12) samples.emplace_back(t, err);
  }
  if (samples.empty()) throw std::invalid_argument("all below noise floor");
  return samples;
}

RateFit fit_rate(std::span<const std::pair<double, double>> samples) {
  require(samples.size() >= 3, "fit needs at least 3 samples");
  const auto n = static_cast<double>(samples.size());
  double sx = 0.0, sy = 0.0;
  for (const auto& [t, err] : samples) {
    require(t > 0.0 && err > 0.0, "fit needs positive samples");
    sx += std::log(t);
    sy += std::log(err);
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [t, err] : samples) {
    const double dx = std::log(t) - mx;
    const double dy = std::log(err) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  require(sxx > 0.0, "fit needs at least two distinct t values");
  RateFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  const double ss_res = std::max(0.0, syy - fit.slope * sxy);
  fit.r_squared = (syy > 0.0) ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
  fit.n_used = static_cast<int>(samples.size());
  return fit;
}

complexd limit_functional(const SpectralFunction& spec, double x,
                          std::optional<double> beta, double gamma, double a,
                          const QuadratureControl& ctrl) {
  require(gamma > 0.0 && std::isfinite(gamma), "gamma must be positive");
  require(a > 0.0 && std::isfinite(a), "a must be positive");
  std::function<complexd(double)> q;
  if (!beta || *beta > gamma) {
    q = [a](double xi) -> complexd {
      return {std::pow(std::abs(xi), a), 0.0};
    };
  } else if (*beta < gamma) {
    q = [](double xi) -> complexd { return {xi, 0.0}; };
  } else {
    q = [a](double xi) -> complexd {
      return {std::pow(std::abs(xi), a), xi};
    };
  }
  return synthesize_weighted(spec, x, q, {}, ctrl);
}

std::vector<RateRow> rate_report(const RateExperiment& exp,
                                 const QuadratureControl& ctrl) {
  std::vector<RateRow> rows(exp.x_samples.size());
  parallel_for(rows.size(), [&](std::size_t i) {
    RateRow row;
    row.x = exp.x_samples[i];
    row.predicted_h = exp.predicted_h;

    auto samples = error_samples(exp, row.x, ctrl);  // t descending
    const std::size_t window = 12;
    const std::size_t start =
        samples.size() > window ? samples.size() - window : 0;
    const std::span<const std::pair<double, double>> kept(
        samples.data() + start, samples.size() - start);
    row.fit = fit_rate(kept);

    // o-consistency: err/t^h falls across the final decade iff the decade
    // slope exceeds the predicted exponent.
    const double t_low = samples.back().first;
    std::vector<std::pair<double, double>> decade;
    for (const auto& s : samples)
      if (s.first <= 10.0 * t_low) decade.push_back(s);
    const RateFit decade_fit =
        decade.size() >= 3
            ? fit_rate(std::span<const std::pair<double, double>>(decade))
            : row.fit;
    row.o_consistent = decade_fit.slope > row.predicted_h;
    rows[i] = row;
  });
  return rows;
}

}  // namespace landau
