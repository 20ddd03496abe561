#include "landau/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "landau/bump.hpp"
#include "landau/parallel.hpp"

namespace landau {

int k0_index(double a, double gamma) {
  require(a > 0.0 && std::isfinite(a), "a must be positive");
  if (!(gamma > 1.0)) throw std::invalid_argument("construction requires gamma>1");
  const double denom = (a == 1.0) ? (gamma - 1.0) : std::min(a, 1.0) * (gamma - 1.0);
  return 2 * static_cast<int>(std::ceil(gamma / denom - 1e-12));
}

CounterexampleSpec::CounterexampleSpec(double theta_, double a_, double gamma_)
    : theta(theta_), a(a_), gamma(gamma_) {
  require(theta > 0.0 && theta < 0.01, "theta must lie in (0, 1/100)");
  k0 = k0_index(a, gamma);
  case_id = (a == 1.0) ? 2 : 1;
  a0 = (case_id == 2) ? 1.0 : std::min({a, 1.0, 1.0 / std::abs(a - 1.0)});
}

double CounterexampleSpec::pinned_interval_end() const {
  return a0 * std::pow(theta, k0 - 1);
}

SpectralFunction f_theta(const CounterexampleSpec& spec) {
  const double scale = std::pow(spec.theta, spec.k0);
  return SpectralFunction::scaled_bump(scale, scale, 1.0 / spec.theta);
}

double pinned_time(double x, const CounterexampleSpec& spec) {
  const double end = spec.pinned_interval_end();
  if (!(x > 0.0 && x <= end * (1.0 + 1e-12)))
    throw std::invalid_argument("x outside the pinned interval");
  if (spec.case_id == 2) return x;
  return x * std::pow(spec.theta, spec.a * (spec.k0 + 1) - 1.0 - spec.k0) /
         spec.a;
}

PhaseDiagnostics phase_diagnostics(double xi, double x,
                                   const CounterexampleSpec& spec) {
  require(std::abs(xi) <= 1.0, "xi outside [-1, 1]");
  const double t = pinned_time(x, spec);
  const double theta = spec.theta;
  const double a = spec.a;
  PhaseDiagnostics d;
  if (spec.case_id == 2) {
    const double inv_k0 = std::pow(theta, -static_cast<double>(spec.k0));
    d.phi = (x - t) * xi * inv_k0;
    d.psi = std::pow(t, spec.gamma) * (inv_k0 / theta - xi * inv_k0);
    d.remainder = 0.0;
    return d;
  }
  const double inv_pow = std::pow(theta, -a * (spec.k0 + 1));
  // (1 - theta xi)^a - 1, kept in expm1/log1p form to preserve the small
  // difference that survives the pinned-time cancellation.
  const double rel = std::expm1(a * std::log1p(-theta * xi));
  d.phi = x * xi * std::pow(theta, -static_cast<double>(spec.k0)) +
          t * rel * inv_pow;
  d.psi = std::pow(t, spec.gamma) * (rel + 1.0) * inv_pow;
  const double taylor_rel =
      -a * theta * xi + 0.5 * a * (a - 1.0) * theta * theta * xi * xi;
  d.remainder = t * (rel - taylor_rel) * inv_pow;
  return d;
}

double f_theta_lp_mass(const CounterexampleSpec& spec, double p,
                       const QuadratureControl& ctrl) {
  require(p >= 1.0 && std::isfinite(p), "p must be at least 1");
  const SpectralFunction spectrum = f_theta(spec);
  QuadratureControl inner = ctrl;
  inner.rel_tol = std::max(ctrl.rel_tol, 1e-8);

  // |f_theta(x)| = (1/2pi)|G(x theta^{-k0})| with G the bump transform, so
  // the mass concentrates on |x| <= Y theta^{k0}; the 1/x^2 envelope makes
  // the truncated tail ~ Y^{1-2p}.
  const double y_cut = 60.0;
  const double x_cut = y_cut * std::pow(spec.theta, spec.k0);
  OscillationModel model;
  model.linear_rate = std::pow(spec.theta, -static_cast<double>(spec.k0));
  const auto f = [&](double x) -> complexd {
    return {std::pow(std::abs(synthesize_point(spectrum, x, inner)), p), 0.0};
  };
  return integrate_oscillatory(f, {-x_cut, x_cut}, model, {}, ctrl)
      .value.real();
}

CounterexampleReport counterexample_sweep(const CounterexampleSpec& spec,
                                          int n_x, int n_xi,
                                          const QuadratureControl& ctrl) {
  require(n_x >= 2 && n_xi >= 3, "sweep needs at least 2 x and 3 xi samples");
  const SpectralFunction spectrum = f_theta(spec);
  const double end = spec.pinned_interval_end();

  CounterexampleReport rep;
  rep.rows.resize(n_x);
  parallel_for(rep.rows.size(), [&](std::size_t i) {
    CounterexampleRow row;
    row.x = end * static_cast<double>(i + 1) / n_x;
    row.t_pinned = pinned_time(row.x, spec);
    for (int j = 0; j < n_xi; ++j) {
      const double xi = -1.0 + 2.0 * j / (n_xi - 1);
      const PhaseDiagnostics d = phase_diagnostics(xi, row.x, spec);
      row.phi_max = std::max(row.phi_max, std::abs(d.phi));
      row.psi_max = std::max(row.psi_max, std::abs(d.psi));
    }
    // grid maximal over a pinned window; values[0] is the pinned time itself
    const TimeGrid window = TimeGrid::geometric(
        row.t_pinned, row.t_pinned / 4.0, std::pow(2.0, -0.25));
    row.maximal = maximal(spectrum, row.x, window, spec.a, spec.gamma, ctrl);
    row.f_theta_abs = std::abs(synthesize_point(spectrum, row.x, ctrl));
    rep.rows[i] = row;
  });

  rep.bump_integral = bump_mass();
  rep.min_pinned_modulus = std::numeric_limits<double>::infinity();
  rep.min_outer_gap = std::numeric_limits<double>::infinity();
  for (const CounterexampleRow& row : rep.rows) {
    rep.phi_max = std::max(rep.phi_max, row.phi_max);
    rep.psi_max = std::max(rep.psi_max, row.psi_max);
    const PropagatorParams p(spec.a, spec.gamma, row.t_pinned);
    const double pinned_mod =
        std::abs(propagate_point(spectrum, row.x, p, ctrl));
    rep.min_pinned_modulus = std::min(rep.min_pinned_modulus, pinned_mod);
    if (row.x >= 0.5 * end)
      rep.min_outer_gap =
          std::min(rep.min_outer_gap, row.maximal - row.f_theta_abs);
  }
  rep.c0 = std::cos(rep.phi_max) * std::exp(-rep.psi_max) *
           rep.bump_integral / kTwoPi;
  return rep;
}

SpectralFunction f_sharp(double R) {
  require(R > 0.0 && std::isfinite(R), "R must be positive");
  return SpectralFunction::interval_indicator(R, R + 1.0);
}

double solve_t0(double R, double a, double gamma) {
  require(R > 0.0 && std::isfinite(R), "R must be positive");
  require(a > 0.0 && std::isfinite(a), "a must be positive");
  require(gamma > 0.0 && std::isfinite(gamma), "gamma must be positive");
  const double target = std::pow(R, -2.0 * a) * 1e-4;
  if (!(target > 0.0 && target < 2.0))
    throw std::invalid_argument("no bracket: R^{-2a}/10^4 must lie in (0, 2)");
  const auto h = [gamma](double t) {
    return t * t + std::pow(t, 2.0 * gamma);
  };
  // bisection in log t; h is strictly increasing on (0, 1)
  double lo = -700.0, hi = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (h(std::exp(mid)) < target ? lo : hi) = mid;
  }
  return std::exp(0.5 * (lo + hi));
}

SharpnessSpec::SharpnessSpec(double R_, double a_, double gamma_)
    : R(R_), a(a_), gamma(gamma_), t0(solve_t0(R_, a_, gamma_)) {}

complexd first_order_integral(double x, const SharpnessSpec& spec,
                              const QuadratureControl& ctrl) {
  if (!(std::abs(x) < 1e-3)) throw std::invalid_argument("outside paper ball");
  const complexd coeff{-std::pow(spec.t0, spec.gamma), spec.t0};
  OscillationModel model;
  model.linear_rate = std::abs(x);
  const auto f = [&](double xi) -> complexd {
    return coeff * std::pow(xi, spec.a) * std::polar(1.0, x * xi);
  };
  return integrate_oscillatory(f, {spec.R, spec.R + 1.0}, model, {}, ctrl)
      .value;
}

double taylor_tail_bound(const SharpnessSpec& spec) {
  const double R = spec.R;
  const double a = spec.a;
  if (!(std::pow((R + 1.0) / R, a) <= 2.0))
    throw std::invalid_argument("R too small: need (R+1)^a/R^a <= 2");
  const double h = spec.t0 * spec.t0 + std::pow(spec.t0, 2.0 * spec.gamma);
  const double log_h = std::log(h);
  const double log_ratio = std::log1p(1.0 / R);
  double sum = 0.0;
  for (int j = 2; j < 400; ++j) {
    // log of Int_R^{R+1} xi^{aj} dxi = (R^{aj+1}((1+1/R)^{aj+1}-1))/(aj+1)
    const double q = a * j + 1.0;
    const double log_integral =
        q * std::log(R) + std::log(std::expm1(q * log_ratio)) - std::log(q);
    const double term =
        std::exp(0.5 * j * log_h + log_integral - std::lgamma(j + 1.0));
    sum += term;
    if (term < 1e-18) break;
  }
  return sum;
}

}  // namespace landau
