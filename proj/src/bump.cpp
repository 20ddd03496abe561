#include "landau/bump.hpp"

#include <cmath>

#include "landau/quadrature.hpp"

namespace landau {

double smooth_ramp(double u) {
  if (u <= 0.0) return 1.0;
  if (u >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - u * u));
}

double smooth_ramp_deriv(double u) {
  if (u <= 0.0 || u >= 1.0) return 0.0;
  const double d = 1.0 - u * u;
  return smooth_ramp(u) * (-2.0 * u / (d * d));
}

double bump(double omega) {
  const double w = std::abs(omega);
  if (w <= 0.5) return 1.0;
  if (w >= 1.0) return 0.0;
  return smooth_ramp(2.0 * w - 1.0);
}

double bump_deriv(double omega) {
  const double w = std::abs(omega);
  if (w <= 0.5 || w >= 1.0) return 0.0;
  const double d = 2.0 * smooth_ramp_deriv(2.0 * w - 1.0);
  return omega >= 0.0 ? d : -d;
}

double bump_mass() {
  static const double mass = [] {
    const double features[] = {-0.5, 0.5};
    QuadratureControl ctrl;
    ctrl.rel_tol = 1e-13;
    return integrate_smooth([](double w) { return bump(w); }, {-1.0, 1.0},
                            features, ctrl);
  }();
  return mass;
}

double lowpass_profile(double omega) { return bump(0.5 * omega); }

}  // namespace landau
