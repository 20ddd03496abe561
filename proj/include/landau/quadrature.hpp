#pragma once

#include <functional>
#include <span>
#include <vector>

#include "landau/common.hpp"

namespace landau {

/// Accuracy and work-budget knobs for the panel quadrature.
struct QuadratureControl {
  double rel_tol = 1e-9;
  double abs_tol = 0.0;            // extra absolute floor on the doubling test
  int max_refinements = 10;        // panel-doubling rounds
  std::size_t panel_budget = 4'000'000;
  int min_panels = 8;              // per feature gap, scaled by gap width
};

/// Oscillation/damping model of an integrand of the form
///   f(xi) = amplitude(xi) * exp(i*(linear_rate*xi + t_phase*|xi|^a_phase))
///           * exp(-t_damp*|xi|^a_damp).
/// The planner caps the phase change per panel at pi/2 and prunes panels on
/// which the damping factor underflows.
struct OscillationModel {
  double linear_rate = 0.0;  // |x| of the e^{i x xi} factor
  double t_phase = 0.0;      // coefficient of |xi|^a_phase in the phase
  double a_phase = 1.0;
  double t_damp = 0.0;       // coefficient of |xi|^a_damp in exp(-...)
  double a_damp = 1.0;
};

struct IntegralResult {
  complexd value{0.0, 0.0};
  double error_estimate = 0.0;  // |last doubling difference|
  double l1_estimate = 0.0;     // approximate integral of |f|, noise-floor scale
  int refinements = 0;
  std::size_t panels = 0;
};

/// Gauss-Legendre nodes/weights on [-1, 1], computed once per order.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_rule(int order = 15);

/// Panel breakpoints over `domain`: splits at 0 and at `features`, then
/// subdivides every gap so the modeled phase change per panel stays <= pi/2.
/// Gaps on which the damping exponent exceeds ~746 everywhere are dropped.
/// Throws when the plan would exceed ctrl.panel_budget.
std::vector<double> plan_panels(Interval domain, const OscillationModel& model,
                                std::span<const double> features,
                                const QuadratureControl& ctrl);

/// Adaptive panel integration with doubling validation: integrates on the
/// plan, halves every panel and repeats until two successive results agree to
/// rel_tol (relative, with a roundoff floor of ~1e-15 of the L1 mass).
/// Throws std::runtime_error when the budget is exhausted before agreement.
IntegralResult integrate_oscillatory(const std::function<complexd(double)>& f,
                                     Interval domain,
                                     const OscillationModel& model,
                                     std::span<const double> features,
                                     const QuadratureControl& ctrl = {});

/// Real-valued convenience wrapper (non-oscillatory integrands).
double integrate_smooth(const std::function<double(double)>& f, Interval domain,
                        std::span<const double> features,
                        const QuadratureControl& ctrl = {});

/// Integral over the whole line of a decaying integrand: integrates the core
/// interval, then doubles outward in shells until a shell contributes less
/// than the tolerance. Throws when no decay is seen by max_radius.
IntegralResult integrate_decaying(const std::function<complexd(double)>& f,
                                  Interval core, const OscillationModel& model,
                                  std::span<const double> features,
                                  const QuadratureControl& ctrl = {},
                                  double max_radius = 1e9);

}  // namespace landau
