#pragma once

#include <vector>

#include "landau/propagator.hpp"
#include "landau/spectral.hpp"

namespace landau {

/// k0 = 2*ceil(gamma / (min{a,1}(gamma-1))) for a != 1, and
/// k0 = 2*ceil(gamma / (gamma-1)) for a = 1. Requires gamma > 1.
int k0_index(double a, double gamma);

/// Parameters of the divergence construction f_theta.
struct CounterexampleSpec {
  double theta;
  double a;
  double gamma;
  int k0;        // derived
  double a0;     // min{a, 1, 1/|a-1|}, case one only
  int case_id;   // 1: a != 1, 2: a = 1

  CounterexampleSpec(double theta_, double a_, double gamma_);

  /// Right endpoint of the pinned x-interval (0, a0 theta^{k0-1}].
  double pinned_interval_end() const;
};

/// Spectrum theta^{k0} g(theta^{k0} w + 1/theta), supported on
/// [(-theta-1)/theta^{k0+1}, (theta-1)/theta^{k0+1}].
SpectralFunction f_theta(const CounterexampleSpec& spec);

/// The time pinned to x: x theta^{a(k0+1)-1-k0}/a (case one) or x (case two).
/// x must lie in the pinned interval.
double pinned_time(double x, const CounterexampleSpec& spec);

struct PhaseDiagnostics {
  double phi = 0.0;        // oscillatory phase at the pinned time
  double psi = 0.0;        // damping exponent at the pinned time
  double remainder = 0.0;  // t * R^(2), computed as an exact difference
};

/// Phase/damping at bump coordinate |xi| <= 1 and pinned time t(x).
PhaseDiagnostics phase_diagnostics(double xi, double x,
                                   const CounterexampleSpec& spec);

/// ||f_theta||_p^p by spatial quadrature.
double f_theta_lp_mass(const CounterexampleSpec& spec, double p,
                       const QuadratureControl& ctrl = {});

struct CounterexampleRow {
  double x = 0.0;
  double t_pinned = 0.0;
  double phi_max = 0.0;      // max |Phi| over the xi sweep at this x
  double psi_max = 0.0;
  double maximal = 0.0;      // grid maximal around the pinned time
  double f_theta_abs = 0.0;  // |f_theta(x)|
};

struct CounterexampleReport {
  std::vector<CounterexampleRow> rows;
  double phi_max = 0.0;  // sweep maxima
  double psi_max = 0.0;
  double bump_integral = 0.0;
  double c0 = 0.0;  // cos(phi_max) e^{-psi_max} (1/2pi) Int g
  double min_pinned_modulus = 0.0;  // min_x |P^{t(x)} f_theta(x)|
  double min_outer_gap = 0.0;       // min over outer half of maximal - |f_theta|
};

/// Sweeps the pinned x-interval: phase diagnostics on a xi-grid, the
/// propagator modulus at the pinned time, and a pinned-window grid maximal.
CounterexampleReport counterexample_sweep(const CounterexampleSpec& spec,
                                          int n_x = 24, int n_xi = 201,
                                          const QuadratureControl& ctrl = {});

/// Spectrum chi_[R, R+1].
SpectralFunction f_sharp(double R);

/// Root of h(t) = t^2 + t^{2 gamma} = R^{-2a}/10^4 on (0,1), by bisection.
double solve_t0(double R, double a, double gamma);

struct SharpnessSpec {
  double R;
  double a;
  double gamma;
  double t0;  // derived root

  SharpnessSpec(double R_, double a_, double gamma_);
};

/// Int_R^{R+1} e^{i x xi} (i t0 |xi|^a - t0^gamma |xi|^a) dxi for
/// |x| < 1/1000.
complexd first_order_integral(double x, const SharpnessSpec& spec,
                              const QuadratureControl& ctrl = {});

/// Majorant of the j >= 2 Taylor tail:
/// sum_j h(t0)^{j/2} Int_R^{R+1} |xi|^{a j} dxi / j!.
double taylor_tail_bound(const SharpnessSpec& spec);

}  // namespace landau
