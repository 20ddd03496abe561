#pragma once

#include <utility>
#include <vector>

#include "landau/spectral.hpp"

namespace landau {

/// Parameters of the multiplier exp(i t |xi|^a - t^gamma |xi|^a).
/// t = 0 is excluded; the t -> 0 limit is synthesize().
struct PropagatorParams {
  double a;
  double gamma;
  double t;

  PropagatorParams(double a_, double gamma_, double t_);
};

complexd landau_multiplier(double xi, const PropagatorParams& p);

complexd propagate_point(const SpectralFunction& spec, double x,
                         const PropagatorParams& p,
                         const QuadratureControl& ctrl = {});
GridFunction propagate_grid(const SpectralFunction& spec,
                            const SpatialGrid& grid, const PropagatorParams& p,
                            const QuadratureControl& ctrl = {});

/// Geometric time grid t_j = t_max * ratio^j with all values in (0, 1].
struct TimeGrid {
  double t_max;
  double t_min;
  double ratio;
  std::vector<double> values;  // strictly decreasing

  static TimeGrid geometric(double t_max, double t_min, double ratio);
};

/// max over the grid of |P^t f(x)|; a lower bound for the sup over t in (0,1).
double maximal(const SpectralFunction& spec, double x, const TimeGrid& tgrid,
               double a, double gamma, const QuadratureControl& ctrl = {});

/// Approach curve Gamma(x, t) with Gamma(x, 0) = x.
struct HoelderCurve {
  enum class Kind { vertical, power_shift, tabulated };

  Kind kind = Kind::vertical;
  double beta = 1.0;
  double anchor = 0.0;   // x0 of the declared ball
  double radius = 1.0;   // R of the declared ball
  std::vector<std::pair<double, double>> table;  // (t, offset), offset(0) = 0

  static HoelderCurve vertical(double anchor = 0.0, double radius = 1.0);
  static HoelderCurve power_shift(double beta, double anchor = 0.0,
                                  double radius = 1.0);
  static HoelderCurve tabulated(double beta,
                                std::vector<std::pair<double, double>> table,
                                double anchor = 0.0, double radius = 1.0);
};

double curve_eval(const HoelderCurve& curve, double x, double t);

/// Sampled Hoelder quotient sup |Gamma(x,t)-Gamma(x,t')| / |t-t'|^beta over
/// n random pairs; reported, not asserted.
double hoelder_constant(const HoelderCurve& curve, double x, int n_pairs,
                        unsigned seed = 0x5eed);

struct LiWangComparison {
  double lhs = 0.0;  // |Int e^{i Gamma(x,t) xi} piece(xi) dxi|
  double rhs = 0.0;  // sum_{|l|<=L} (1+|l|)^{-2} |Int e^{i(x+l/lambda) xi} ...|
};

/// Lattice-domination diagnostic in the regime t < lambda^{-1/beta}.
LiWangComparison li_wang_compare(const DyadicPiece& piece,
                                 const HoelderCurve& curve, double x, double t,
                                 int lattice_half_width,
                                 const QuadratureControl& ctrl = {});

}  // namespace landau
