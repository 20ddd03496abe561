#include "landau/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace landau {

PropagatorParams::PropagatorParams(double a_, double gamma_, double t_)
    : a(a_), gamma(gamma_), t(t_) {
  require(a > 0.0 && std::isfinite(a), "a must be positive");
  require(gamma > 0.0 && std::isfinite(gamma), "gamma must be positive");
  require(t > 0.0 && t <= 1.0, "t must lie in (0, 1]");
}

complexd landau_multiplier(double xi, const PropagatorParams& p) {
  const double r = std::pow(std::abs(xi), p.a);
  return std::polar(std::exp(-std::pow(p.t, p.gamma) * r), p.t * r);
}

namespace {

OscillationModel multiplier_model(const PropagatorParams& p) {
  OscillationModel m;
  m.t_phase = p.t;
  m.a_phase = p.a;
  m.t_damp = std::pow(p.t, p.gamma);
  m.a_damp = p.a;
  return m;
}

complexd bare_oscillatory_integral(const SpectralFunction& spec, double shift,
                                   const QuadratureControl& ctrl) {
  // Int e^{i shift xi} spec(xi) dxi, without the 1/2pi normalization.
  return kTwoPi * synthesize_weighted(spec, shift, nullptr, {}, ctrl);
}

}  // namespace

complexd propagate_point(const SpectralFunction& spec, double x,
                         const PropagatorParams& p,
                         const QuadratureControl& ctrl) {
  return synthesize_weighted(
      spec, x, [&p](double xi) { return landau_multiplier(xi, p); },
      multiplier_model(p), ctrl);
}

GridFunction propagate_grid(const SpectralFunction& spec,
                            const SpatialGrid& grid, const PropagatorParams& p,
                            const QuadratureControl& ctrl) {
  std::vector<complexd> values(grid.n_points);
  parallel_for(values.size(), [&](std::size_t i) {
    values[i] = propagate_point(spec, grid.x(static_cast<int>(i)), p, ctrl);
  });
  return {grid, std::move(values)};
}

TimeGrid TimeGrid::geometric(double t_max, double t_min, double ratio) {
  require(t_max > 0.0 && t_max <= 1.0, "t_max must lie in (0, 1]");
  require(t_min > 0.0 && t_min <= t_max, "t_min must lie in (0, t_max]");
  require(ratio > 0.0 && ratio < 1.0, "ratio must lie in (0, 1)");
  TimeGrid g{t_max, t_min, ratio, {}};
  for (double t = t_max; t >= t_min * (1.0 - 1e-12); t *= ratio)
    g.values.push_back(t);
  return g;
}

double maximal(const SpectralFunction& spec, double x, const TimeGrid& tgrid,
               double a, double gamma, const QuadratureControl& ctrl) {
  require(!tgrid.values.empty(), "empty time grid");
  double best = 0.0;
  for (double t : tgrid.values) {
    const PropagatorParams p(a, gamma, t);
    best = std::max(best, std::abs(propagate_point(spec, x, p, ctrl)));
  }
  return best;
}

HoelderCurve HoelderCurve::vertical(double anchor, double radius) {
  HoelderCurve c;
  c.kind = Kind::vertical;
  c.beta = 1.0;
  c.anchor = anchor;
  c.radius = radius;
  return c;
}

HoelderCurve HoelderCurve::power_shift(double beta, double anchor,
                                       double radius) {
  require(beta > 0.0 && beta <= 1.0, "beta must lie in (0, 1]");
  HoelderCurve c;
  c.kind = Kind::power_shift;
  c.beta = beta;
  c.anchor = anchor;
  c.radius = radius;
  return c;
}

HoelderCurve HoelderCurve::tabulated(
    double beta, std::vector<std::pair<double, double>> table, double anchor,
    double radius) {
  require(beta > 0.0 && beta <= 1.0, "beta must lie in (0, 1]");
  require(table.size() >= 2, "tabulated curve needs at least two entries");
  std::sort(table.begin(), table.end());
  require(table.front().first == 0.0 && table.front().second == 0.0,
          "tabulated curve must start at (0, 0)");
  HoelderCurve c;
  c.kind = Kind::tabulated;
  c.beta = beta;
  c.anchor = anchor;
  c.radius = radius;
  c.table = std::move(table);
  return c;
}

double curve_eval(const HoelderCurve& curve, double x, double t) {
  require(t >= 0.0 && t <= 1.0, "t must lie in [0, 1]");
  switch (curve.kind) {
    case HoelderCurve::Kind::vertical:
      return x;
    case HoelderCurve::Kind::power_shift:
      return x - std::pow(t, curve.beta);
    case HoelderCurve::Kind::tabulated: {
      const auto& tab = curve.table;
      if (t >= tab.back().first) return x + tab.back().second;
      auto hi = std::upper_bound(
          tab.begin(), tab.end(), t,
          [](double v, const auto& row) { return v < row.first; });
      const auto lo = hi - 1;
      const double w = (t - lo->first) / (hi->first - lo->first);
      return x + lo->second * (1.0 - w) + hi->second * w;
    }
  }
  return x;
}

double hoelder_constant(const HoelderCurve& curve, double x, int n_pairs,
                        unsigned seed) {
  require(n_pairs > 0, "need at least one sample pair");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < n_pairs; ++i) {
    const double t1 = uni(rng), t2 = uni(rng);
    if (t1 == t2) continue;
    const double num = std::abs(curve_eval(curve, x, t1) -
                                curve_eval(curve, x, t2));
    worst = std::max(worst, num / std::pow(std::abs(t1 - t2), curve.beta));
  }
  return worst;
}

LiWangComparison li_wang_compare(const DyadicPiece& piece,
                                 const HoelderCurve& curve, double x, double t,
                                 int lattice_half_width,
                                 const QuadratureControl& ctrl) {
  require(lattice_half_width >= 0, "lattice half-width must be nonnegative");
  const double lambda = piece.scale;
  if (!(t < std::pow(lambda, -1.0 / curve.beta)))
    throw std::invalid_argument("outside lemma regime");

  LiWangComparison cmp;
  if (piece.spectrum.is_zero()) return cmp;

  cmp.lhs = std::abs(
      bare_oscillatory_integral(piece.spectrum, curve_eval(curve, x, t), ctrl));
  for (int l = -lattice_half_width; l <= lattice_half_width; ++l) {
    const double shift = x + static_cast<double>(l) / lambda;
    const double weight = 1.0 / ((1.0 + std::abs(l)) * (1.0 + std::abs(l)));
    cmp.rhs +=
        weight * std::abs(bare_oscillatory_integral(piece.spectrum, shift, ctrl));
  }
  return cmp;
}

}  // namespace landau
