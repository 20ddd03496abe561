#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "landau/common.hpp"
#include "landau/quadrature.hpp"

namespace landau {

enum class SpectralKind {
  gaussian,            // A * exp(-alpha xi^2) * exp(-i c xi)
  interval_indicator,  // A * chi_[lo,hi]
  scaled_bump,         // A * g(scale*xi + shift)
  dyadic_piece,        // base * dyadic window_k
  lowpass,             // base * psi_hat
  highpass,            // base * (1 - psi_hat)
  sampled,             // complex samples on a uniform frequency grid
};

/// Frequency-side description of an initial datum. Immutable; evaluation
/// outside the stated support of a compactly supported kind is exactly zero.
class SpectralFunction {
 public:
  static SpectralFunction gaussian(double amplitude, double alpha,
                                   double modulation = 0.0);
  static SpectralFunction interval_indicator(double lo, double hi,
                                             double amplitude = 1.0);
  static SpectralFunction scaled_bump(double amplitude, double scale,
                                      double shift);
  static SpectralFunction sampled(double xi_min, double dxi,
                                  std::vector<complexd> values);
  static SpectralFunction zero();

  SpectralFunction lowpass() const;
  SpectralFunction highpass() const;
  SpectralFunction dyadic_piece(int k) const;

  complexd operator()(double xi) const;

  SpectralKind kind() const { return kind_; }
  const std::vector<double>& params() const { return params_; }
  /// Integration domain: exact support for compact kinds, decay radius else.
  Interval hull() const { return hull_; }
  bool compact_support() const { return compact_; }
  const std::vector<double>& feature_breaks() const { return features_; }
  bool is_zero() const;
  const std::vector<complexd>& samples() const { return samples_; }
  double sample_spacing() const;

  std::string to_json_string() const;
  static SpectralFunction from_json_string(const std::string& text);

 private:
  SpectralFunction() = default;

  SpectralKind kind_ = SpectralKind::gaussian;
  std::vector<double> params_;
  Interval hull_{0.0, 0.0};
  bool compact_ = false;
  std::vector<double> features_;
  std::shared_ptr<const SpectralFunction> base_;
  std::vector<complexd> samples_;
};

/// Uniform spatial grid over [center - half_width, center + half_width].
struct SpatialGrid {
  double center = 0.0;
  double half_width = 1.0;
  int n_points = 2;

  SpatialGrid(double center_, double half_width_, int n_points_);
  double spacing() const { return 2.0 * half_width / (n_points - 1); }
  double x(int i) const { return center - half_width + i * spacing(); }
};

struct GridFunction {
  SpatialGrid grid;
  std::vector<complexd> values;

  GridFunction(SpatialGrid g, std::vector<complexd> v);
};

/// f(x) = (1/2pi) Int f_hat(xi) e^{i x xi} ddxi.
complexd synthesize_point(const SpectralFunction& spec, double x,
                          const QuadratureControl& ctrl = {});
GridFunction synthesize(const SpectralFunction& spec, const SpatialGrid& grid,
                        const QuadratureControl& ctrl = {});

/// (1/2pi) Int f_hat(xi) W(xi) e^{i x xi} dxi, with the oscillation/damping
/// of W described by `weight_model` for the panel planner.
complexd synthesize_weighted(const SpectralFunction& spec, double x,
                             const std::function<complexd(double)>& weight,
                             const OscillationModel& weight_model,
                             const QuadratureControl& ctrl = {});

/// Discrete forward transform, f_hat(xi) = Int f(x) e^{-i x xi} dx, sampled
/// on the grid-conjugate frequency lattice. synthesize() of the result
/// reproduces grid-resolved band-limited inputs.
SpectralFunction forward_transform(const GridFunction& f);

struct DyadicPiece {
  int k = 0;
  double scale = 1.0;  // 2^k
  SpectralFunction spectrum;
};

/// Smooth dyadic decomposition; pieces sum back to `spec` pointwise.
/// Piece k >= 1 vanishes outside 2^{k-1} <= |xi| <= 2^{k+1}.
std::vector<DyadicPiece> lp_decompose(const SpectralFunction& spec, int k_max);

struct LowpassSplit {
  SpectralFunction low;   // f_hat * psi_hat
  SpectralFunction high;  // f_hat * (1 - psi_hat)
};

LowpassSplit lowpass_split(const SpectralFunction& spec);

}  // namespace landau
