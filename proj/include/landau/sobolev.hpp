#pragma once

#include <vector>

#include "landau/spectral.hpp"

namespace landau {

/// Regularity/integrability index pair with the conjugate exponent.
struct SobolevIndex {
  double s;
  double p;

  SobolevIndex(double s_, double p_);
  double conjugate() const { return p / (p - 1.0); }
};

/// Spatial-side catalog entry with closed-form evaluation and analytic
/// derivatives: sums of Gaussians A exp(-alpha (x-c)^2), or translated and
/// dilated copies of the smooth bump g.
class CatalogEntry {
 public:
  struct GaussianTerm {
    double amplitude;
    double alpha;
    double center;
  };

  static CatalogEntry gaussian(double amplitude, double alpha, double center);
  static CatalogEntry bump_translate(double center, double dilation = 1.0);

  /// Sum of two Gaussian-sum entries.
  CatalogEntry plus(const CatalogEntry& other) const;

  double operator()(double x) const;
  /// Analytic derivative; bump entries support order <= 1 only.
  double derivative(int order, double x) const;
  int max_derivative_order() const;

  Interval domain() const;  // effective support for quadrature
  const std::vector<double>& feature_breaks() const { return features_; }
  bool is_zero() const;

  /// Frequency side u_hat(xi) = Int u(x) e^{-i x xi} dx: closed form for
  /// Gaussian sums, inner quadrature for bump entries.
  complexd spectrum(double xi, const QuadratureControl& ctrl = {}) const;

 private:
  CatalogEntry() = default;

  bool is_bump_ = false;
  std::vector<GaussianTerm> terms_;
  double bump_center_ = 0.0;
  double bump_dilation_ = 1.0;
  Interval domain_{0.0, 0.0};
  std::vector<double> features_;
};

/// Gagliardo seminorm (Int Int |u(x)-u(y)|^p / |x-y|^{sp+1} dx dy)^{1/p},
/// 0 < s < 1, p >= 1. Diagonal handled by the z = x - y substitution with
/// graded panels near z = 0 and analytic small-z / large-z corrections.
double gagliardo_seminorm(const CatalogEntry& u, double s, double p,
                          const QuadratureControl& ctrl = {});
double gagliardo_seminorm(const GridFunction& u, double s, double p,
                          const QuadratureControl& ctrl = {});

/// L^p norm of a catalog entry over its effective support.
double lp_norm(const CatalogEntry& u, double p,
               const QuadratureControl& ctrl = {});

/// W^{s,p} norm in all three regimes: fractional (0<s<1), integer, and
/// mixed s = m + tau. Derivatives come from the analytic catalog.
double wsp_norm(const CatalogEntry& u, double s, double p,
                const QuadratureControl& ctrl = {});

/// ||(1 + |.|^2)^{s/2} u_hat||_{L^{p'}}.
double fourier_weighted_norm(const SpectralFunction& spec, double s, double p,
                             const QuadratureControl& ctrl = {});
double fourier_weighted_norm(const CatalogEntry& u, double s, double p,
                             const QuadratureControl& ctrl = {});

/// fourier_weighted_norm / wsp_norm for one catalog entry.
double lemma31_ratio(const CatalogEntry& u, double s, double p,
                     const QuadratureControl& ctrl = {});

/// C(s) = Int 4 sin^2(z/2) |z|^{-1-2s} dz, by quadrature with an
/// integration-by-parts tail. Relates the p = 2 Gagliardo seminorm to the
/// Fourier side: seminorm^2 = C(s) (1/2pi) Int |u_hat|^2 |xi|^{2s} dxi.
double gagliardo_fourier_constant(double s,
                                  const QuadratureControl& ctrl = {});

}  // namespace landau
