#include "landau/spectral.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "landau/bump.hpp"
#include "landau/parallel.hpp"

namespace landau {

namespace {

// Decay radius at which exp(-alpha r^2) is below ~2.6e-23.
double gaussian_radius(double alpha) { return std::sqrt(52.0 / alpha); }

double dyadic_window(double xi, int k) {
  if (k == 0) return lowpass_profile(xi);
  const double scale = std::ldexp(1.0, k);
  return lowpass_profile(xi / scale) - lowpass_profile(2.0 * xi / scale);
}

Interval intersect(Interval a, Interval b) {
  return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

const char* kind_name(SpectralKind k) {
  switch (k) {
    case SpectralKind::gaussian: return "gaussian";
    case SpectralKind::interval_indicator: return "interval-indicator";
    case SpectralKind::scaled_bump: return "scaled-bump";
    case SpectralKind::dyadic_piece: return "dyadic-piece-of";
    case SpectralKind::lowpass: return "lowpass-of";
    case SpectralKind::highpass: return "highpass-of";
    case SpectralKind::sampled: return "sampled";
  }
  return "unknown";
}

}  // namespace

SpectralFunction SpectralFunction::gaussian(double amplitude, double alpha,
                                            double modulation) {
  require(alpha > 0.0 && std::isfinite(alpha), "alpha must be positive");
  require(std::isfinite(amplitude) && std::isfinite(modulation),
          "non-finite parameter");
  SpectralFunction f;
  f.kind_ = SpectralKind::gaussian;
  f.params_ = {amplitude, alpha, modulation};
  const double r = gaussian_radius(alpha);
  f.hull_ = {-r, r};
  f.compact_ = false;
  const double sigma = 1.0 / std::sqrt(2.0 * alpha);
  f.features_ = {-4.0 * sigma, -sigma, sigma, 4.0 * sigma};
  return f;
}

SpectralFunction SpectralFunction::interval_indicator(double lo, double hi,
                                                      double amplitude) {
  require(std::isfinite(lo) && std::isfinite(hi) && lo < hi,
          "indicator interval must be nonempty");
  require(std::isfinite(amplitude), "non-finite parameter");
  SpectralFunction f;
  f.kind_ = SpectralKind::interval_indicator;
  f.params_ = {lo, hi, amplitude};
  f.hull_ = {lo, hi};
  f.compact_ = true;
  return f;
}

SpectralFunction SpectralFunction::scaled_bump(double amplitude, double scale,
                                               double shift) {
  require(scale > 0.0 && std::isfinite(scale), "bump scale must be positive");
  require(std::isfinite(amplitude) && std::isfinite(shift),
          "non-finite parameter");
  SpectralFunction f;
  f.kind_ = SpectralKind::scaled_bump;
  f.params_ = {amplitude, scale, shift};
  f.hull_ = {(-1.0 - shift) / scale, (1.0 - shift) / scale};
  f.compact_ = true;
  // plateau junctions of g(scale*xi + shift)
  f.features_ = {(-0.5 - shift) / scale, (0.5 - shift) / scale};
  return f;
}

SpectralFunction SpectralFunction::sampled(double xi_min, double dxi,
                                           std::vector<complexd> values) {
  require(dxi > 0.0 && std::isfinite(dxi),
          "sampled spectrum needs positive frequency spacing");
  require(values.size() >= 2, "sampled spectrum needs at least two samples");
  for (const complexd& v : values)
    require(std::isfinite(v.real()) && std::isfinite(v.imag()),
            "non-finite parameter");
  SpectralFunction f;
  f.kind_ = SpectralKind::sampled;
  f.params_ = {xi_min, dxi};
  f.hull_ = {xi_min, xi_min + dxi * static_cast<double>(values.size() - 1)};
  f.compact_ = true;
  f.samples_ = std::move(values);
  return f;
}

SpectralFunction SpectralFunction::zero() {
  return scaled_bump(0.0, 1.0, 0.0);
}

SpectralFunction SpectralFunction::lowpass() const {
  SpectralFunction f;
  f.kind_ = SpectralKind::lowpass;
  f.base_ = std::make_shared<SpectralFunction>(*this);
  f.hull_ = intersect(hull_, {-2.0, 2.0});
  f.compact_ = true;
  f.features_ = feature_breaks();
  f.features_.insert(f.features_.end(), {-2.0, -1.0, 1.0, 2.0});
  return f;
}

SpectralFunction SpectralFunction::highpass() const {
  SpectralFunction f;
  f.kind_ = SpectralKind::highpass;
  f.base_ = std::make_shared<SpectralFunction>(*this);
  f.hull_ = hull_;
  f.compact_ = compact_;
  f.features_ = feature_breaks();
  f.features_.insert(f.features_.end(), {-2.0, -1.0, 1.0, 2.0});
  return f;
}

SpectralFunction SpectralFunction::dyadic_piece(int k) const {
  require(k >= 0, "dyadic index must be nonnegative");
  SpectralFunction f;
  f.kind_ = SpectralKind::dyadic_piece;
  f.params_ = {static_cast<double>(k)};
  f.base_ = std::make_shared<SpectralFunction>(*this);
  const double outer = std::ldexp(1.0, k + 1);
  f.hull_ = intersect(hull_, {-outer, outer});
  if (f.hull_.empty()) f.hull_ = {0.0, 0.0};
  f.compact_ = true;
  f.features_ = feature_breaks();
  for (int e = k - 2; e <= k + 1; ++e) {
    if (e < 0) continue;
    const double b = std::ldexp(1.0, e);
    f.features_.push_back(b);
    f.features_.push_back(-b);
  }
  return f;
}

complexd SpectralFunction::operator()(double xi) const {
  switch (kind_) {
    case SpectralKind::gaussian: {
      const double A = params_[0], alpha = params_[1], c = params_[2];
      const double mag = A * std::exp(-alpha * xi * xi);
      if (c == 0.0) return {mag, 0.0};
      return std::polar(1.0, -c * xi) * mag;
    }
    case SpectralKind::interval_indicator:
      return (xi >= params_[0] && xi <= params_[1]) ? complexd{params_[2], 0.0}
                                                    : complexd{0.0, 0.0};
    case SpectralKind::scaled_bump:
      return {params_[0] * bump(params_[1] * xi + params_[2]), 0.0};
    case SpectralKind::dyadic_piece:
      return (*base_)(xi)*dyadic_window(xi, static_cast<int>(params_[0]));
    case SpectralKind::lowpass:
      return (*base_)(xi)*lowpass_profile(xi);
    case SpectralKind::highpass:
      return (*base_)(xi) * (1.0 - lowpass_profile(xi));
    case SpectralKind::sampled: {
      if (xi < hull_.lo || xi > hull_.hi) return {0.0, 0.0};
      const double u = (xi - params_[0]) / params_[1];
      const auto i = static_cast<std::size_t>(u);
      if (i + 1 >= samples_.size()) return samples_.back();
      const double w = u - static_cast<double>(i);
      return samples_[i] * (1.0 - w) + samples_[i + 1] * w;
    }
  }
  return {0.0, 0.0};
}

bool SpectralFunction::is_zero() const {
  switch (kind_) {
    case SpectralKind::gaussian:
    case SpectralKind::scaled_bump:
      return params_[0] == 0.0;
    case SpectralKind::interval_indicator:
      return params_[2] == 0.0;
    case SpectralKind::dyadic_piece:
      return hull_.empty() || base_->is_zero();
    case SpectralKind::lowpass:
    case SpectralKind::highpass:
      return base_->is_zero();
    case SpectralKind::sampled:
      return std::all_of(samples_.begin(), samples_.end(),
                         [](complexd v) { return v == complexd{0.0, 0.0}; });
  }
  return false;
}

double SpectralFunction::sample_spacing() const {
  require(kind_ == SpectralKind::sampled, "not a sampled spectrum");
  return params_[1];
}

SpatialGrid::SpatialGrid(double center_, double half_width_, int n_points_)
    : center(center_), half_width(half_width_), n_points(n_points_) {
  require(n_points >= 2, "grid needs at least two points");
  require(half_width > 0.0 && std::isfinite(half_width) &&
              std::isfinite(center),
          "grid needs positive finite half width");
}

GridFunction::GridFunction(SpatialGrid g, std::vector<complexd> v)
    : grid(g), values(std::move(v)) {
  require(values.size() == static_cast<std::size_t>(grid.n_points),
          "value count must match grid points");
  for (const complexd& z : values)
    require(std::isfinite(z.real()) && std::isfinite(z.imag()),
            "grid values must be finite");
}

namespace {

complexd sampled_synthesis(const SpectralFunction& spec, double x,
                           const std::function<complexd(double)>& weight) {
  // Rectangle rule on the native sample lattice; exact inverse of
  // forward_transform at grid nodes for resolved inputs.
  const double xi0 = spec.params()[0];
  const double dxi = spec.params()[1];
  const auto& vals = spec.samples();
  std::vector<complexd> terms(vals.size());
  for (std::size_t j = 0; j < vals.size(); ++j) {
    const double xi = xi0 + dxi * static_cast<double>(j);
    complexd v = vals[j] * std::polar(1.0, x * xi);
    if (weight) v *= weight(xi);
    terms[j] = v;
  }
  return pairwise_sum(terms) * (dxi / kTwoPi);
}

}  // namespace

complexd synthesize_weighted(const SpectralFunction& spec, double x,
                             const std::function<complexd(double)>& weight,
                             const OscillationModel& weight_model,
                             const QuadratureControl& ctrl) {
  require(std::isfinite(x), "non-finite parameter");
  if (spec.is_zero()) return {0.0, 0.0};
  if (spec.kind() == SpectralKind::sampled)
    return sampled_synthesis(spec, x, weight);

  OscillationModel model = weight_model;
  model.linear_rate += std::abs(x);

  // Short-circuit when the damping factor underflows on the whole hull.
  const Interval dom = spec.hull();
  if (model.t_damp > 0.0) {
    const double min_abs =
        dom.lo > 0.0 ? dom.lo : (dom.hi < 0.0 ? -dom.hi : 0.0);
    if (model.t_damp * std::pow(min_abs, model.a_damp) > 746.0)
      return {0.0, 0.0};
  }

  auto integrand = [&](double xi) -> complexd {
    complexd v = spec(xi) * std::polar(1.0, x * xi);
    if (weight) v *= weight(xi);
    return v;
  };
  const IntegralResult res = integrate_oscillatory(
      integrand, dom, model, spec.feature_breaks(), ctrl);
  return res.value / kTwoPi;
}

complexd synthesize_point(const SpectralFunction& spec, double x,
                          const QuadratureControl& ctrl) {
  return synthesize_weighted(spec, x, nullptr, OscillationModel{}, ctrl);
}

GridFunction synthesize(const SpectralFunction& spec, const SpatialGrid& grid,
                        const QuadratureControl& ctrl) {
  std::vector<complexd> values(grid.n_points);
  parallel_for(values.size(), [&](std::size_t i) {
    values[i] = synthesize_point(spec, grid.x(static_cast<int>(i)), ctrl);
  });
  return {grid, std::move(values)};
}

SpectralFunction forward_transform(const GridFunction& f) {
  const int n = f.grid.n_points;
  require(n >= 2, "grid needs at least two points");
  const double dx = f.grid.spacing();
  const double dxi = kTwoPi / (n * dx);
  const double xi0 = -dxi * std::floor(n / 2.0);

  std::vector<complexd> spectrum(n);
  parallel_for(spectrum.size(), [&](std::size_t j) {
    const double xi = xi0 + dxi * static_cast<double>(j);
    std::vector<complexd> terms(n);
    for (int m = 0; m < n; ++m)
      terms[m] = f.values[m] * std::polar(1.0, -f.grid.x(m) * xi);
    spectrum[j] = pairwise_sum(terms) * dx;
  });
  return SpectralFunction::sampled(xi0, dxi, std::move(spectrum));
}

std::vector<DyadicPiece> lp_decompose(const SpectralFunction& spec, int k_max) {
  require(k_max >= 0, "k_max must be nonnegative");
  const Interval dom = spec.hull();
  const double cover = std::ldexp(1.0, k_max);
  if (std::max(std::abs(dom.lo), std::abs(dom.hi)) > cover)
    throw std::invalid_argument("k_max too small");
  std::vector<DyadicPiece> pieces;
  pieces.reserve(k_max + 1);
  for (int k = 0; k <= k_max; ++k)
    pieces.push_back({k, std::ldexp(1.0, k), spec.dyadic_piece(k)});
  return pieces;
}

LowpassSplit lowpass_split(const SpectralFunction& spec) {
  return {spec.lowpass(), spec.highpass()};
}

std::string SpectralFunction::to_json_string() const {
  nlohmann::json j;
  j["kind"] = kind_name(kind_);
  j["params"] = params_;
  j["support"] = {hull_.lo, hull_.hi};
  j["compact"] = compact_;
  if (base_) j["base"] = nlohmann::json::parse(base_->to_json_string());
  if (kind_ == SpectralKind::sampled) {
    std::vector<double> re(samples_.size()), im(samples_.size());
    for (std::size_t i = 0; i < samples_.size(); ++i) {
      re[i] = samples_[i].real();
      im[i] = samples_[i].imag();
    }
    j["samples_re"] = re;
    j["samples_im"] = im;
  }
  return j.dump();
}

SpectralFunction SpectralFunction::from_json_string(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  const std::string kind = j.at("kind").get<std::string>();
  const auto params = j.value("params", std::vector<double>{});
  if (kind == "gaussian")
    return gaussian(params.at(0), params.at(1), params.at(2));
  if (kind == "interval-indicator")
    return interval_indicator(params.at(0), params.at(1), params.at(2));
  if (kind == "scaled-bump")
    return scaled_bump(params.at(0), params.at(1), params.at(2));
  if (kind == "sampled") {
    const auto re = j.at("samples_re").get<std::vector<double>>();
    const auto im = j.at("samples_im").get<std::vector<double>>();
    require(re.size() == im.size(), "mismatched sample arrays");
    std::vector<complexd> vals(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) vals[i] = {re[i], im[i]};
    return sampled(params.at(0), params.at(1), std::move(vals));
  }
  const SpectralFunction base = from_json_string(j.at("base").dump());
  if (kind == "dyadic-piece-of")
    return base.dyadic_piece(static_cast<int>(params.at(0)));
  if (kind == "lowpass-of") return base.lowpass();
  if (kind == "highpass-of") return base.highpass();
  throw std::invalid_argument("unknown spectral kind: " + kind);
}

}  // namespace landau
