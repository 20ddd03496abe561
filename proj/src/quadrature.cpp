#include "landau/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace landau {

namespace {

// Damping exponents beyond this underflow exp(-x) to an exact double 0.
constexpr double kDampCutoff = 746.0;

GaussRule make_gauss_rule(int n) {
  // Legendre roots by Newton iteration from the Chebyshev-like initial guess.
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

double abs_pow(double xi, double a) { return std::pow(std::abs(xi), a); }

// Cumulative phase-variation over [lo, xi] inside a sign-definite gap.
// Both the linear and the |.|^a parts are monotone on such a gap, so this is
// increasing in xi.
double phase_progress(double xi, double lo, const OscillationModel& m) {
  double p = m.linear_rate * (xi - lo);
  if (m.t_phase != 0.0)
    p += m.t_phase * std::abs(abs_pow(xi, m.a_phase) - abs_pow(lo, m.a_phase));
  return p;
}

bool gap_fully_damped(double lo, double hi, const OscillationModel& m) {
  if (m.t_damp <= 0.0) return false;
  const double min_abs = (lo >= 0.0) ? lo : (hi <= 0.0 ? -hi : 0.0);
  return m.t_damp * abs_pow(min_abs, m.a_damp) > kDampCutoff;
}

// Splits one sign-definite gap into panels of equal modeled phase change.
void subdivide_gap(double lo, double hi, std::size_t n_panels,
                   const OscillationModel& m, std::vector<double>& out) {
  const double total = phase_progress(hi, lo, m);
  const bool equal_phase = total > 8.0 * kPi && m.t_phase > 0.0;
  double prev = lo;
  for (std::size_t j = 1; j < n_panels; ++j) {
    double b;
    if (equal_phase) {
      const double target = total * static_cast<double>(j) / n_panels;
      double a = prev, c = hi;
      for (int it = 0; it < 80 && (c - a) > 1e-14 * (std::abs(c) + 1.0); ++it) {
        const double mid = 0.5 * (a + c);
        (phase_progress(mid, lo, m) < target ? a : c) = mid;
      }
      b = 0.5 * (a + c);
    } else {
      b = lo + (hi - lo) * static_cast<double>(j) / n_panels;
    }
    if (b > prev) out.push_back(b);
    prev = std::max(prev, b);
  }
  out.push_back(hi);
}

template <typename T>
struct Engine {
  static T panel_value(const std::function<T(double)>& f, double lo, double hi,
                       const GaussRule& rule) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    T acc{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      acc += T(rule.weights[i]) * f(mid + half * rule.nodes[i]);
    return T(half) * acc;
  }

  static std::pair<T, double> sweep(const std::function<T(double)>& f,
                                    std::span<const double> breaks,
                                    const OscillationModel& m,
                                    const GaussRule& rule) {
    std::vector<T> values;
    values.reserve(breaks.size());
    double l1 = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
      if (gap_fully_damped(breaks[i], breaks[i + 1], m)) continue;
      const T v = panel_value(f, breaks[i], breaks[i + 1], rule);
      values.push_back(v);
      l1 += std::abs(v);
    }
    return {pairwise_sum(std::span<const T>(values)), l1};
  }

  static IntegralResult run(const std::function<T(double)>& f, Interval domain,
                            const OscillationModel& m,
                            std::span<const double> features,
                            const QuadratureControl& ctrl) {
    const GaussRule& rule = gauss_rule();
    std::vector<double> breaks = plan_panels(domain, m, features, ctrl);

    IntegralResult res;
    auto [value, l1] = sweep(f, breaks, m, rule);
    for (int round = 0; round < ctrl.max_refinements; ++round) {
      if (2 * (breaks.size() - 1) > ctrl.panel_budget)
        throw std::runtime_error(
            "quadrature panel budget exceeded during refinement");
      std::vector<double> finer;
      finer.reserve(2 * breaks.size());
      for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        finer.push_back(breaks[i]);
        finer.push_back(0.5 * (breaks[i] + breaks[i + 1]));
      }
      finer.push_back(breaks.back());
      breaks.swap(finer);

      auto [next, next_l1] = sweep(f, breaks, m, rule);
      const double diff = std::abs(next - value);
      const double floor = ctrl.abs_tol + 1e-15 * next_l1;
      value = next;
      l1 = next_l1;
      if (diff <= ctrl.rel_tol * std::abs(next) + floor) {
        res.value = complexd(value);
        res.error_estimate = diff;
        res.l1_estimate = l1;
        res.refinements = round + 1;
        res.panels = breaks.size() - 1;
        return res;
      }
    }
    throw std::runtime_error("quadrature did not converge within the budget");
  }
};

}  // namespace

const GaussRule& gauss_rule(int order) {
  static const GaussRule rule15 = make_gauss_rule(15);
  if (order == 15) return rule15;
  throw std::invalid_argument("unsupported Gauss rule order");
}

std::vector<double> plan_panels(Interval domain, const OscillationModel& model,
                                std::span<const double> features,
                                const QuadratureControl& ctrl) {
  require(domain.hi >= domain.lo, "empty integration domain");
  std::vector<double> anchors{domain.lo, domain.hi};
  if (domain.lo < 0.0 && domain.hi > 0.0) anchors.push_back(0.0);
  for (double fb : features)
    if (fb > domain.lo && fb < domain.hi) anchors.push_back(fb);
  std::sort(anchors.begin(), anchors.end());
  const double scale = std::max(std::abs(domain.lo), std::abs(domain.hi));
  anchors.erase(std::unique(anchors.begin(), anchors.end(),
                            [scale](double a, double b) {
                              return b - a <= 1e-14 * (scale + 1.0);
                            }),
                anchors.end());

  // Per-gap panel counts: phase budget pi/2, plus a width-proportional
  // minimum so smooth amplitudes are resolved even without oscillation.
  const double width = domain.width();
  std::vector<double> breaks{anchors.front()};
  std::size_t total_panels = 0;
  for (std::size_t g = 0; g + 1 < anchors.size(); ++g) {
    const double lo = anchors[g], hi = anchors[g + 1];
    if (gap_fully_damped(lo, hi, model)) {
      breaks.push_back(hi);
      total_panels += 1;
      continue;
    }
    const double dphi = phase_progress(hi, lo, model);
    double n = std::ceil(dphi / (0.5 * kPi));
    const double n_min =
        width > 0.0 ? std::ceil(ctrl.min_panels * (hi - lo) / width) : 1.0;
    n = std::max({n, n_min, 1.0});
    if (n > static_cast<double>(ctrl.panel_budget))
      throw std::runtime_error("quadrature panel budget exceeded (phase span)");
    total_panels += static_cast<std::size_t>(n);
    if (total_panels > ctrl.panel_budget)
      throw std::runtime_error("quadrature panel budget exceeded (phase span)");
    subdivide_gap(lo, hi, static_cast<std::size_t>(n), model, breaks);
  }
  return breaks;
}

IntegralResult integrate_oscillatory(const std::function<complexd(double)>& f,
                                     Interval domain,
                                     const OscillationModel& model,
                                     std::span<const double> features,
                                     const QuadratureControl& ctrl) {
  if (domain.empty()) return {};
  return Engine<complexd>::run(f, domain, model, features, ctrl);
}

double integrate_smooth(const std::function<double(double)>& f, Interval domain,
                        std::span<const double> features,
                        const QuadratureControl& ctrl) {
  if (domain.empty()) return 0.0;
  return Engine<double>::run(f, domain, OscillationModel{}, features, ctrl)
      .value.real();
}

IntegralResult integrate_decaying(const std::function<complexd(double)>& f,
                                  Interval core, const OscillationModel& model,
                                  std::span<const double> features,
                                  const QuadratureControl& ctrl,
                                  double max_radius) {
  IntegralResult acc = integrate_oscillatory(f, core, model, features, ctrl);
  double right = std::max(core.hi, 1.0);
  double left = std::min(core.lo, -1.0);
  if (right > core.hi) {
    acc.value += integrate_oscillatory(f, {core.hi, right}, model, features,
                                       ctrl).value;
  }
  if (left < core.lo) {
    acc.value += integrate_oscillatory(f, {left, core.lo}, model, features,
                                       ctrl).value;
  }
  while (std::max(right, -left) < max_radius) {
    IntegralResult up =
        integrate_oscillatory(f, {right, 2.0 * right}, model, features, ctrl);
    IntegralResult down =
        integrate_oscillatory(f, {2.0 * left, left}, model, features, ctrl);
    right *= 2.0;
    left *= 2.0;
    const complexd shell = up.value + down.value;
    acc.value += shell;
    acc.l1_estimate += up.l1_estimate + down.l1_estimate;
    acc.panels += up.panels + down.panels;
    const double floor = ctrl.abs_tol + 1e-15 * acc.l1_estimate;
    if (std::abs(shell) <= 0.5 * ctrl.rel_tol * std::abs(acc.value) + floor)
      return acc;
  }
  throw std::runtime_error("integrand does not decay: support required");
}

}  // namespace landau
