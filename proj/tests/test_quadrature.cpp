#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "landau/quadrature.hpp"

using namespace landau;

TEST_CASE("gauss rule integrates polynomials of degree 2n-1 exactly") {
  const GaussRule& rule = gauss_rule();
  // int_{-1}^{1} x^28 dx = 2/29
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * std::pow(rule.nodes[i], 28);
  CHECK(acc == doctest::Approx(2.0 / 29.0).epsilon(1e-13));
  double total = 0.0;
  for (double w : rule.weights) total += w;
  CHECK(total == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("smooth integral matches closed form") {
  const double v = integrate_smooth([](double x) { return std::exp(-x * x); },
                                    {-8.0, 8.0}, {}, {});
  CHECK(v == doctest::Approx(std::sqrt(kPi)).epsilon(1e-12));
}

TEST_CASE("oscillatory integral with large phase matches closed form") {
  // int_0^L e^{i c xi} dxi = (e^{i c L} - 1) / (i c), c L ~ 5000 radians
  const double c = 50.0, L = 100.0;
  OscillationModel m;
  m.linear_rate = c;
  const auto res = integrate_oscillatory(
      [c](double xi) { return std::polar(1.0, c * xi); }, {0.0, L}, m, {}, {});
  const complexd expected =
      (std::polar(1.0, c * L) - complexd{1.0, 0.0}) / complexd{0.0, c};
  CHECK(std::abs(res.value - expected) <= 1e-9 * std::abs(expected) + 1e-12);
}

TEST_CASE("power phase t|xi|^a with a<1 gets a panel break at zero") {
  // int_{-1}^{1} e^{i t |xi|^{1/2}} dxi against a dense reference
  const double t = 40.0;
  OscillationModel m;
  m.t_phase = t;
  m.a_phase = 0.5;
  const auto f = [t](double xi) {
    return std::polar(1.0, t * std::sqrt(std::abs(xi)));
  };
  const auto res = integrate_oscillatory(f, {-1.0, 1.0}, m, {}, {});
  // reference: 2 * int_0^1 cos/sin(t sqrt(u)) du via substitution u = v^2
  // int_0^1 e^{i t sqrt(u)} du = 2 int_0^1 v e^{i t v} dv, closed form
  const complexd it{0.0, t};
  const complexd eitv = std::polar(1.0, t);
  const complexd closed = 2.0 * (eitv * (it - 1.0) + 1.0) / (it * it);
  CHECK(std::abs(res.value - 2.0 * closed) <= 1e-8);
}

TEST_CASE("damped panels are pruned without changing the value") {
  // exp(-t |xi|^2) with t large: mass concentrates near 0
  OscillationModel m;
  m.t_damp = 1e4;
  m.a_damp = 2.0;
  const auto res = integrate_oscillatory(
      [](double xi) -> complexd {
        return {std::exp(-1e4 * xi * xi), 0.0};
      },
      {-50.0, 50.0}, m, {}, {});
  CHECK(res.value.real() ==
        doctest::Approx(std::sqrt(kPi / 1e4)).epsilon(1e-9));
}

TEST_CASE("panel budget violation throws") {
  OscillationModel m;
  m.linear_rate = 1e12;
  QuadratureControl ctrl;
  ctrl.panel_budget = 1000;
  CHECK_THROWS_AS(integrate_oscillatory(
                      [](double xi) { return complexd{xi, 0.0}; }, {0.0, 1.0},
                      m, {}, ctrl),
                  std::runtime_error);
}

TEST_CASE("decaying integral extends shells as needed") {
  // int e^{-|x|} dx = 2, core interval deliberately too small
  const auto res = integrate_decaying(
      [](double x) -> complexd { return {std::exp(-std::abs(x)), 0.0}; },
      {-1.0, 1.0}, {}, {}, {});
  CHECK(res.value.real() == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("pairwise sum is deterministic and accurate") {
  std::vector<double> xs(1 << 12);
  for (std::size_t i = 0; i < xs.size(); ++i)
    xs[i] = std::sin(0.1 * static_cast<double>(i));
  const double a = pairwise_sum(xs);
  const double b = pairwise_sum(xs);
  CHECK(a == b);
  long double ref = 0.0L;
  for (double x : xs) ref += x;
  CHECK(a == doctest::Approx(static_cast<double>(ref)).epsilon(1e-14));
}
