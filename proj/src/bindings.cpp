#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "landau/constructions.hpp"
#include "landau/propagator.hpp"
#include "landau/rates.hpp"
#include "landau/sobolev.hpp"
#include "landau/spectral.hpp"

namespace py = pybind11;
using namespace landau;

namespace {

PropagatorParams make_params(double a, double gamma, double t) {
  return {a, gamma, t};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Numerics lab for the damped dispersive multiplier "
            "exp(i t |xi|^a - t^gamma |xi|^a)";

  py::class_<SpectralFunction>(m, "SpectralFunction")
      .def_static("gaussian", &SpectralFunction::gaussian, py::arg("amplitude"),
                  py::arg("alpha"), py::arg("modulation") = 0.0)
      .def_static("interval_indicator", &SpectralFunction::interval_indicator,
                  py::arg("lo"), py::arg("hi"), py::arg("amplitude") = 1.0)
      .def_static("scaled_bump", &SpectralFunction::scaled_bump,
                  py::arg("amplitude"), py::arg("scale"), py::arg("shift"))
      .def_static("zero", &SpectralFunction::zero)
      .def("__call__", &SpectralFunction::operator())
      .def("lowpass", &SpectralFunction::lowpass)
      .def("highpass", &SpectralFunction::highpass)
      .def("dyadic_piece", &SpectralFunction::dyadic_piece)
      .def("support", [](const SpectralFunction& f) {
        return std::make_pair(f.hull().lo, f.hull().hi);
      })
      .def("compact_support", &SpectralFunction::compact_support)
      .def("to_json", &SpectralFunction::to_json_string)
      .def_static("from_json", &SpectralFunction::from_json_string);

  py::class_<DyadicPiece>(m, "DyadicPiece")
      .def_readonly("k", &DyadicPiece::k)
      .def_readonly("scale", &DyadicPiece::scale)
      .def_readonly("spectrum", &DyadicPiece::spectrum);

  py::class_<HoelderCurve>(m, "HoelderCurve")
      .def_static("vertical", &HoelderCurve::vertical, py::arg("anchor") = 0.0,
                  py::arg("radius") = 1.0)
      .def_static("power_shift", &HoelderCurve::power_shift, py::arg("beta"),
                  py::arg("anchor") = 0.0, py::arg("radius") = 1.0);

  m.def("bump", &bump);
  m.def("synthesize_point",
        [](const SpectralFunction& spec, double x) {
          return synthesize_point(spec, x);
        },
        py::arg("spec"), py::arg("x"));
  m.def("synthesize",
        [](const SpectralFunction& spec, double center, double half_width,
           int n_points) {
          const GridFunction g =
              synthesize(spec, SpatialGrid(center, half_width, n_points));
          return g.values;
        },
        py::arg("spec"), py::arg("center"), py::arg("half_width"),
        py::arg("n_points"));
  m.def("landau_multiplier",
        [](double xi, double a, double gamma, double t) {
          return landau_multiplier(xi, make_params(a, gamma, t));
        },
        py::arg("xi"), py::arg("a"), py::arg("gamma"), py::arg("t"));
  m.def("propagate_point",
        [](const SpectralFunction& spec, double x, double a, double gamma,
           double t) {
          return propagate_point(spec, x, make_params(a, gamma, t));
        },
        py::arg("spec"), py::arg("x"), py::arg("a"), py::arg("gamma"),
        py::arg("t"));
  m.def("maximal",
        [](const SpectralFunction& spec, double x, double t_max, double t_min,
           double ratio, double a, double gamma) {
          return maximal(spec, x, TimeGrid::geometric(t_max, t_min, ratio), a,
                         gamma);
        },
        py::arg("spec"), py::arg("x"), py::arg("t_max"), py::arg("t_min"),
        py::arg("ratio"), py::arg("a"), py::arg("gamma"));
  m.def("curve_eval", &curve_eval);
  m.def("lp_decompose", &lp_decompose, py::arg("spec"), py::arg("k_max"));

  py::class_<CatalogEntry>(m, "CatalogEntry")
      .def_static("gaussian", &CatalogEntry::gaussian, py::arg("amplitude"),
                  py::arg("alpha"), py::arg("center"))
      .def_static("bump_translate", &CatalogEntry::bump_translate,
                  py::arg("center"), py::arg("dilation") = 1.0)
      .def("__call__", &CatalogEntry::operator())
      .def("derivative", &CatalogEntry::derivative);

  m.def("gagliardo_seminorm",
        [](const CatalogEntry& u, double s, double p) {
          return gagliardo_seminorm(u, s, p);
        },
        py::arg("u"), py::arg("s"), py::arg("p"));
  m.def("wsp_norm",
        [](const CatalogEntry& u, double s, double p) {
          return wsp_norm(u, s, p);
        },
        py::arg("u"), py::arg("s"), py::arg("p"));
  m.def("fourier_weighted_norm",
        [](const SpectralFunction& spec, double s, double p) {
          return fourier_weighted_norm(spec, s, p);
        },
        py::arg("spec"), py::arg("s"), py::arg("p"));
  m.def("lemma31_ratio",
        [](const CatalogEntry& u, double s, double p) {
          return lemma31_ratio(u, s, p);
        },
        py::arg("u"), py::arg("s"), py::arg("p"));

  m.def("k0_index", &k0_index, py::arg("a"), py::arg("gamma"));
  m.def("f_theta",
        [](double theta, double a, double gamma) {
          return f_theta(CounterexampleSpec(theta, a, gamma));
        },
        py::arg("theta"), py::arg("a"), py::arg("gamma"));
  m.def("pinned_time",
        [](double x, double theta, double a, double gamma) {
          return pinned_time(x, CounterexampleSpec(theta, a, gamma));
        },
        py::arg("x"), py::arg("theta"), py::arg("a"), py::arg("gamma"));
  m.def("phase_diagnostics",
        [](double xi, double x, double theta, double a, double gamma) {
          const PhaseDiagnostics d =
              phase_diagnostics(xi, x, CounterexampleSpec(theta, a, gamma));
          return std::make_tuple(d.phi, d.psi, d.remainder);
        },
        py::arg("xi"), py::arg("x"), py::arg("theta"), py::arg("a"),
        py::arg("gamma"));
  m.def("f_sharp", &f_sharp, py::arg("R"));
  m.def("solve_t0", &solve_t0, py::arg("R"), py::arg("a"), py::arg("gamma"));
  m.def("first_order_integral",
        [](double x, double R, double a, double gamma) {
          return first_order_integral(x, SharpnessSpec(R, a, gamma));
        },
        py::arg("x"), py::arg("R"), py::arg("a"), py::arg("gamma"));
  m.def("taylor_tail_bound",
        [](double R, double a, double gamma) {
          return taylor_tail_bound(SharpnessSpec(R, a, gamma));
        },
        py::arg("R"), py::arg("a"), py::arg("gamma"));

  m.def("fit_rate",
        [](const std::vector<std::pair<double, double>>& samples) {
          const RateFit f = fit_rate(samples);
          return std::make_tuple(f.slope, f.intercept, f.r_squared, f.n_used);
        },
        py::arg("samples"));
  m.def("limit_functional",
        [](const SpectralFunction& spec, double x, std::optional<double> beta,
           double gamma, double a) {
          return limit_functional(spec, x, beta, gamma, a);
        },
        py::arg("spec"), py::arg("x"), py::arg("beta"), py::arg("gamma"),
        py::arg("a"));

  m.attr("__version__") = "0.1.0";
}
