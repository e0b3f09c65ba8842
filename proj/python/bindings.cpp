#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "startail/exact_oracles.hpp"
#include "startail/mc_simulator.hpp"
#include "startail/rate_core.hpp"
#include "startail/serialize.hpp"
#include "startail/variational.hpp"
#include "startail/verification.hpp"

namespace py = pybind11;
namespace st = startail;

namespace {

// Reports with nested variants cross the boundary as JSON text; the Python
// package decodes them into dicts.
template <class T>
std::string as_json(const T& v) {
  st::Json j = v;
  return st::dump(j, -1);
}

std::string regime_json(const st::RegimeTag& tag) {
  st::Json j;
  st::to_json(j, tag);
  return st::dump(j, -1);
}

}  // namespace

PYBIND11_MODULE(_startail, m) {
  m.doc() = "Upper tails of star counts in G(n, p)";

  py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);
  py::register_exception<std::length_error>(m, "GuardError", PyExc_ValueError);

  py::class_<st::StarParams>(m, "StarParams")
      .def(py::init([](int r, std::int64_t n, double p, std::optional<std::int64_t> N) {
             return st::StarParams::make(r, n, p, N);
           }),
           py::arg("r"), py::arg("n"), py::arg("p"), py::arg("N") = py::none())
      .def_readonly("r", &st::StarParams::r)
      .def_readonly("n", &st::StarParams::n)
      .def_readonly("p", &st::StarParams::p)
      .def_readonly("N", &st::StarParams::N)
      .def_readonly("mu", &st::StarParams::mu)
      .def_readonly("nu", &st::StarParams::nu)
      .def_readonly("rho", &st::StarParams::rho)
      .def("__repr__", [](const st::StarParams& s) { return "StarParams(" + as_json(s) + ")"; });

  py::class_<st::VariationalSolution>(m, "VariationalSolution")
      .def_readonly("c", &st::VariationalSolution::c)
      .def_readonly("eps", &st::VariationalSolution::eps)
      .def_readonly("r", &st::VariationalSolution::r)
      .def_readonly("value", &st::VariationalSolution::value)
      .def_readonly("minimizers", &st::VariationalSolution::minimizers)
      .def_readonly("alpha", &st::VariationalSolution::alpha)
      .def("to_json", &as_json<st::VariationalSolution>);

  py::class_<st::CriticalConstants>(m, "CriticalConstants")
      .def_readonly("alpha0", &st::CriticalConstants::alpha0)
      .def_readonly("alpha1", &st::CriticalConstants::alpha1)
      .def_readonly("c_crit", &st::CriticalConstants::c_crit)
      .def_readonly("eps", &st::CriticalConstants::eps)
      .def_readonly("r", &st::CriticalConstants::r)
      .def("to_json", &as_json<st::CriticalConstants>);

  py::class_<st::TailEstimate>(m, "TailEstimate")
      .def_readonly("estimate", &st::TailEstimate::estimate)
      .def_readonly("log_estimate", &st::TailEstimate::log_estimate)
      .def_readonly("std_error", &st::TailEstimate::std_error)
      .def_readonly("samples", &st::TailEstimate::samples)
      .def_readonly("seed", &st::TailEstimate::seed)
      .def_readonly("hits", &st::TailEstimate::hits)
      .def_property_readonly("estimator", [](const st::TailEstimate& e) { return st::estimator_name(e.estimator); })
      .def("to_json", &as_json<st::TailEstimate>);

  m.def("phi", &st::phi, py::arg("eps"));
  m.def("psi", &st::psi, py::arg("r"), py::arg("delta"));
  m.def("entropy_hp", &st::entropy_hp, py::arg("p"), py::arg("lam"));
  m.def("phi_order", &st::phi_order, py::arg("params"));
  m.def(
      "classify_regime_json",
      [](const st::StarParams& s, double window) { return regime_json(st::classify_regime(s, window)); },
      py::arg("params"), py::arg("window") = 4.0);
  m.def(
      "rate_report_json",
      [](const st::StarParams& s, double eps, double window) { return as_json(st::rate_report(s, eps, window)); },
      py::arg("params"), py::arg("eps"), py::arg("window") = 4.0);
  m.def("chernoff_upper_log", &st::chernoff_upper_log, py::arg("n"), py::arg("p"), py::arg("t"));
  m.def("binom_point_lower_log", &st::binom_point_lower_log, py::arg("n"), py::arg("p"), py::arg("k"));

  m.def("solve", [](double c, double eps, int r) { return st::solve(c, eps, r); }, py::arg("c"), py::arg("eps"),
        py::arg("r"));
  m.def("critical_constants", [](double eps, int r) { return st::critical_constants(eps, r); }, py::arg("eps"),
        py::arg("r"));
  m.def("f_alpha", &st::f_alpha, py::arg("alpha"), py::arg("delta"), py::arg("eps"), py::arg("r"));

  m.def(
      "exact_gnp_star_tail", [](int n, double p, int r, double eps) { return st::exact_gnp_star_tail(n, p, r, eps); },
      py::arg("n"), py::arg("p"), py::arg("r"), py::arg("eps"));
  m.def(
      "exact_iid_tail",
      [](std::int64_t n, std::int64_t N, double p, int r, double eps) { return st::exact_iid_tail(n, N, p, r, eps); },
      py::arg("n"), py::arg("N"), py::arg("p"), py::arg("r"), py::arg("eps"));
  m.def(
      "count_graphs_with_degrees",
      [](std::vector<int> d) { return st::count_graphs_with_degrees(st::DegreeSequence(std::move(d))); },
      py::arg("degrees"));
  m.def("convex_sum_min", &st::convex_sum_min, py::arg("r"), py::arg("N"), py::arg("n"), py::arg("t"));

  m.def(
      "naive_tail",
      [](const st::StarParams& s, double eps, std::int64_t samples, std::uint64_t seed, const std::string& mode,
         int workers) {
        if (mode != "gnp" && mode != "iid") throw std::invalid_argument("invalid mode: " + mode);
        st::SimulationOptions opt;
        opt.workers = workers;
        py::gil_scoped_release release;
        return st::naive_tail(s, eps, samples, seed, mode == "gnp" ? st::SampleMode::Gnp : st::SampleMode::Iid,
                              opt);
      },
      py::arg("params"), py::arg("eps"), py::arg("samples"), py::arg("seed"), py::arg("mode") = "gnp",
      py::arg("workers") = 0);
  m.def(
      "tilted_tail",
      [](std::int64_t n, std::int64_t N, double p, int r, double eps, std::int64_t samples, std::uint64_t seed,
         std::optional<std::int64_t> R, std::optional<double> h, int workers) {
        st::SimulationOptions opt;
        opt.workers = workers;
        py::gil_scoped_release release;
        return st::tilted_tail(st::TiltedConfig{n, N, p, r, eps, R, h, false}, samples, seed, opt).estimate;
      },
      py::arg("n"), py::arg("N"), py::arg("p"), py::arg("r"), py::arg("eps"), py::arg("samples"), py::arg("seed"),
      py::arg("R") = py::none(), py::arg("h") = py::none(), py::arg("workers") = 0);

  m.def(
      "run_suite",
      [](const std::string& suite) {
        py::list out;
        for (const auto& c : st::run_suite(suite)) out.append(py::make_tuple(c.name, c.passed, c.detail));
        return out;
      },
      py::arg("suite"));
}
