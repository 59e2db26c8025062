#include <cmath>
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rcoulomb/errors.hpp"
#include "rcoulomb/fourier.hpp"
#include "rcoulomb/magnetic_models.hpp"
#include "rcoulomb/potential.hpp"
#include "rcoulomb/spectral_solver.hpp"
#include "rcoulomb/verification.hpp"

namespace py = pybind11;
using namespace rcoulomb;

namespace {

// (k, numerator, denominator) triples keep the weights exact on the Python side.
std::vector<std::tuple<int, std::string, std::string>> exact_terms(
    const std::vector<std::pair<int, Rational>>& terms) {
  std::vector<std::tuple<int, std::string, std::string>> out;
  for (const auto& [k, w] : terms) {
    out.emplace_back(k, boost::multiprecision::numerator(w).str(),
                     boost::multiprecision::denominator(w).str());
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Regularized one-dimensional Coulomb potentials V_m";
  m.attr("__version__") = std::string(library_version());

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  m.def(
      "v",
      [](double order, double x, const std::string& method, double rel_tol) {
        QuadratureSpec spec;
        spec.rel_tol = rel_tol;
        const EvalResult r = v(order, x, parse_strategy(method), spec);
        return py::make_tuple(r.value, r.error_estimate, std::string(to_string(r.strategy)));
      },
      py::arg("m"), py::arg("x"), py::arg("method") = "auto", py::arg("rel_tol") = 1e-12,
      "(value, error estimate, strategy used)");
  m.def("vm", &vm, py::arg("m"), py::arg("x"));
  m.def("v_at_zero", &v_at_zero, py::arg("m"));
  m.def("v_derivative", &v_derivative, py::arg("m"), py::arg("x"));
  m.def("v_av", &v_av, py::arg("N"), py::arg("x"));
  m.def(
      "bracket",
      [](double order, double x) {
        const Bracket b = bracket(order, x);
        return py::make_tuple(b.lower, b.upper);
      },
      py::arg("m"), py::arg("x"));
  m.def("fourier_v", [](double order, double xi) { return fourier_v(order, xi); }, py::arg("m"),
        py::arg("xi"));

  m.def(
      "pair_decomposition",
      [](int m1, int m2, bool antisymmetrize) {
        return exact_terms(pair_decomposition(m1, m2, antisymmetrize).exact);
      },
      py::arg("m1"), py::arg("m2"), py::arg("antisymmetrize") = false);
  m.def("slater_weights", [](int n) { return exact_terms(slater_weights_exact(n)); }, py::arg("N"));
  m.def("energy_reconstruct", &energy_reconstruct, py::arg("e_h"), py::arg("N"), py::arg("B"));
  m.def(
      "delta_gaussian_pairing",
      [](double order, double beta) {
        return delta_pairing(order, beta, [](double x) { return std::exp(-x * x); });
      },
      py::arg("m"), py::arg("beta"));

  m.def(
      "spectrum",
      [](const std::string& model, int n, double z, double b, int points, double half_width,
         double tol) {
        GridChoice choice = default_grid(n);
        if (points > 0) choice.points = points;
        if (half_width > 0.0) choice.half_width = half_width;
        const SpectrumResult r =
            spectrum(FieldConfig(n, z, b), parse_model(model), Grid1D(choice.half_width, choice.points), tol);
        py::dict out;
        out["E_0"] = r.state.energy;
        out["E_0_conf"] = r.e_conf;
        out["residual"] = r.state.residual;
        out["iterations"] = r.state.iterations;
        out["certified"] = r.state.certified;
        out["grid_points"] = choice.points;
        out["half_width"] = choice.half_width;
        return out;
      },
      py::arg("model"), py::arg("N"), py::arg("Z"), py::arg("B"), py::arg("grid_points") = 0,
      py::arg("half_width") = 0.0, py::arg("tol") = 1e-10);

  m.def("suite_names", &suite_names);
  m.def(
      "verify_json",
      [](const std::string& suite) {
        py::gil_scoped_release release;
        return run_verification(suite).to_json().dump();
      },
      py::arg("suite") = "all");
}
