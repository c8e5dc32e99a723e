#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <vector>

#include "lsv/coulomb.hpp"
#include "lsv/errors.hpp"
#include "lsv/oracle.hpp"
#include "lsv/oscillator.hpp"
#include "lsv/params.hpp"
#include "lsv/series.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

lsv::Normalization normalization(bool normalize) {
  return normalize ? lsv::Normalization::l2 : lsv::Normalization::none;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bound states of a neutral spin-1/2 particle in a Coulomb-like potential";

  auto base = py::register_exception<lsv::Error>(m, "LsvError", PyExc_RuntimeError);
  py::register_exception<lsv::RepulsiveBranch>(m, "RepulsiveBranch", base.ptr());
  py::register_exception<lsv::InvalidParameter>(m, "InvalidParameter", base.ptr());
  py::register_exception<lsv::InvalidInput>(m, "InvalidInput", base.ptr());
  py::register_exception<lsv::DegenerateDelta>(m, "DegenerateDelta", base.ptr());
  py::register_exception<lsv::NoPositiveRoot>(m, "NoPositiveRoot", base.ptr());
  py::register_exception<lsv::GridTooCoarse>(m, "GridTooCoarse", base.ptr());
  py::register_exception<lsv::NonUniformGrid>(m, "NonUniformGrid", base.ptr());

  py::class_<lsv::Background>(m, "Background")
      .def(py::init([](double g, double b, double B0, double mass, double k) {
             return lsv::Background{g, b, B0, mass, k};
           }),
           "g"_a, "b"_a, "B0"_a, "mass"_a = 1.0, "k"_a = 0.0)
      .def_readwrite("g", &lsv::Background::g)
      .def_readwrite("b", &lsv::Background::b)
      .def_readwrite("B0", &lsv::Background::B0)
      .def_readwrite("mass", &lsv::Background::mass)
      .def_readwrite("k", &lsv::Background::k)
      .def("coupling", &lsv::Background::coupling)
      .def("__repr__", [](const lsv::Background& bg) {
        return py::str("Background(g={}, b={}, B0={}, mass={}, k={})")
            .format(bg.g, bg.b, bg.B0, bg.mass, bg.k);
      });

  py::class_<lsv::QuantumNumbers>(m, "QuantumNumbers")
      .def(py::init([](int n, int l, int s) { return lsv::QuantumNumbers{n, l, s}; }), "n"_a,
           "l"_a, "s"_a = 1)
      .def_readwrite("n", &lsv::QuantumNumbers::n)
      .def_readwrite("l", &lsv::QuantumNumbers::l)
      .def_readwrite("s", &lsv::QuantumNumbers::s)
      .def(py::self == py::self)
      .def("__repr__", [](const lsv::QuantumNumbers& qn) {
        return py::str("QuantumNumbers(n={}, l={}, s={})").format(qn.n, qn.l, qn.s);
      });

  m.def("effective_nu", &lsv::effective_nu, "qn"_a);
  m.def("coulomb_delta", &lsv::coulomb_delta, "bg"_a, "qn"_a);
  m.def("degeneracy_partner", &lsv::degeneracy_partner, "qn"_a);
  m.def("zeta_sq_from_energy", &lsv::zeta_sq_from_energy, "bg"_a, "energy"_a);
  m.def("energy_from_zeta_sq", &lsv::energy_from_zeta_sq, "bg"_a, "zeta_sq"_a);

  m.def("kummer_m", &lsv::kummer_m, "a"_a, "b"_a, "x"_a,
        "n_terms"_a = lsv::kKummerDefaultTerms);
  m.def("coulomb_level", &lsv::coulomb_level, "bg"_a, "qn"_a);
  m.def("coulomb_energy", &lsv::coulomb_energy, "bg"_a, "qn"_a);
  m.def(
      "coulomb_wavefunction",
      [](const lsv::Background& bg, const lsv::QuantumNumbers& qn, const std::vector<double>& rho,
         bool normalize) {
        return lsv::coulomb_wavefunction(bg, qn, rho, normalization(normalize));
      },
      "bg"_a, "qn"_a, "rho"_a, "normalize"_a = false);

  m.def(
      "heun_coeffs",
      [](double alpha_bar, double g_param, double delta_scaled, int n) {
        return lsv::heun_coeffs(alpha_bar, g_param, delta_scaled, n).coeffs;
      },
      "alpha_bar"_a, "g_param"_a, "delta_scaled"_a, "n"_a);
  m.def("quantization_residual", &lsv::quantization_residual, "bg"_a, "qn"_a, "omega"_a);
  m.def(
      "solve_frequencies",
      [](const lsv::Background& bg, const lsv::QuantumNumbers& qn) {
        return lsv::solve_frequencies(bg, qn).roots;
      },
      "bg"_a, "qn"_a, "Ascending positive frequencies that truncate the Heun series at degree n.");
  m.def("oscillator_energy", &lsv::oscillator_energy, "bg"_a, "qn"_a, "omega"_a);
  m.def("oscillator_zeta_sq", &lsv::oscillator_zeta_sq, "bg"_a, "qn"_a, "omega"_a);
  m.def(
      "oscillator_wavefunction",
      [](const lsv::Background& bg, const lsv::QuantumNumbers& qn, double omega,
         const std::vector<double>& rho, bool normalize) {
        return lsv::oscillator_wavefunction(bg, qn, omega, rho, normalization(normalize));
      },
      "bg"_a, "qn"_a, "omega"_a, "rho"_a, "normalize"_a = false);

  py::class_<lsv::GridSpec>(m, "GridSpec")
      .def_static("cell_centered", &lsv::GridSpec::cell_centered, "extent"_a, "points"_a)
      .def_readonly("rho_min", &lsv::GridSpec::rho_min)
      .def_readonly("rho_max", &lsv::GridSpec::rho_max)
      .def_readonly("points", &lsv::GridSpec::points)
      .def("spacing", &lsv::GridSpec::spacing)
      .def("extent", &lsv::GridSpec::extent);

  py::class_<lsv::OracleResult>(m, "OracleResult")
      .def_readonly("zeta_sq_values", &lsv::OracleResult::zeta_sq_values)
      .def_readonly("fine_values", &lsv::OracleResult::fine_values)
      .def_readonly("richardson_estimate", &lsv::OracleResult::richardson_estimate)
      .def_readonly("convergence_order", &lsv::OracleResult::convergence_order)
      .def_readonly("grid", &lsv::OracleResult::grid);

  m.def("default_coulomb_grid", &lsv::default_coulomb_grid, "bg"_a, "l"_a, "s"_a, "k_states"_a,
        "points"_a = 4000);
  m.def("default_oscillator_grid", &lsv::default_oscillator_grid, "bg"_a, "omega"_a,
        "points"_a = 4000);
  m.def(
      "eigensolve_coulomb",
      [](const lsv::Background& bg, int l, int s, const lsv::GridSpec& grid, int k_states,
         bool strict) {
        return lsv::eigensolve_coulomb(bg, l, s, grid, k_states, lsv::OracleOptions{strict});
      },
      "bg"_a, "l"_a, "s"_a, "grid"_a, "k_states"_a, "strict"_a = true);
  m.def(
      "eigensolve_oscillator",
      [](const lsv::Background& bg, int l, int s, double omega, const lsv::GridSpec& grid,
         int k_states, bool strict) {
        return lsv::eigensolve_oscillator(bg, l, s, omega, grid, k_states,
                                          lsv::OracleOptions{strict});
      },
      "bg"_a, "l"_a, "s"_a, "omega"_a, "grid"_a, "k_states"_a, "strict"_a = true);
  m.def("count_bound_states", &lsv::count_bound_states, "bg"_a, "l"_a, "s"_a, "grid"_a);
  m.def(
      "coulomb_residual",
      [](const lsv::Background& bg, const lsv::QuantumNumbers& qn, const std::vector<double>& rho,
         const std::vector<double>& G) {
        return lsv::residual_check(rho, G, lsv::coulomb_equation(bg, qn));
      },
      "bg"_a, "qn"_a, "rho"_a, "G"_a);
  m.def(
      "oscillator_residual",
      [](const lsv::Background& bg, const lsv::QuantumNumbers& qn, double omega,
         const std::vector<double>& rho, const std::vector<double>& G) {
        return lsv::residual_check(rho, G, lsv::oscillator_equation(bg, qn, omega));
      },
      "bg"_a, "qn"_a, "omega"_a, "rho"_a, "G"_a);
  m.def(
      "simpson",
      [](const std::vector<double>& x, const std::vector<double>& y) { return lsv::simpson(x, y); },
      "x"_a, "y"_a);
}
