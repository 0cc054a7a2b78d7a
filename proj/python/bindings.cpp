// Python bindings for the s3gas core: spectrum enumeration, the three
// thermodynamic evaluation routes, adiabats, spectral peaks and the
// equation of state.

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "s3gas/asymptotics.hpp"
#include "s3gas/continuum.hpp"
#include "s3gas/modesum.hpp"
#include "s3gas/numerics.hpp"
#include "s3gas/processes.hpp"
#include "s3gas/spectrum.hpp"

namespace py = pybind11;
using namespace s3gas;

namespace {

std::vector<std::vector<std::complex<double>>> matrix_rows(
    const spectrum::ComplexMatrix& m) {
  std::vector<std::vector<std::complex<double>>> rows(m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r) {
    rows[r].resize(m.dim());
    for (std::size_t c = 0; c < m.dim(); ++c) {
      rows[r][c] = m(r, c);
    }
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(s3gas, m) {
  m.doc() = "Photon gas on R x S^3: mode spectrum and equilibrium "
            "statistical mechanics by exact mode sum, continuum quadrature "
            "and closed-form asymptotics";

  py::class_<Geometry>(m, "Geometry")
      .def(py::init<double>(), py::arg("radius"))
      .def_readonly("radius", &Geometry::radius)
      .def("volume", &Geometry::volume)
      .def("__repr__", [](const Geometry& g) {
        return "Geometry(radius=" + std::to_string(g.radius) + ")";
      });

  py::class_<ThermoState>(m, "ThermoState")
      .def(py::init<Geometry, double>(), py::arg("geometry"),
           py::arg("temperature"))
      .def_readonly("geometry", &ThermoState::geometry)
      .def_readonly("temperature", &ThermoState::temperature)
      .def_property_readonly("rt", &ThermoState::rt);

  py::enum_<Method>(m, "Method")
      .value("exact_sum", Method::exact_sum)
      .value("quadrature", Method::quadrature)
      .value("asymptotic", Method::asymptotic);

  py::enum_<Quality>(m, "Quality")
      .value("ok", Quality::ok)
      .value("extrapolated", Quality::extrapolated);

  py::class_<ThermoReport>(m, "ThermoReport")
      .def_readonly("method", &ThermoReport::method)
      .def_readonly("R", &ThermoReport::R)
      .def_readonly("T", &ThermoReport::T)
      .def_readonly("V", &ThermoReport::V)
      .def_readonly("N", &ThermoReport::N)
      .def_readonly("U", &ThermoReport::U)
      .def_readonly("F", &ThermoReport::F)
      .def_readonly("Omega", &ThermoReport::Omega)
      .def_readonly("P", &ThermoReport::P)
      .def_readonly("S", &ThermoReport::S)
      .def_readonly("rho_E", &ThermoReport::rho_E)
      .def_readonly("quality", &ThermoReport::quality)
      .def_property_readonly("rt", &ThermoReport::rt)
      .def("__repr__", [](const ThermoReport& r) {
        return "ThermoReport(method=" + to_string(r.method) +
               ", R=" + std::to_string(r.R) + ", T=" + std::to_string(r.T) +
               ", U=" + std::to_string(r.U) + ")";
      });

  py::class_<spectrum::ModeLevel>(m, "ModeLevel")
      .def_readonly("n", &spectrum::ModeLevel::n)
      .def_readonly("j", &spectrum::ModeLevel::j)
      .def_readonly("energy", &spectrum::ModeLevel::energy)
      .def_readonly("degeneracy", &spectrum::ModeLevel::degeneracy)
      .def("__repr__", [](const spectrum::ModeLevel& l) {
        return "ModeLevel(n=" + std::to_string(l.n) +
               ", energy=" + std::to_string(l.energy) + ")";
      });

  py::class_<processes::AdiabatPoint>(m, "AdiabatPoint")
      .def_readonly("R", &processes::AdiabatPoint::R)
      .def_readonly("T", &processes::AdiabatPoint::T)
      .def_readonly("rt", &processes::AdiabatPoint::rt)
      .def_readonly("report", &processes::AdiabatPoint::report);

  // spectrum
  m.def("mode_energy", &spectrum::mode_energy, py::arg("n"), py::arg("geometry"));
  m.def("degeneracy", &spectrum::degeneracy, py::arg("n"));
  m.def("enumerate_levels", &spectrum::enumerate_levels, py::arg("geometry"),
        py::arg("energy_cutoff"));
  m.def("cumulative_state_count", &spectrum::cumulative_state_count,
        py::arg("geometry"), py::arg("n_max"));
  m.def(
      "generator_matrices",
      [](double j) {
        const auto gen = spectrum::build_generators(j);
        return py::make_tuple(matrix_rows(gen.jx), matrix_rows(gen.jy),
                              matrix_rows(gen.jz));
      },
      py::arg("j"), "Spin-j triple (Jx, Jy, Jz) as nested lists");
  m.def(
      "generator_commutator_residual",
      [](double j) {
        return spectrum::commutator_residual(spectrum::build_generators(j));
      },
      py::arg("j"));
  m.def(
      "generator_casimir_residual",
      [](double j) {
        return spectrum::casimir_residual(spectrum::build_generators(j));
      },
      py::arg("j"));
  m.def(
      "so4_casimir",
      [](double j) {
        return spectrum::so4_casimir_value(spectrum::build_generators(j));
      },
      py::arg("j"));

  // numerics
  m.attr("ZETA2") = numerics::kZeta2;
  m.attr("ZETA3") = numerics::kZeta3;
  m.attr("ZETA4") = numerics::kZeta4;
  m.def("bose_integral", &numerics::bose_integral, py::arg("s"));
  m.def(
      "integrate_semi_infinite",
      [](const std::function<double(double)>& f, double rel_tol) {
        numerics::QuadratureSettings s;
        s.relative_tolerance = rel_tol;
        return numerics::integrate_semi_infinite(f, s);
      },
      py::arg("f"), py::arg("rel_tol") = 1e-10);

  // continuum
  m.def("density_of_states", &continuum::density_of_states, py::arg("eps"),
        py::arg("geometry"));
  m.def("spectral_density", &continuum::spectral_density, py::arg("x"),
        py::arg("a"));
  auto with_tol = [](auto fn) {
    return [fn](const ThermoState& state, double quad_tol) {
      numerics::QuadratureSettings s;
      s.relative_tolerance = quad_tol;
      return fn(state, s);
    };
  };
  m.def("photon_number", with_tol([](const ThermoState& st, const auto& s) {
          return continuum::photon_number(st, s);
        }),
        py::arg("state"), py::arg("quad_tol") = 1e-10);
  m.def("internal_energy", with_tol([](const ThermoState& st, const auto& s) {
          return continuum::internal_energy(st, s);
        }),
        py::arg("state"), py::arg("quad_tol") = 1e-10);
  m.def("free_energy", with_tol([](const ThermoState& st, const auto& s) {
          return continuum::free_energy(st, s);
        }),
        py::arg("state"), py::arg("quad_tol") = 1e-10);
  m.def("entropy", with_tol([](const ThermoState& st, const auto& s) {
          return continuum::entropy(st, s);
        }),
        py::arg("state"), py::arg("quad_tol") = 1e-10);
  m.def("pressure", with_tol([](const ThermoState& st, const auto& s) {
          return continuum::pressure(st, s);
        }),
        py::arg("state"), py::arg("quad_tol") = 1e-10);
  m.def("energy_density", with_tol([](const ThermoState& st, const auto& s) {
          return continuum::energy_density(st, s);
        }),
        py::arg("state"), py::arg("quad_tol") = 1e-10);
  m.def("thermo_report", with_tol([](const ThermoState& st, const auto& s) {
          return continuum::thermo_report(st, s);
        }),
        py::arg("state"), py::arg("quad_tol") = 1e-10);

  // asymptotics
  m.attr("EOS_COEFFICIENT") = asymptotics::kEosCoefficient;
  m.def("energy_asym", &asymptotics::energy_asym, py::arg("state"));
  m.def("free_energy_asym", &asymptotics::free_energy_asym, py::arg("state"));
  m.def("pressure_asym", &asymptotics::pressure_asym, py::arg("state"));
  m.def("entropy_asym", &asymptotics::entropy_asym, py::arg("state"));
  m.def("energy_density_asym", &asymptotics::energy_density_asym,
        py::arg("state"));
  m.def("eos_density_from_pressure", &asymptotics::eos_density_from_pressure,
        py::arg("pressure"), py::arg("geometry"));
  m.def("thermo_report_asym", &asymptotics::thermo_report, py::arg("state"));

  // modesum
  m.def("exact_report", &modesum::exact_report, py::arg("state"),
        py::arg("rel_tol") = 1e-10);
  m.def("level_occupancy", &modesum::level_occupancy, py::arg("state"),
        py::arg("n"));

  // processes
  m.def(
      "adiabat_temperature",
      [](const Geometry& geom, double S0, Method method, double quad_tol) {
        numerics::QuadratureSettings s;
        s.relative_tolerance = quad_tol;
        return processes::adiabat_temperature(geom, S0, method, s);
      },
      py::arg("geometry"), py::arg("S0"), py::arg("method"),
      py::arg("quad_tol") = 1e-10);
  m.def(
      "adiabat_trajectory",
      [](double S0, double r_min, double r_max, int steps, Method method,
         double quad_tol) {
        numerics::QuadratureSettings s;
        s.relative_tolerance = quad_tol;
        return processes::adiabat_trajectory(S0, r_min, r_max, steps, method, s);
      },
      py::arg("S0"), py::arg("r_min"), py::arg("r_max"), py::arg("steps"),
      py::arg("method"), py::arg("quad_tol") = 1e-10);
  m.def("wien_peak", &processes::wien_peak, py::arg("a"));
  m.def("free_space_reference", &processes::free_space_reference,
        py::arg("state"));
  m.def(
      "eos_residual",
      [](const ThermoState& state, Method method, double quad_tol) {
        numerics::QuadratureSettings s;
        s.relative_tolerance = quad_tol;
        return processes::eos_residual(state, method, s);
      },
      py::arg("state"), py::arg("method"), py::arg("quad_tol") = 1e-10);
}
