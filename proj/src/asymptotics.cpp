#include "s3gas/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace s3gas::asymptotics {

using numerics::kPi;
using numerics::kZeta2;
using numerics::kZeta4;

const double kEosCoefficient = kZeta2 / (kPi * std::sqrt(2.0 * kZeta4));

bool within_accuracy_domain(const ThermoState& state) {
  return state.rt() >= kAccuracyDomainMinRT;
}

double energy_asym(const ThermoState& state) {
  const double r = state.geometry.radius;
  const double t = state.temperature;
  return 12.0 * kZeta4 * r * r * r * t * t * t * t + kZeta2 * r * t * t;
}

double free_energy_asym(const ThermoState& state) {
  const double r = state.geometry.radius;
  const double t = state.temperature;
  return -(4.0 * kZeta4 * r * r * r * t * t * t * t + kZeta2 * r * t * t);
}

double pressure_asym(const ThermoState& state) {
  return -free_energy_asym(state) / state.geometry.volume();
}

double entropy_asym(const ThermoState& state) {
  const double r = state.geometry.radius;
  const double t = state.temperature;
  return 16.0 * kZeta4 * r * r * r * t * t * t + 2.0 * kZeta2 * r * t;
}

double energy_density_asym(const ThermoState& state) {
  return energy_asym(state) / state.geometry.volume();
}

double eos_density_from_pressure(double pressure, const Geometry& geom) {
  if (!std::isfinite(pressure) || pressure <= 0.0) {
    throw std::invalid_argument(
        "eos_density_from_pressure: pressure must be > 0");
  }
  const double r = geom.radius;
  return 3.0 * pressure - kEosCoefficient / (r * r) * std::sqrt(pressure);
}

ThermoReport thermo_report(const ThermoState& state) {
  ThermoReport rep;
  rep.method = Method::asymptotic;
  rep.R = state.geometry.radius;
  rep.T = state.temperature;
  rep.V = state.geometry.volume();
  rep.N = std::numeric_limits<double>::quiet_NaN();
  rep.U = energy_asym(state);
  rep.F = free_energy_asym(state);
  rep.Omega = rep.F;
  rep.P = -rep.F / rep.V;
  rep.S = (rep.U - rep.F) / state.temperature;
  rep.rho_E = rep.U / rep.V;
  rep.quality =
      within_accuracy_domain(state) ? Quality::ok : Quality::extrapolated;
  return rep;
}

}  // namespace s3gas::asymptotics
