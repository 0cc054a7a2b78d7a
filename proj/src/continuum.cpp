#include "s3gas/continuum.hpp"

#include <cmath>
#include <stdexcept>

namespace s3gas {

std::string to_string(Method method) {
  switch (method) {
    case Method::exact_sum:
      return "exact-sum";
    case Method::quadrature:
      return "quadrature";
    case Method::asymptotic:
      return "asymptotic";
  }
  return "unknown";
}

std::string to_string(Quality quality) {
  return quality == Quality::ok ? "ok" : "extrapolated";
}

Method method_from_string(const std::string& name) {
  if (name == "exact" || name == "exact-sum") return Method::exact_sum;
  if (name == "quadrature") return Method::quadrature;
  if (name == "asymptotic") return Method::asymptotic;
  throw std::invalid_argument("unknown method '" + name +
                              "' (expected exact, quadrature or asymptotic)");
}

ThermoState::ThermoState(Geometry geom, double temp)
    : geometry(geom), temperature(temp) {
  if (!std::isfinite(temp) || temp <= 0.0) {
    throw std::invalid_argument("ThermoState: temperature must be positive");
  }
}

namespace continuum {

namespace {

// 1/(e^x - 1), stable across the whole half line.
double bose_occupation(double x) {
  if (x > 36.0) {
    const double e = std::exp(-x);
    return e / (1.0 - e);
  }
  return 1.0 / std::expm1(x);
}

// log(1 - e^{-x}), negative, integrable ~ log x at the origin.
double log_one_minus_exp(double x) {
  if (x > 36.0) {
    return -std::exp(-x);  // next term e^{-2x}/2 is below rounding
  }
  return std::log(-std::expm1(-x));
}

struct Integrals {
  double number;       // x sqrt(x^2+a^2) / (e^x - 1)
  double energy;       // x^2 sqrt(x^2+a^2) / (e^x - 1)
  double free_energy;  // x sqrt(x^2+a^2) log(1 - e^{-x}), negative
};

double integrate_named(const std::function<double(double)>& f,
                       const numerics::QuadratureSettings& settings,
                       const char* quantity) {
  try {
    return numerics::integrate_semi_infinite(f, settings);
  } catch (const std::exception& e) {
    throw std::runtime_error(std::string(quantity) + ": " + e.what());
  }
}

double number_integral(double a, const numerics::QuadratureSettings& s) {
  return integrate_named(
      [a](double x) {
        return x * std::sqrt(x * x + a * a) * bose_occupation(x);
      },
      s, "photon number integral");
}

double energy_integral(double a, const numerics::QuadratureSettings& s) {
  return integrate_named(
      [a](double x) { return spectral_density(x, a); }, s,
      "internal energy integral");
}

double free_energy_integral(double a, const numerics::QuadratureSettings& s) {
  return integrate_named(
      [a](double x) {
        return x * std::sqrt(x * x + a * a) * log_one_minus_exp(x);
      },
      s, "free energy integral");
}

}  // namespace

double density_of_states(double eps, const Geometry& geom) {
  if (!(eps >= 0.0)) {
    throw std::invalid_argument("density_of_states: eps must be >= 0");
  }
  const double r = geom.radius;
  return 2.0 * r * r * r * std::sqrt(eps * eps + 1.0 / (r * r)) * eps;
}

double spectral_density(double x, double a) {
  if (x <= 0.0) return 0.0;
  return x * x * std::sqrt(x * x + a * a) * bose_occupation(x);
}

double photon_number(const ThermoState& state,
                     const numerics::QuadratureSettings& settings) {
  const double r = state.geometry.radius;
  const double t = state.temperature;
  return 2.0 * r * r * r * t * t * t *
         number_integral(1.0 / state.rt(), settings);
}

double internal_energy(const ThermoState& state,
                       const numerics::QuadratureSettings& settings) {
  const double r = state.geometry.radius;
  const double t = state.temperature;
  return 2.0 * r * r * r * t * t * t * t *
         energy_integral(1.0 / state.rt(), settings);
}

double free_energy(const ThermoState& state,
                   const numerics::QuadratureSettings& settings) {
  const double r = state.geometry.radius;
  const double t = state.temperature;
  return 2.0 * r * r * r * t * t * t * t *
         free_energy_integral(1.0 / state.rt(), settings);
}

double entropy(const ThermoState& state,
               const numerics::QuadratureSettings& settings) {
  return (internal_energy(state, settings) - free_energy(state, settings)) /
         state.temperature;
}

double pressure(const ThermoState& state,
                const numerics::QuadratureSettings& settings) {
  return -free_energy(state, settings) / state.geometry.volume();
}

double energy_density(const ThermoState& state,
                      const numerics::QuadratureSettings& settings) {
  return internal_energy(state, settings) / state.geometry.volume();
}

ThermoReport thermo_report(const ThermoState& state,
                           const numerics::QuadratureSettings& settings) {
  const double r = state.geometry.radius;
  const double t = state.temperature;
  const double a = 1.0 / state.rt();
  const double r3 = r * r * r;

  ThermoReport rep;
  rep.method = Method::quadrature;
  rep.R = r;
  rep.T = t;
  rep.V = state.geometry.volume();
  rep.N = 2.0 * r3 * t * t * t * number_integral(a, settings);
  rep.U = 2.0 * r3 * t * t * t * t * energy_integral(a, settings);
  rep.F = 2.0 * r3 * t * t * t * t * free_energy_integral(a, settings);
  rep.Omega = rep.F;
  rep.P = -rep.F / rep.V;
  rep.S = (rep.U - rep.F) / t;
  rep.rho_E = rep.U / rep.V;
  rep.quality = Quality::ok;
  return rep;
}

}  // namespace continuum
}  // namespace s3gas
