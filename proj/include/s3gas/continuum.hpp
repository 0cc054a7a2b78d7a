// continuum.hpp — statistical mechanics of the photon gas on S^3 in the
// continuum approximation: density of states
//
//   rho(eps) = 2 R^3 sqrt(eps^2 + R^-2) eps
//
// and the thermodynamic integrals evaluated by adaptive quadrature. All
// quantities depend on (R, T) only through the product RT and an overall
// power of R. The chemical potential is zero throughout, so Omega = F.

#pragma once

#include <string>

#include "s3gas/numerics.hpp"
#include "s3gas/spectrum.hpp"

namespace s3gas {

/// Which of the three cross-validating evaluation routes produced a report.
enum class Method { exact_sum, quadrature, asymptotic };

/// Closed forms are quoted for RT >= 5; below that they are flagged as
/// extrapolated rather than rejected.
enum class Quality { ok, extrapolated };

std::string to_string(Method method);
std::string to_string(Quality quality);
Method method_from_string(const std::string& name);  // accepts "exact" too

/// An evaluation point: geometry plus temperature (energy units).
struct ThermoState {
  Geometry geometry;
  double temperature;

  ThermoState(Geometry geom, double temp);

  [[nodiscard]] double rt() const { return geometry.radius * temperature; }
};

/// The full set of equilibrium quantities at one state.
/// Invariants: Omega == F (mu = 0), P == -F/V, S == (U - F)/T.
/// The asymptotic method has no closed form for N and stores NaN there.
struct ThermoReport {
  Method method = Method::quadrature;
  double R = 0.0;
  double T = 0.0;
  double V = 0.0;       // 2 pi^2 R^3
  double N = 0.0;       // photon count
  double U = 0.0;       // internal energy
  double F = 0.0;       // free energy (negative)
  double Omega = 0.0;   // thermodynamic potential, == F
  double P = 0.0;       // pressure, -F/V
  double S = 0.0;       // entropy, (U - F)/T
  double rho_E = 0.0;   // energy density, U/V
  Quality quality = Quality::ok;

  [[nodiscard]] double rt() const { return R * T; }
};

namespace continuum {

/// rho(eps) = 2 R^3 sqrt(eps^2 + R^-2) eps. Zero at eps = 0; rejects
/// negative eps.
double density_of_states(double eps, const Geometry& geom);

/// Dimensionless spectral energy density u(x; a) = x^2 sqrt(x^2 + a^2) /
/// (e^x - 1) with x = eps/T and a = 1/(RT). The physical energy density per
/// unit eps is (T^4 / pi^2) u. a = 0 is the free-space Planck form
/// x^3/(e^x - 1); the limit value 0 is returned at x = 0.
double spectral_density(double x, double a);

/// One point of the dimensionless curve.
struct SpectralSample {
  double x;
  double u;
  double a;
};

double photon_number(const ThermoState& state,
                     const numerics::QuadratureSettings& settings = {});
double internal_energy(const ThermoState& state,
                       const numerics::QuadratureSettings& settings = {});
double free_energy(const ThermoState& state,
                   const numerics::QuadratureSettings& settings = {});
double entropy(const ThermoState& state,
               const numerics::QuadratureSettings& settings = {});
double pressure(const ThermoState& state,
                const numerics::QuadratureSettings& settings = {});
double energy_density(const ThermoState& state,
                      const numerics::QuadratureSettings& settings = {});

/// All quantities at once (the three integrals are evaluated once each).
/// Quadrature failures propagate with the failing quantity named.
ThermoReport thermo_report(const ThermoState& state,
                           const numerics::QuadratureSettings& settings = {});

}  // namespace continuum
}  // namespace s3gas
