// asymptotics.hpp — closed-form large-RT expansions of the thermodynamic
// quantities and the equation of state:
//
//   U     =  12 zeta(4) R^3 T^4 +   zeta(2) R T^2
//   F     = -(4 zeta(4) R^3 T^4 +   zeta(2) R T^2)
//   S     =  16 zeta(4) R^3 T^3 + 2 zeta(2) R T
//   P     = -F / (2 pi^2 R^3)
//   rho_E =  U / (2 pi^2 R^3)
//   rho   ~  3P - zeta(2)/(pi sqrt(2 zeta(4)) R^2) sqrt(P)
//
// There is no closed form for the photon number N: its subleading term
// would involve the divergent zeta(1), so N is only available from the
// quadrature and exact-sum routes.

#pragma once

#include "s3gas/continuum.hpp"

namespace s3gas::asymptotics {

/// Coefficient of the sqrt(P) finite-size correction in the equation of
/// state, zeta(2) / (pi sqrt(2 zeta(4))).
extern const double kEosCoefficient;

/// Documented accuracy domain of the closed forms. Below this the values
/// are still returned, flagged Quality::extrapolated.
inline constexpr double kAccuracyDomainMinRT = 5.0;

bool within_accuracy_domain(const ThermoState& state);

double energy_asym(const ThermoState& state);
double free_energy_asym(const ThermoState& state);  // always negative
double pressure_asym(const ThermoState& state);     // -F/V, identity exact
double entropy_asym(const ThermoState& state);
double energy_density_asym(const ThermoState& state);  // U/V, identity exact

/// Density from pressure via the large-RT equation of state,
/// 3P - kEosCoefficient / R^2 * sqrt(P). Rejects P <= 0.
double eos_density_from_pressure(double pressure, const Geometry& geom);

/// Bundled closed-form report (method tag asymptotic, N = NaN).
ThermoReport thermo_report(const ThermoState& state);

}  // namespace s3gas::asymptotics
