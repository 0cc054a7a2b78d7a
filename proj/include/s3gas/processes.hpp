// processes.hpp — derived physics on top of the three evaluation routes:
// constant-entropy (adiabatic) processes, the displacement-law peak of the
// modified spectral density, the free-space black-body reference, and the
// equation-of-state residual.
//
// For the quadrature and asymptotic routes entropy is a function of RT
// alone, so an adiabat is exactly RT = const and U, F ~ 1/R, P ~ 1/R^4
// along it. The exact-sum route breaks that scaling at small RT; its RT
// drift along a solved trajectory is reported as data, not asserted away.

#pragma once

#include <vector>

#include "s3gas/continuum.hpp"

namespace s3gas::processes {

/// One point of a constant-entropy trajectory.
struct AdiabatPoint {
  double R;
  double T;
  double rt;
  ThermoReport report;
};

/// The unique T > 0 with S(R, T) = S0 for the chosen method (S is strictly
/// increasing in T). Bracket seeded by inverting the closed-form entropy
/// cubic, then expanded geometrically if needed; expansion failure throws.
double adiabat_temperature(const Geometry& geom, double S0, Method method,
                           const numerics::QuadratureSettings& settings = {});

/// Constant-entropy trajectory at `steps` geometrically spaced radii in
/// [r_min, r_max]. Solver failures identify the offending radius.
std::vector<AdiabatPoint> adiabat_trajectory(
    double S0, double r_min, double r_max, int steps, Method method,
    const numerics::QuadratureSettings& settings = {});

/// Location x > 0 of the maximum of spectral_density(x; a), from the root
/// of the log-derivative 2/x + x/(x^2+a^2) - 1/(1-e^{-x}) on a verified
/// bracket. a = 0 gives the classical displacement-law root 2.8214394.
/// The peak moves DOWN as a grows: the geometric factor sqrt(x^2+a^2)/x
/// boosts small x the most.
double wien_peak(double a);

/// Free-space black-body values at the same volume V = 2 pi^2 R^3
/// (U = (pi^2/15) V T^4, N = 4 zeta(3) R^3 T^3, ...), method tag
/// asymptotic. The compact-space U exceeds this at every state.
ThermoReport free_space_reference(const ThermoState& state);

/// rho_E - [3P - c/R^2 sqrt(P)] with the chosen method's rho_E and P;
/// c = asymptotics::kEosCoefficient. Vanishes at large RT.
double eos_residual(const ThermoState& state, Method method,
                    const numerics::QuadratureSettings& settings = {});

}  // namespace s3gas::processes
