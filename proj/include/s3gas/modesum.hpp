// modesum.hpp — exact Bose-Einstein sums over the discrete S^3 spectrum,
// the ground truth the quadrature and closed-form routes are validated
// against.
//
//   N = sum_{n>=2} 2n^2 / (e^{eps_n/T} - 1)
//   U = sum_{n>=2} 2n^2 eps_n / (e^{eps_n/T} - 1)
//   F = T sum_{n>=2} 2n^2 log(1 - e^{-eps_n/T})
//
// The zero mode n = 1 is excluded; including it would add a spurious 2T to
// the energy sum through the eps/(e^{eps/T}-1) -> T limit.
//
// Truncation: levels are accumulated in ascending n with Neumaier
// compensation until 16 consecutive levels each contribute less than
// rel_tol/100 of every running sum AND the analytic geometric tail bound
// (eps_{n+1} - eps_n >= 1/R, so occupations fall at least as fast as
// e^{-1/(RT)} per level) certifies the remainder below rel_tol. Exhausting
// the level budget raises an error instead of returning a silent
// underestimate.

#pragma once

#include "s3gas/continuum.hpp"

namespace s3gas::modesum {

inline constexpr int kLevelBudget = 10'000'000;

/// Exact-spectrum report. rel_tol must lie in (0, 1e-4].
/// Throws std::runtime_error if the tail criterion is not met within the
/// level budget.
ThermoReport exact_report(const ThermoState& state, double rel_tol = 1e-10);

/// Mean photon count on level n, 2n^2 / (e^{eps_n/T} - 1). Rejects n < 2.
double level_occupancy(const ThermoState& state, int n);

}  // namespace s3gas::modesum
