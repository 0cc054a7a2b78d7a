#include "s3gas/processes.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "s3gas/asymptotics.hpp"
#include "s3gas/modesum.hpp"

namespace s3gas::processes {

namespace {

using numerics::kZeta2;
using numerics::kZeta3;
using numerics::kZeta4;

double entropy_by_method(const Geometry& geom, double temp, Method method,
                         const numerics::QuadratureSettings& settings) {
  const ThermoState state{geom, temp};
  switch (method) {
    case Method::exact_sum:
      return modesum::exact_report(state, settings.relative_tolerance).S;
    case Method::quadrature:
      return continuum::entropy(state, settings);
    case Method::asymptotic:
      return asymptotics::entropy_asym(state);
  }
  throw std::logic_error("entropy_by_method: unreachable");
}

ThermoReport report_by_method(const ThermoState& state, Method method,
                              const numerics::QuadratureSettings& settings) {
  switch (method) {
    case Method::exact_sum:
      return modesum::exact_report(state, settings.relative_tolerance);
    case Method::quadrature:
      return continuum::thermo_report(state, settings);
    case Method::asymptotic:
      return asymptotics::thermo_report(state);
  }
  throw std::logic_error("report_by_method: unreachable");
}

// Root of the closed-form entropy cubic a T^3 + b T = S0, used to seed the
// bracket for the other methods.
double invert_entropy_cubic(const Geometry& geom, double S0) {
  const double r = geom.radius;
  const double a = 16.0 * kZeta4 * r * r * r;
  const double b = 2.0 * kZeta2 * r;
  // S is monotone, and both single-term inversions overshoot, so the root
  // lies in (0, min(cube-root guess, linear guess)]. Doubling the top keeps
  // f(hi) > 0 safely clear of rounding for extreme S0.
  const double hi = std::min(std::cbrt(S0 / a), S0 / b);
  return numerics::find_root(
      [&](double t) { return a * t * t * t + b * t - S0; }, hi * 1e-9,
      2.0 * hi, 1e-12);
}

}  // namespace

double adiabat_temperature(const Geometry& geom, double S0, Method method,
                           const numerics::QuadratureSettings& settings) {
  if (!std::isfinite(S0) || S0 <= 0.0) {
    throw std::invalid_argument("adiabat_temperature: S0 must be > 0");
  }
  const double guess = invert_entropy_cubic(geom, S0);
  double lo = guess / 10.0;
  double hi = guess * 10.0;
  auto objective = [&](double t) {
    return entropy_by_method(geom, t, method, settings) - S0;
  };

  // S is strictly increasing in T; widen the bracket until it straddles S0.
  double f_lo = objective(lo);
  double f_hi = objective(hi);
  for (int expansion = 0; (f_lo > 0.0 || f_hi < 0.0); ++expansion) {
    if (expansion >= 40) {
      throw std::runtime_error(
          "adiabat_temperature: bracket expansion failed for S0 = " +
          std::to_string(S0));
    }
    if (f_lo > 0.0) {
      lo /= 10.0;
      f_lo = objective(lo);
    }
    if (f_hi < 0.0) {
      hi *= 10.0;
      f_hi = objective(hi);
    }
  }
  return numerics::find_root(objective, lo, hi, 1e-10);
}

std::vector<AdiabatPoint> adiabat_trajectory(
    double S0, double r_min, double r_max, int steps, Method method,
    const numerics::QuadratureSettings& settings) {
  if (!(r_min > 0.0) || !(r_min < r_max)) {
    throw std::invalid_argument(
        "adiabat_trajectory: need 0 < r_min < r_max");
  }
  if (steps < 2) {
    throw std::invalid_argument("adiabat_trajectory: need at least 2 steps");
  }
  const double ratio = r_max / r_min;
  std::vector<AdiabatPoint> points;
  points.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const double frac = static_cast<double>(i) / (steps - 1);
    const double r = r_min * std::pow(ratio, frac);
    const Geometry geom{r};
    try {
      const double t = adiabat_temperature(geom, S0, method, settings);
      const ThermoState state{geom, t};
      points.push_back({r, t, r * t, report_by_method(state, method, settings)});
    } catch (const std::exception& e) {
      throw std::runtime_error("adiabat_trajectory: failure at R = " +
                               std::to_string(r) + ": " + e.what());
    }
  }
  return points;
}

double wien_peak(double a) {
  if (!(a >= 0.0) || !std::isfinite(a)) {
    throw std::invalid_argument("wien_peak: a must be >= 0");
  }
  // Stationarity of log u(x; a): positive at small x, negative at large x.
  auto slope = [a](double x) {
    return 2.0 / x + x / (x * x + a * a) - 1.0 / (-std::expm1(-x));
  };
  double lo = 0.5;
  double hi = 6.0;
  for (int expansion = 0; slope(lo) <= 0.0 || slope(hi) >= 0.0; ++expansion) {
    if (expansion >= 20) {
      throw std::runtime_error("wien_peak: could not verify a bracket");
    }
    lo *= 0.5;
    hi *= 2.0;
  }
  return numerics::find_root(slope, lo, hi, 1e-12);
}

ThermoReport free_space_reference(const ThermoState& state) {
  const double r = state.geometry.radius;
  const double t = state.temperature;
  const double r3t3 = r * r * r * t * t * t;

  ThermoReport rep;
  rep.method = Method::asymptotic;
  rep.R = r;
  rep.T = t;
  rep.V = state.geometry.volume();
  rep.N = 4.0 * kZeta3 * r3t3;
  rep.U = 12.0 * kZeta4 * r3t3 * t;
  rep.F = -4.0 * kZeta4 * r3t3 * t;
  rep.Omega = rep.F;
  rep.P = -rep.F / rep.V;
  rep.S = (rep.U - rep.F) / t;
  rep.rho_E = rep.U / rep.V;
  rep.quality = Quality::ok;
  return rep;
}

double eos_residual(const ThermoState& state, Method method,
                    const numerics::QuadratureSettings& settings) {
  const ThermoReport rep = report_by_method(state, method, settings);
  return rep.rho_E -
         asymptotics::eos_density_from_pressure(rep.P, state.geometry);
}

}  // namespace s3gas::processes
