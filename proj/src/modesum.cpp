#include "s3gas/modesum.hpp"

#include <cmath>
#include <stdexcept>

#include "s3gas/spectrum.hpp"

namespace s3gas::modesum {

namespace {

double bose_occupation(double x) {
  if (x > 36.0) {
    const double e = std::exp(-x);
    return e / (1.0 - e);
  }
  return 1.0 / std::expm1(x);
}

double log_one_minus_exp(double x) {
  if (x > 36.0) {
    return -std::exp(-x);
  }
  return std::log(-std::expm1(-x));
}

struct TailBounds {
  double number;
  double energy;
  double free_energy;
};

// Geometric bound on everything beyond level n0. Level spacing obeys
// eps_{n+1} - eps_n >= 1/R, so with q = e^{-1/(RT)} and z0 = eps_{n0}/T:
//   occupation(eps_n)  <= C e^{-z0} q^{n-n0},  C = 1/(1 - e^{-z0})
//   |log(1-e^{-z})|    <= C e^{-z}
//   eps_n              <= n / R
// leaving power-weighted geometric series sum_k (n0+k)^m q^k, m = 2, 3.
TailBounds tail_bounds(int n0, double z0, double R, double T) {
  const double e0 = std::exp(-z0);
  if (e0 == 0.0) return {0.0, 0.0, 0.0};
  const double c = 1.0 / (1.0 - e0);
  const double one_minus_q = -std::expm1(-1.0 / (R * T));
  const double q = 1.0 - one_minus_q;
  const double s0 = q / one_minus_q;
  const double s1 = q / (one_minus_q * one_minus_q);
  const double s2 = q * (1.0 + q) / (one_minus_q * one_minus_q * one_minus_q);
  const double s3 = q * (1.0 + 4.0 * q + q * q) /
                    (one_minus_q * one_minus_q * one_minus_q * one_minus_q);
  const double n = n0;
  const double quad = n * n * s0 + 2.0 * n * s1 + s2;
  const double cub = n * n * n * s0 + 3.0 * n * n * s1 + 3.0 * n * s2 + s3;
  TailBounds tb;
  tb.number = 2.0 * c * e0 * quad;
  tb.energy = 2.0 * c * e0 * cub / R;
  tb.free_energy = T * tb.number;
  return tb;
}

bool small_against(double term, double partial, double threshold) {
  return std::abs(term) <= threshold * std::abs(partial);
}

}  // namespace

ThermoReport exact_report(const ThermoState& state, double rel_tol) {
  if (!(rel_tol > 0.0) || rel_tol > 1e-4) {
    throw std::invalid_argument("exact_report: rel_tol must lie in (0, 1e-4]");
  }
  const double R = state.geometry.radius;
  const double T = state.temperature;

  numerics::CompensatedSum sum_n;
  numerics::CompensatedSum sum_u;
  numerics::CompensatedSum sum_f;

  const double small_threshold = rel_tol * 1e-2;
  int consecutive_small = 0;
  bool converged = false;
  double z = 0.0;
  int n = 2;
  for (; n <= kLevelBudget; ++n) {
    const double eps = std::sqrt(static_cast<double>(n) * n - 1.0) / R;
    const double g = 2.0 * static_cast<double>(n) * n;
    z = eps / T;
    const double term_n = g * bose_occupation(z);
    const double term_u = term_n * eps;
    const double term_f = g * log_one_minus_exp(z);
    sum_n.add(term_n);
    sum_u.add(term_u);
    sum_f.add(term_f);

    const bool all_small = small_against(term_n, sum_n.value(), small_threshold) &&
                           small_against(term_u, sum_u.value(), small_threshold) &&
                           small_against(term_f, sum_f.value(), small_threshold);
    consecutive_small = all_small ? consecutive_small + 1 : 0;
    if (consecutive_small >= 16) {
      const TailBounds tb = tail_bounds(n, z, R, T);
      if (tb.number <= rel_tol * std::abs(sum_n.value()) &&
          tb.energy <= rel_tol * std::abs(sum_u.value()) &&
          tb.free_energy <= rel_tol * std::abs(T * sum_f.value())) {
        converged = true;
        break;
      }
    }
  }
  if (!converged) {
    throw std::runtime_error(
        "exact_report: tail criterion not met within the level budget "
        "(RT = " + std::to_string(R * T) + ")");
  }

  ThermoReport rep;
  rep.method = Method::exact_sum;
  rep.R = R;
  rep.T = T;
  rep.V = state.geometry.volume();
  rep.N = sum_n.value();
  rep.U = sum_u.value();
  rep.F = T * sum_f.value();
  rep.Omega = rep.F;
  rep.P = -rep.F / rep.V;
  rep.S = (rep.U - rep.F) / T;
  rep.rho_E = rep.U / rep.V;
  rep.quality = Quality::ok;
  return rep;
}

double level_occupancy(const ThermoState& state, int n) {
  if (n < 2) {
    throw std::invalid_argument(
        "level_occupancy: n must be >= 2 (the zero mode carries no "
        "statistical weight)");
  }
  const double eps = spectrum::mode_energy(n, state.geometry);
  return 2.0 * static_cast<double>(n) * n *
         bose_occupation(eps / state.temperature);
}

}  // namespace s3gas::modesum
