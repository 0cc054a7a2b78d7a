// numerics.hpp — shared numerical kernel: zeta constants, Bose integrals,
// adaptive semi-infinite quadrature, bracketing root finder, compensated
// summation, finite differences.
//
// Everything here is a pure function of its arguments; no global state.

#pragma once

#include <functional>
#include <numbers>

namespace s3gas::numerics {

inline constexpr double kPi = std::numbers::pi;

// Riemann zeta values. Even orders come from the closed forms pi^2/6,
// pi^4/90, pi^6/945; odd orders are stored to full double precision
// (verified against the defining series in the test suite).
inline constexpr double kZeta2 = kPi * kPi / 6.0;
inline constexpr double kZeta3 = 1.2020569031595943;
inline constexpr double kZeta4 = kPi * kPi * kPi * kPi / 90.0;
inline constexpr double kZeta5 = 1.0369277551433699;
inline constexpr double kZeta6 = kPi * kPi * kPi * kPi * kPi * kPi / 945.0;

/// Neumaier-compensated accumulator. Keeps mode sums and interval sums
/// reproducible at the 1e-13 level regardless of term count.
class CompensatedSum {
 public:
  void add(double value);
  [[nodiscard]] double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Controls integrate_semi_infinite. The integrand is truncated where it has
/// fallen below absolute_floor times its running peak (all integrands of
/// interest decay exponentially), and the finite interval is then refined
/// adaptively until the global error estimate is below relative_tolerance.
struct QuadratureSettings {
  double relative_tolerance = 1e-10;  // must lie in (0, 1e-4]
  double absolute_floor = 1e-300;
  double truncation_scale = 1.0;  // multiplies the auto-chosen upper limit
  int max_intervals = 4000;

  void validate() const;  // throws std::invalid_argument
};

/// Integral of f over (0, inf) for continuous, integrable f with (at least)
/// exponential decay. Integrable endpoint behaviour at 0 is handled by
/// subdivision; f is never evaluated at 0 itself.
///
/// Throws std::runtime_error if the subdivision budget is exhausted before
/// the error estimate meets the tolerance.
double integrate_semi_infinite(const std::function<double(double)>& f,
                               const QuadratureSettings& settings = {});

/// Gamma(s+1) * zeta(s+1) for s in [1, 5], straight from the stored
/// constants: the values of the integrals x^s/(e^x - 1) over (0, inf).
/// s < 1 is rejected (s = 0 diverges); s > 5 is outside the stored table.
double bose_integral(int s);

/// Brent's method on a sign-changing bracket [lo, hi]. Converges to
/// relative width `tol` on x; the iterate never leaves the bracket.
/// Throws std::invalid_argument if f(lo) and f(hi) have the same sign.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol = 1e-12);

/// Central difference (f(x+h) - f(x-h)) / (2h). Used by the test suites to
/// probe thermodynamic derivatives; h is the caller's responsibility.
double derivative(const std::function<double(double)>& f, double x, double h);

}  // namespace s3gas::numerics
