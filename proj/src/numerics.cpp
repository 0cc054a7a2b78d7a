#include "s3gas/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace s3gas::numerics {

void CompensatedSum::add(double value) {
  const double t = sum_ + value;
  if (std::abs(sum_) >= std::abs(value)) {
    compensation_ += (sum_ - t) + value;
  } else {
    compensation_ += (value - t) + sum_;
  }
  sum_ = t;
}

void QuadratureSettings::validate() const {
  if (!(relative_tolerance > 0.0) || relative_tolerance > 1e-4) {
    throw std::invalid_argument(
        "QuadratureSettings: relative_tolerance must lie in (0, 1e-4]");
  }
  if (!(absolute_floor > 0.0)) {
    throw std::invalid_argument("QuadratureSettings: absolute_floor must be > 0");
  }
  if (!(truncation_scale > 0.0)) {
    throw std::invalid_argument("QuadratureSettings: truncation_scale must be > 0");
  }
  if (max_intervals < 8) {
    throw std::invalid_argument("QuadratureSettings: max_intervals must be >= 8");
  }
}

namespace {

// 15-point Kronrod / 7-point Gauss pair (QUADPACK dqk15 abscissae and
// weights on [-1, 1]).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
  double integral;
  double error;
};

// Kronrod estimate with the QUADPACK error heuristic.
PanelResult gauss_kronrod_15(const std::function<double(double)>& f, double a,
                             double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(center);
  double result_gauss = kWg[3] * fc;
  double result_kronrod = kWgk[7] * fc;
  double result_abs = std::abs(result_kronrod);

  double fv1[7];
  double fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    fv1[j] = f(center - dx);
    fv2[j] = f(center + dx);
    const double fsum = fv1[j] + fv2[j];
    if (j % 2 == 1) {
      result_gauss += kWg[j / 2] * fsum;
    }
    result_kronrod += kWgk[j] * fsum;
    result_abs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
  }

  const double mean = 0.5 * result_kronrod;
  double result_asc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    result_asc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
  }

  result_gauss *= half;
  result_kronrod *= half;
  result_abs *= std::abs(half);
  result_asc *= std::abs(half);

  double err = std::abs(result_kronrod - result_gauss);
  if (result_asc != 0.0 && err != 0.0) {
    err = result_asc * std::min(1.0, std::pow(200.0 * err / result_asc, 1.5));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double uflow = std::numeric_limits<double>::min();
  if (result_abs > uflow / (50.0 * eps)) {
    err = std::max(50.0 * eps * result_abs, err);
  }
  return {result_kronrod, err};
}

struct Interval {
  double a;
  double b;
  double integral;
  double error;
  long id;  // insertion index, breaks error ties deterministically

  bool operator<(const Interval& other) const {
    if (error != other.error) return error > other.error;
    return id < other.id;
  }
};

// Upper truncation point: march outward until |f| has fallen below
// floor * (running peak). Probes a few sub-unit points so that integrands
// peaking near zero contribute to the peak estimate.
double choose_upper_limit(const std::function<double(double)>& f,
                          const QuadratureSettings& s) {
  double peak = 0.0;
  for (double x = 0.5; x >= 1.0 / 1024.0; x *= 0.5) {
    peak = std::max(peak, std::abs(f(x)));
  }
  double x = 1.0;
  for (int iter = 0; iter < 64; ++iter) {
    const double v = std::abs(f(x));
    peak = std::max(peak, v);
    if (peak > 0.0 && v <= s.absolute_floor * peak) {
      return x * s.truncation_scale;
    }
    x *= 2.0;
  }
  throw std::runtime_error(
      "integrate_semi_infinite: integrand does not decay below the "
      "truncation floor within the scan range");
}

}  // namespace

double integrate_semi_infinite(const std::function<double(double)>& f,
                               const QuadratureSettings& settings) {
  settings.validate();
  const double upper = choose_upper_limit(f, settings);

  // Geometric seed partition {0, 1, 2, 4, ..., upper}.
  std::vector<double> knots;
  knots.push_back(0.0);
  for (double x = 1.0; x < upper; x *= 2.0) {
    knots.push_back(x);
  }
  knots.push_back(upper);

  std::multiset<Interval> intervals;
  long next_id = 0;
  double total = 0.0;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const PanelResult p = gauss_kronrod_15(f, knots[i], knots[i + 1]);
    intervals.insert({knots[i], knots[i + 1], p.integral, p.error, next_id++});
    total += p.integral;
    total_err += p.error;
  }

  const double eps = std::numeric_limits<double>::epsilon();
  while (total_err > settings.relative_tolerance * std::abs(total) &&
         total_err > std::numeric_limits<double>::min()) {
    if (static_cast<int>(intervals.size()) >= settings.max_intervals) {
      throw std::runtime_error(
          "integrate_semi_infinite: subdivision budget exhausted at " +
          std::to_string(intervals.size()) + " intervals (estimate " +
          std::to_string(total) + ", error " + std::to_string(total_err) + ")");
    }
    const Interval worst = *intervals.begin();
    intervals.erase(intervals.begin());
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b) ||
        (worst.b - worst.a) <= 4.0 * eps * std::max(std::abs(worst.a), 1.0)) {
      throw std::runtime_error(
          "integrate_semi_infinite: interval too small to subdivide; "
          "tolerance unreachable in double precision");
    }
    const PanelResult left = gauss_kronrod_15(f, worst.a, mid);
    const PanelResult right = gauss_kronrod_15(f, mid, worst.b);
    total += left.integral + right.integral - worst.integral;
    total_err += left.error + right.error - worst.error;
    intervals.insert({worst.a, mid, left.integral, left.error, next_id++});
    intervals.insert({mid, worst.b, right.integral, right.error, next_id++});
  }

  // Recombine in position order with compensation: the published value is
  // independent of the refinement schedule for a given final partition.
  std::vector<Interval> ordered(intervals.begin(), intervals.end());
  std::sort(ordered.begin(), ordered.end(),
            [](const Interval& x, const Interval& y) { return x.a < y.a; });
  CompensatedSum sum;
  for (const Interval& iv : ordered) {
    sum.add(iv.integral);
  }
  return sum.value();
}

double bose_integral(int s) {
  if (s < 1) {
    throw std::invalid_argument(
        "bose_integral: s must be >= 1 (the s = 0 integral diverges)");
  }
  if (s > 5) {
    throw std::out_of_range("bose_integral: zeta table covers s <= 5 only");
  }
  constexpr double factorial[5] = {1.0, 2.0, 6.0, 24.0, 120.0};
  constexpr double zeta[5] = {kZeta2, kZeta3, kZeta4, kZeta5, kZeta6};
  return factorial[s - 1] * zeta[s - 1];
}

double find_root(const std::function<double(double)>& f, double lo, double hi,
                 double tol) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw std::invalid_argument("find_root: invalid bracket endpoints");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("find_root: tolerance must be > 0");
  }
  double a = lo;
  double b = hi;
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) {
    throw std::invalid_argument("find_root: f(lo) and f(hi) have the same sign");
  }

  // Brent: inverse quadratic / secant steps guarded by bisection.
  double c = a;
  double fc = fa;
  double d = b - a;
  double e = d;
  const double eps = std::numeric_limits<double>::epsilon();
  for (int iter = 0; iter < 200; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 = 2.0 * eps * std::abs(b) + 0.5 * tol * std::abs(b);
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) {
      return b;
    }
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      const double s = fb / fa;
      double p;
      double q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    if (std::abs(d) > tol1) {
      b += d;
    } else {
      b += (xm > 0.0 ? tol1 : -tol1);
    }
    fb = f(b);
  }
  throw std::runtime_error("find_root: no convergence within 200 iterations");
}

double derivative(const std::function<double(double)>& f, double x, double h) {
  if (!(h > 0.0)) {
    throw std::invalid_argument("derivative: step h must be > 0");
  }
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace s3gas::numerics
