#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "reference_values.hpp"
#include "s3gas/continuum.hpp"

using namespace s3gas;
using namespace s3gas::testing;

namespace {

double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

numerics::QuadratureSettings tight() {
  numerics::QuadratureSettings s;
  s.relative_tolerance = 1e-12;
  return s;
}

}  // namespace

TEST_CASE("density of states") {
  const Geometry unit{1.0};
  CHECK(continuum::density_of_states(0.0, unit) == 0.0);
  CHECK(continuum::density_of_states(std::sqrt(3.0), unit) ==
        doctest::Approx(4.0 * std::sqrt(3.0)).epsilon(1e-15));
  // Free-space limit: rho -> 2 R^3 eps^2 with relative correction a^2/2eps^2.
  const double rho = continuum::density_of_states(100.0, unit);
  CHECK(rel_diff(rho, 2.0 * 100.0 * 100.0) < 5.1e-5);
  CHECK_THROWS_AS(continuum::density_of_states(-1.0, unit),
                  std::invalid_argument);
}

TEST_CASE("spectral density point values") {
  CHECK(rel_diff(continuum::spectral_density(1.0, 1.0), kSpectralX1A1) < 1e-14);
  CHECK(rel_diff(continuum::spectral_density(1.0, 0.0), kSpectralX1A0) < 1e-14);
  CHECK(continuum::spectral_density(0.0, 1.0) == 0.0);
  CHECK(continuum::spectral_density(0.0, 0.0) == 0.0);
}

TEST_CASE("modified curve dominates the free-space curve pointwise") {
  std::mt19937 rng(40411);
  std::uniform_real_distribution<double> pick_x(1e-3, 20.0);
  std::uniform_real_distribution<double> pick_a(1e-3, 5.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double x = pick_x(rng);
    const double a = pick_a(rng);
    CHECK(continuum::spectral_density(x, a) >
          continuum::spectral_density(x, 0.0));
  }
}

TEST_CASE("photon number") {
  const ThermoState unit{Geometry{1.0}, 1.0};
  CHECK(rel_diff(continuum::photon_number(unit), kQuad11N) < 1e-9);

  SUBCASE("free-space limit") {
    const ThermoState hot{Geometry{1.0}, 1e6};
    const double coeff = continuum::photon_number(hot) / 1e18;
    CHECK(rel_diff(coeff, kFreeSpaceNCoefficient) < 1e-9);
  }
  SUBCASE("depends on RT only") {
    const ThermoState doubled{Geometry{2.0}, 0.5};
    CHECK(rel_diff(continuum::photon_number(doubled),
                   continuum::photon_number(unit)) < 1e-10);
  }
}

TEST_CASE("thermodynamic quantities at R = T = 1 match the pinned references") {
  const ThermoState state{Geometry{1.0}, 1.0};
  CHECK(rel_diff(continuum::internal_energy(state), kQuad11U) < 1e-9);
  CHECK(rel_diff(continuum::free_energy(state), kQuad11F) < 1e-9);
  CHECK(rel_diff(continuum::entropy(state), kQuad11S) < 1e-9);
  CHECK(rel_diff(continuum::pressure(state), kQuad11P) < 1e-9);
  CHECK(rel_diff(continuum::energy_density(state), kQuad11RhoE) < 1e-9);
  CHECK(continuum::free_energy(state) < 0.0);
}

TEST_CASE("large-RT leading coefficients") {
  const ThermoState hot{Geometry{1.0}, 1e4};
  const double t4 = 1e16;
  CHECK(rel_diff(continuum::internal_energy(hot, tight()) / t4,
                 12.0 * numerics::kZeta4) < 1e-8);
  CHECK(rel_diff(continuum::entropy(hot, tight()) / 1e12,
                 16.0 * numerics::kZeta4) < 1e-8);
}

TEST_CASE("free-space energy density is recovered at RT = 100") {
  const ThermoState state{Geometry{1.0}, 100.0};
  const double rho_over_t4 = continuum::energy_density(state) / 1e8;
  const double stefan = numerics::kPi * numerics::kPi / 15.0;
  CHECK(std::abs(rho_over_t4 / stefan - 1.0) < 0.01);
}

TEST_CASE("bundled report") {
  const ThermoState state{Geometry{1.0}, 1.0};
  const ThermoReport rep = continuum::thermo_report(state);

  SUBCASE("consistent with the individual operations") {
    CHECK(rep.N == continuum::photon_number(state));
    CHECK(rep.U == continuum::internal_energy(state));
    CHECK(rep.F == continuum::free_energy(state));
  }
  SUBCASE("report invariants") {
    CHECK(rep.Omega == rep.F);  // mu = 0, bit-identical
    CHECK(rep.P == -rep.F / rep.V);
    CHECK(rel_diff(rep.S, (rep.U - rep.F) / rep.T) < 1e-15);
    CHECK(rep.N >= 0.0);
    CHECK(rep.U >= 0.0);
    CHECK(rep.S >= 0.0);
    CHECK(rep.P >= 0.0);
    CHECK(rep.method == Method::quadrature);
    CHECK(rep.quality == Quality::ok);
  }
  SUBCASE("entropy depends on RT only") {
    const ThermoReport big = continuum::thermo_report({Geometry{10.0}, 1.0});
    const ThermoReport hot = continuum::thermo_report({Geometry{1.0}, 10.0});
    CHECK(rel_diff(big.S, hot.S) < 1e-10);
  }
}

TEST_CASE("RT scaling collapse") {
  // N and S are functions of RT alone; R*U, R*F and R^4*P likewise.
  std::mt19937 rng(90210);
  std::uniform_real_distribution<double> pick_rt(0.5, 50.0);
  for (double lambda : {0.5, 2.0, 5.0}) {
    for (int trial = 0; trial < 8; ++trial) {
      const double rt = pick_rt(rng);
      const ThermoState base{Geometry{1.0}, rt};
      const ThermoState scaled{Geometry{lambda}, rt / lambda};
      const ThermoReport a = continuum::thermo_report(base);
      const ThermoReport b = continuum::thermo_report(scaled);
      CHECK(rel_diff(a.N, b.N) < 1e-9);
      CHECK(rel_diff(a.S, b.S) < 1e-9);
      CHECK(rel_diff(a.R * a.U, b.R * b.U) < 1e-9);
      CHECK(rel_diff(a.R * a.F, b.R * b.F) < 1e-9);
      CHECK(rel_diff(std::pow(a.R, 4) * a.P, std::pow(b.R, 4) * b.P) < 1e-9);
    }
  }
}

TEST_CASE("entropy equals -dF/dT") {
  for (const auto& [r, t] : {std::pair{1.0, 1.0}, std::pair{2.0, 3.0}}) {
    const Geometry geom{r};
    const double h = t * 1e-5;
    const double dfdt =
        (continuum::free_energy({geom, t + h}, tight()) -
         continuum::free_energy({geom, t - h}, tight())) /
        (2.0 * h);
    const double s = continuum::entropy({geom, t}, tight());
    CHECK(rel_diff(-dfdt, s) < 1e-6);
  }
}

TEST_CASE("state validation") {
  CHECK_THROWS_AS(ThermoState(Geometry{1.0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ThermoState(Geometry{1.0}, -2.0), std::invalid_argument);
}
