#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "reference_values.hpp"
#include "s3gas/asymptotics.hpp"

using namespace s3gas;
using namespace s3gas::testing;

namespace {

double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

const ThermoState kUnit{Geometry{1.0}, 1.0};

}  // namespace

TEST_CASE("closed forms at R = T = 1") {
  CHECK(rel_diff(asymptotics::energy_asym(kUnit), kAsym11U) < 1e-15);
  CHECK(rel_diff(asymptotics::free_energy_asym(kUnit), kAsym11F) < 1e-15);
  CHECK(rel_diff(asymptotics::pressure_asym(kUnit), kAsym11P) < 1e-15);
  CHECK(rel_diff(asymptotics::entropy_asym(kUnit), kAsym11S) < 1e-15);
  CHECK(rel_diff(asymptotics::energy_density_asym(kUnit), kAsym11RhoE) < 1e-15);

  CHECK(asymptotics::energy_asym(kUnit) ==
        doctest::Approx(14.6328129).epsilon(1e-7));
  CHECK(asymptotics::free_energy_asym(kUnit) ==
        doctest::Approx(-5.9742270).epsilon(1e-7));
  CHECK(asymptotics::entropy_asym(kUnit) ==
        doctest::Approx(20.6070399).epsilon(1e-7));
}

TEST_CASE("energy scales as 1/R at fixed RT") {
  const ThermoState scaled{Geometry{2.0}, 0.5};
  CHECK(rel_diff(asymptotics::energy_asym(scaled),
                 asymptotics::energy_asym(kUnit) / 2.0) < 1e-15);
}

TEST_CASE("energy vanishes with temperature") {
  const ThermoState cold{Geometry{1.0}, 1e-40};
  CHECK(asymptotics::energy_asym(cold) < 1e-80);
}

TEST_CASE("free energy is negative everywhere") {
  for (double r : {0.1, 1.0, 10.0}) {
    for (double t : {0.01, 1.0, 100.0}) {
      CHECK(asymptotics::free_energy_asym({Geometry{r}, t}) < 0.0);
    }
  }
}

TEST_CASE("free energy at T = 10") {
  const double expected = -(4.0 * numerics::kZeta4 * 1e4 +
                            numerics::kZeta2 * 1e2);
  const double got = asymptotics::free_energy_asym({Geometry{1.0}, 10.0});
  CHECK(rel_diff(got, expected) < 1e-15);
  CHECK(got == doctest::Approx(-43457.42275513035).epsilon(1e-12));
}

TEST_CASE("algebraic identities among the closed forms") {
  for (double r : {0.5, 1.0, 4.0}) {
    for (double t : {0.2, 1.0, 30.0}) {
      const ThermoState state{Geometry{r}, t};
      const double u = asymptotics::energy_asym(state);
      const double f = asymptotics::free_energy_asym(state);
      const double s = asymptotics::entropy_asym(state);
      const double p = asymptotics::pressure_asym(state);
      const double rho = asymptotics::energy_density_asym(state);
      const double v = state.geometry.volume();
      CHECK(rel_diff(u, f + t * s) < 1e-14);
      CHECK(p * v + f == 0.0);      // same formula, exact
      CHECK(rho * v == u);          // same formula, exact
    }
  }
}

TEST_CASE("entropy depends on RT only") {
  CHECK(asymptotics::entropy_asym({Geometry{4.0}, 0.25}) ==
        doctest::Approx(asymptotics::entropy_asym(kUnit)).epsilon(1e-14));
}

TEST_CASE("leading pressure is the free-space radiation pressure") {
  const ThermoState hot{Geometry{1.0}, 1e5};
  const double p_over_t4 = asymptotics::pressure_asym(hot) / 1e20;
  const double stefan_third = numerics::kPi * numerics::kPi / 45.0;
  CHECK(rel_diff(p_over_t4, stefan_third) < 1e-9);
}

TEST_CASE("equation of state") {
  SUBCASE("free-space limit 3P") {
    const double rho = asymptotics::eos_density_from_pressure(2.0, Geometry{1e9});
    CHECK(rel_diff(rho, 6.0) < 1e-15);
  }
  SUBCASE("coefficient at P = 1, R = 1") {
    CHECK(rel_diff(asymptotics::kEosCoefficient, kEosCoefficient) < 1e-15);
    CHECK(rel_diff(asymptotics::eos_density_from_pressure(1.0, Geometry{1.0}),
                   kEosDensityAtP1R1) < 1e-15);
  }
  SUBCASE("round trip against the closed forms at RT = 50") {
    const ThermoState state{Geometry{1.0}, 50.0};
    const double rho = asymptotics::energy_density_asym(state);
    const double from_p = asymptotics::eos_density_from_pressure(
        asymptotics::pressure_asym(state), state.geometry);
    CHECK(std::abs(from_p - rho) / rho <= 1e-5);
  }
  SUBCASE("rejects non-positive pressure") {
    CHECK_THROWS_AS(asymptotics::eos_density_from_pressure(0.0, Geometry{1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(asymptotics::eos_density_from_pressure(-1.0, Geometry{1.0}),
                    std::invalid_argument);
  }
}

TEST_CASE("agreement with quadrature improves with RT") {
  double previous = 1.0;
  for (double rt : {5.0, 10.0, 20.0, 50.0}) {
    const ThermoState state{Geometry{1.0}, rt};
    const double u_asym = asymptotics::energy_asym(state);
    const double u_quad = continuum::internal_energy(state);
    const double dev = std::abs(u_asym - u_quad) / u_quad;
    CHECK(dev < previous);
    if (rt == 10.0) {
      CHECK(dev <= 1e-3);
    }
    previous = dev;
  }
}

TEST_CASE("accuracy domain flag") {
  CHECK(asymptotics::within_accuracy_domain({Geometry{1.0}, 5.0}));
  CHECK(asymptotics::within_accuracy_domain({Geometry{2.0}, 10.0}));
  CHECK_FALSE(asymptotics::within_accuracy_domain({Geometry{1.0}, 4.999}));

  CHECK(asymptotics::thermo_report({Geometry{1.0}, 10.0}).quality ==
        Quality::ok);
  CHECK(asymptotics::thermo_report(kUnit).quality == Quality::extrapolated);
}

TEST_CASE("bundled asymptotic report") {
  const ThermoReport rep = asymptotics::thermo_report({Geometry{1.0}, 10.0});
  CHECK(rep.method == Method::asymptotic);
  CHECK(std::isnan(rep.N));  // no closed form for the photon number
  CHECK(rep.Omega == rep.F);
  CHECK(rep.P == -rep.F / rep.V);
  CHECK(rep.U > 0.0);
  CHECK(rep.S > 0.0);
}
