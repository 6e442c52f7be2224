#include "doctest.h"

#include <cmath>

#include "casimir/units.hpp"

using namespace casimir;

TEST_CASE("eV to angular frequency conversion matches CODATA e/hbar") {
  CHECK(constants::eV_to_angular_frequency ==
        doctest::Approx(1.519267e15).epsilon(1e-6));
}

TEST_CASE("ev_to_kP") {
  // 9 eV (gold) and 1 eV, checked against hand arithmetic
  // omega = E * e/hbar, k_P = omega/c.
  CHECK(ev_to_kP(9.0) == doctest::Approx(4.561e7).epsilon(1e-3));
  CHECK(ev_to_kP(1.0) == doctest::Approx(5.068e6).epsilon(1e-3));
  CHECK_THROWS_AS(ev_to_kP(0.0), std::domain_error);
  CHECK_THROWS_AS(ev_to_kP(-1.0), std::domain_error);
}

TEST_CASE("ev_to_kP is strictly monotone") {
  double prev = 0.0;
  for (double ev = 0.1; ev < 30.0; ev += 0.37) {
    const double k = ev_to_kP(ev);
    CHECK(k > prev);
    prev = k;
  }
}

TEST_CASE("pressure scale") {
  ScaledUnits unity{1.0};
  CHECK(unity.pressure_scale() == doctest::Approx(3.1615e-26).epsilon(1e-4));
  CHECK(to_absolute_pressure(0.0, unity) == 0.0);

  const ScaledUnits gold{ev_to_kP(9.0)};
  const double k4 = std::pow(4.5610e7, 4);
  CHECK(to_absolute_pressure(2.5, gold) ==
        doctest::Approx(2.5 * 3.1615e-26 * k4 / 1.0).epsilon(1e-3));
}

TEST_CASE("dimensionless round trip over 60 decades") {
  const ScaledUnits gold{ev_to_kP(9.0)};
  for (double x = 1e-30; x <= 1e30; x *= 1e6) {
    CHECK(to_absolute_pressure(x, gold) / gold.pressure_scale() ==
          doctest::Approx(x).epsilon(1e-15));
  }
}
