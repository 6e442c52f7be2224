#include "doctest.h"

#include <cmath>

#include "casimir/materials.hpp"

using namespace casimir;

namespace {
const double wp = 1.4e16;  // rad/s, gold-ish
}

TEST_CASE("vacuum and constant permittivity") {
  CHECK(DielectricModel::vacuum().epsilon(0.0).value == 1.0);
  CHECK(DielectricModel::vacuum().epsilon(1e18).value == 1.0);
  CHECK(DielectricModel::constant(4.0).epsilon(1e12).value == 4.0);
}

TEST_CASE("plasma model") {
  const auto m = DielectricModel::plasma(wp);
  CHECK(m.epsilon(wp).value == doctest::Approx(2.0));
  CHECK(m.epsilon(1e3 * wp).value == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(m.epsilon(0.0).divergent);
  CHECK(m.xi2_epsilon(0.0) == doctest::Approx(wp * wp));
}

TEST_CASE("drude model") {
  const auto m = DielectricModel::drude(wp, 1e-3 * wp);
  CHECK(m.epsilon(wp).value ==
        doctest::Approx(1.0 + 1.0 / (1.0 + 1e-6)).epsilon(1e-12));
  CHECK_FALSE(m.epsilon(0.0).divergent);  // damping regularizes the origin
  CHECK(m.epsilon(0.0).value == doctest::Approx(1.0 + 1e6));
  // gamma = 0 degenerates to the plasma model
  CHECK(DielectricModel::drude(wp, 0.0).epsilon(0.0).divergent);
}

TEST_CASE("plasma_shifted model") {
  const auto m = DielectricModel::plasma_shifted(2.5, wp);
  CHECK(m.epsilon(wp).value == doctest::Approx(3.5));
  CHECK(m.epsilon(0.0).divergent);
  CHECK(m.xi2_epsilon(0.0) == doctest::Approx(wp * wp));
}

TEST_CASE("construction and evaluation errors") {
  CHECK_THROWS_AS(DielectricModel::plasma(0.0), std::domain_error);
  CHECK_THROWS_AS(DielectricModel::drude(wp, -1.0), std::domain_error);
  CHECK_THROWS_AS(DielectricModel::perfect_mirror().epsilon(1e15),
                  std::logic_error);
  CHECK_THROWS_AS(DielectricModel::plasma(wp).epsilon(-1.0),
                  std::domain_error);
}

TEST_CASE("eps is >= 1 and monotone non-increasing in xi") {
  const DielectricModel models[] = {
      DielectricModel::vacuum(),
      DielectricModel::constant(3.0),
      DielectricModel::plasma(wp),
      DielectricModel::drude(2.0 * wp, 1e-3 * wp),
      DielectricModel::plasma_shifted(1.5, wp),
  };
  for (const auto& m : models) {
    double prev = std::numeric_limits<double>::infinity();
    for (double xi = 1e12; xi < 1e19; xi *= 1.31) {
      const double e = m.epsilon(xi).value;
      CHECK(e >= 1.0);
      CHECK(e <= prev);
      prev = e;
    }
  }
}

TEST_CASE("xi^2 eps recovers omega_P^2 + xi^2 for the plasma model") {
  const auto m = DielectricModel::plasma(wp);
  for (double xi = 1e10; xi < 1e20; xi *= 7.7) {
    CHECK(m.xi2_epsilon(xi) ==
          doctest::Approx(wp * wp + xi * xi).epsilon(1e-14));
    // epsilon itself cancels at large xi, so only ask for ~1e-6 there.
    CHECK(xi * xi * (m.epsilon(xi).value - 1.0) ==
          doctest::Approx(wp * wp).epsilon(1e-6));
  }
}
