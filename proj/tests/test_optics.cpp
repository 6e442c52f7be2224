#include "doctest.h"

#include <cmath>
#include <random>

#include "casimir/optics.hpp"

using namespace casimir;

namespace {
const DielectricModel vac = DielectricModel::vacuum();
const double wp = 1.4e16;
const double c = constants::c;
}  // namespace

TEST_CASE("kappa") {
  const double k0 = 1e7;
  CHECK(kappa(vac, 0.0, k0) == doctest::Approx(k0));
  CHECK(kappa(vac, c * k0, k0) == doctest::Approx(std::sqrt(2.0) * k0));
  // plasma at xi = 0: exact limit eps*xi^2 -> omega_P^2
  CHECK(kappa(DielectricModel::plasma(wp), 0.0, 0.0) ==
        doctest::Approx(wp / c));
  CHECK_THROWS_AS(kappa(DielectricModel::perfect_mirror(), 1e15, 1e7),
                  std::logic_error);
}

TEST_CASE("interface_r basic values") {
  const SpectralPoint tm{1e15, 0.0, Polarization::TM};
  // matched media
  CHECK(interface_r(vac, vac, tm) == 0.0);
  const auto eps2 = DielectricModel::constant(2.0);
  CHECK(interface_r(vac, eps2, tm) ==
        doctest::Approx((2.0 - std::sqrt(2.0)) / (2.0 + std::sqrt(2.0))));
  // dc TM limit onto a plasma half-space is exactly 1
  const SpectralPoint dc{0.0, 1e7, Polarization::TM};
  CHECK(interface_r(vac, DielectricModel::plasma(wp), dc) == 1.0);
  CHECK(interface_r(DielectricModel::plasma(wp), vac, dc) == -1.0);
}

TEST_CASE("mirror_r") {
  const SpectralPoint tm{1e15, 5e6, Polarization::TM};
  const SpectralPoint te{1e15, 5e6, Polarization::TE};
  CHECK(mirror_r(DielectricModel::perfect_mirror(), tm) == 1.0);
  CHECK(mirror_r(DielectricModel::perfect_mirror(), te) == -1.0);
  const auto drude = DielectricModel::drude(wp, 1e-3 * wp);
  const SpectralPoint p{wp, 0.0, Polarization::TE};
  CHECK(mirror_r(drude, p) == interface_r(vac, drude, p));
}

TEST_CASE("slab_rt limits") {
  const auto slab = DielectricModel::constant(4.0);
  const SpectralPoint p{1e15, 1e7, Polarization::TM};
  const double rho = interface_r(vac, slab, p);

  // opaque slab
  const SlabRT thick = slab_rt(slab, 1e-2, p);
  CHECK(thick.r == doctest::Approx(rho));
  CHECK(thick.t == doctest::Approx(0.0));
  // vanishing slab
  const SlabRT thin = slab_rt(slab, 1e-18, p);
  CHECK(thin.r == doctest::Approx(0.0).epsilon(1e-8));
  CHECK(thin.t == doctest::Approx(1.0));
  // transparent slab: pure propagation factor
  const double d = 3e-8;
  const SlabRT clear = slab_rt(vac, d, p);
  CHECK(clear.r == 0.0);
  CHECK(clear.t == doctest::Approx(std::exp(-kappa(vac, p.xi, p.k) * d)));

  CHECK_THROWS_AS(slab_rt(slab, 0.0, p), std::domain_error);
}

TEST_CASE("recurrence_r reductions") {
  const SpectralPoint p{1e15, 1e7, Polarization::TE};
  const double kv = kappa(vac, p.xi, p.k);
  const double d = 2e-8;
  CHECK(recurrence_r(0.3, 0.8, 0.0, kv, d, p) == doctest::Approx(0.3));
  CHECK(recurrence_r(0.0, 1.0, -0.7, kv, d, p) ==
        doctest::Approx(-0.7 * std::exp(-2.0 * kv * d)));
  CHECK(recurrence_r(0.3, 0.0, -0.7, kv, d, p) == doctest::Approx(0.3));
}

TEST_CASE("in_slab_r reductions") {
  const SpectralPoint p{1e15, 1e7, Polarization::TM};
  const double kv = kappa(vac, p.xi, p.k);
  // contact with rho = 0 passes the mirror through
  CHECK(in_slab_r(0.0, 0.42, kv, 0.0, p) == doctest::Approx(0.42));
  // free-standing side
  CHECK(in_slab_r(0.5, 0.0, kv, 3e-8, p) == doctest::Approx(-0.5));
  // exact cancellation at zero gap
  CHECK(in_slab_r(0.5, 0.5, kv, 0.0, p) == doctest::Approx(0.0));
}

TEST_CASE("singularity guard trips on engineered input") {
  const SpectralPoint p{1e15, 1e7, Polarization::TM};
  const double kv = kappa(vac, p.xi, p.k);
  CHECK_THROWS_AS(in_slab_r(1.0, 1.0, kv, 0.0, p), SingularityError);
  CHECK_THROWS_AS(recurrence_r(1.0, 0.1, 1.0, kv, 0.0, p), SingularityError);
}

TEST_CASE("all coefficients are real and within [-1, 1] for passive media") {
  std::mt19937_64 rng(20260823);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    DielectricModel media[3] = {
        vac,
        DielectricModel::constant(1.0 + 20.0 * u(rng)),
        u(rng) < 0.5
            ? DielectricModel::plasma(wp * (0.1 + 3.0 * u(rng)))
            : DielectricModel::drude(wp * (0.1 + 3.0 * u(rng)),
                                     wp * 1e-3 * u(rng)),
    };
    const SpectralPoint p{wp * std::pow(10.0, -3.0 + 5.0 * u(rng)),
                          (wp / c) * std::pow(10.0, -3.0 + 4.0 * u(rng)),
                          u(rng) < 0.5 ? Polarization::TM : Polarization::TE};
    const auto& a = media[static_cast<int>(u(rng) * 3.0)];
    const auto& b = media[static_cast<int>(u(rng) * 3.0)];
    const double r = interface_r(a, b, p);
    CHECK(std::isfinite(r));
    CHECK(std::abs(r) <= 1.0);

    const double d_s = (0.01 + 3.0 * u(rng)) * c / wp;
    const SlabRT st = slab_rt(b, d_s, p);
    CHECK(std::abs(st.r) <= 1.0);
    CHECK(st.t >= 0.0);  // underflows to 0 for deeply opaque slabs
    CHECK(st.t <= 1.0);

    const double R = mirror_r(media[2], p);
    const double kv = kappa(vac, p.xi, p.k);
    const double d_gap = 3.0 * u(rng) * c / wp;
    CHECK(std::abs(recurrence_r(st.r, st.t, R, kv, d_gap, p)) <= 1.0);
    const double rho = interface_r(vac, b, p);
    CHECK(std::abs(in_slab_r(rho, R, kv, d_gap, p)) <= 1.0);
  }
}

TEST_CASE("TM and TE interface coefficients at large k coincide only for matched media") {
  const auto eps3 = DielectricModel::constant(3.0);
  const double xi = 1e15;
  const double k = 1e12;  // k >> xi/c
  const double rtm =
      interface_r(vac, eps3, {xi, k, Polarization::TM});
  const double rte =
      interface_r(vac, eps3, {xi, k, Polarization::TE});
  CHECK(std::abs(rtm - rte) > 1e-6);  // degenerate only if eps_i = eps_j
  CHECK(interface_r(eps3, eps3, {xi, k, Polarization::TM}) == 0.0);
  CHECK(interface_r(eps3, eps3, {xi, k, Polarization::TE}) == 0.0);
}
