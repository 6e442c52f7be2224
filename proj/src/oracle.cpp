#include "casimir/oracle.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "casimir/lifshitz.hpp"

namespace casimir {
namespace oracle {

void GridOracleSpec::validate() const {
  if (nodes_per_axis < 100)
    throw std::domain_error("GridOracleSpec: nodes_per_axis must be >= 100");
  if (!(xi_scale > 0.0) || !(k_scale > 0.0))
    throw std::domain_error("GridOracleSpec: transform pivots must be set");
}

double brute_force_integral(const SpectralIntegrand& integrand,
                            const GridOracleSpec& spec) {
  spec.validate();
  const int n = spec.nodes_per_axis;
  const double h = 1.0 / n;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = (i + 0.5) * h;
    const double xi = spec.xi_scale * u / (1.0 - u);
    const double ju = spec.xi_scale / ((1.0 - u) * (1.0 - u));
    double inner = 0.0;
    for (int j = 0; j < n; ++j) {
      const double v = (j + 0.5) * h;
      const double k = spec.k_scale * v / (1.0 - v);
      const double jv = spec.k_scale / ((1.0 - v) * (1.0 - v));
      inner += jv * (integrand(xi, k, Polarization::TM) +
                     integrand(xi, k, Polarization::TE));
    }
    sum += ju * inner;
  }
  return sum * h * h;
}

namespace {

// Slope parameter of the continuity condition: kappa for TE, kappa/eps for
// TM (H-field formulation).  Finite everywhere including the xi = 0 plasma
// limit, where kappa/eps -> 0.
double slope(const DielectricModel& m, const SpectralPoint& pt) {
  const double kap = kappa(m, pt.xi, pt.k);
  if (pt.pol == Polarization::TE) return kap;
  const Permittivity e = m.epsilon(pt.xi);
  if (e.divergent) return kap * pt.xi * pt.xi / m.xi2_epsilon(pt.xi);
  return kap / e.value;
}

Eigen::Matrix2d continuity(double s) {
  Eigen::Matrix2d d;
  d << 1.0, 1.0, -s, s;
  return d;
}

void normalize(Eigen::Matrix2d& m) {
  const double a = m.cwiseAbs().maxCoeff();
  if (a > 0.0) m /= a;
}

}  // namespace

double transfer_matrix_r(const std::vector<OracleLayer>& stack,
                         const SpectralPoint& pt) {
  if (stack.size() < 2)
    throw std::domain_error("transfer_matrix_r: need at least two media");
  for (std::size_t i = 0; i + 1 < stack.size(); ++i)
    if (stack[i].medium.is_perfect_mirror())
      throw std::domain_error(
          "transfer_matrix_r: perfect mirror only allowed as terminator");

  const bool mirror_terminated = stack.back().medium.is_perfect_mirror();
  const std::size_t last = stack.size() - 1;

  // Amplitude map from the first interface to the last medium (or to the
  // mirror plane), built from continuity and propagation matrices only.
  Eigen::Matrix2d m = Eigen::Matrix2d::Identity();
  double s_prev = slope(stack[0].medium, pt);
  for (std::size_t j = 1; j <= (mirror_terminated ? last - 1 : last); ++j) {
    const double s_j = slope(stack[j].medium, pt);
    m = continuity(s_j).inverse() * continuity(s_prev) * m;
    if (j < last) {
      const double kd = kappa(stack[j].medium, pt.xi, pt.k) * stack[j].thickness;
      Eigen::Matrix2d p;
      p << std::exp(-kd), 0.0, 0.0, std::exp(kd);
      m = p * m;
    }
    normalize(m);
    s_prev = s_j;
  }

  if (!mirror_terminated) {
    // No upward wave in the substrate: row 1 of m annihilates (1, r).
    return -m(1, 0) / m(1, 1);
  }
  // Perfect mirror: the tangential-E component vanishes at the mirror
  // plane.  TM: slope row; TE: field row.
  const Eigen::Matrix2d w = continuity(s_prev) * m;
  const int row = (pt.pol == Polarization::TM) ? 1 : 0;
  return -w(row, 0) / w(row, 1);
}

VerifyReport run_verification(std::uint64_t seed, int quadrature_cases,
                              int coefficient_points, int nodes_per_axis) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double omega_gold = ev_to_kP(9.0) * constants::c;

  VerifyReport report;
  report.quadrature_cases = quadrature_cases;
  report.coefficient_points = coefficient_points;

  const DielectricModel vac = DielectricModel::vacuum();

  for (int c = 0; c < quadrature_cases; ++c) {
    const double omega_P = omega_gold * (0.5 + 1.5 * unit(rng));
    const double k_P = omega_P / constants::c;
    CavityConfig cfg;
    cfg.slab = DielectricModel::plasma(omega_P);
    cfg.d_s = std::pow(10.0, -1.3 + 1.6 * unit(rng)) / k_P;  // kP ds in [.05, 2]
    const int mirror_kind = static_cast<int>(unit(rng) * 3.0);
    if (mirror_kind == 0) {
      cfg.mirror1 = cfg.mirror2 = DielectricModel::perfect_mirror();
    } else if (mirror_kind == 1) {
      const double Om = omega_P * std::pow(10.0, 3.0 * unit(rng));
      cfg.mirror1 = cfg.mirror2 = DielectricModel::drude(Om, 1e-3 * Om);
    }  // else free-standing
    if (unit(rng) < 0.5) {
      cfg.d1 = (0.2 + 1.8 * unit(rng)) * cfg.d_s;
      cfg.d2 = (0.2 + 1.8 * unit(rng)) * cfg.d_s;
    }

    QuadratureSpec quad;
    quad.rel_tol = 1e-7;
    quad = with_default_pivots(quad, cfg);
    const PressureResult adaptive = stress_in_slab(cfg, quad);

    auto integrand = [&cfg, &vac](double xi, double k, Polarization pol) {
      const SpectralPoint pt{xi, k, pol};
      const double ks = kappa(cfg.slab, xi, k);
      const double kv = kappa(vac, xi, k);
      const double rho = interface_r(vac, cfg.slab, pt);
      const double rm = in_slab_r(rho, mirror_r(cfg.mirror1, pt), kv, cfg.d1, pt);
      const double rp = in_slab_r(rho, mirror_r(cfg.mirror2, pt), kv, cfg.d2, pt);
      return k * layer_force_integrand(rm, rp, ks, cfg.d_s, xi, k);
    };
    GridOracleSpec gspec{nodes_per_axis, quad.xi_scale, quad.k_scale};
    const double reference =
        brute_force_integral(integrand, gspec) * constants::hbar /
        (2.0 * std::numbers::pi * std::numbers::pi);
    const double dev =
        std::abs(adaptive.value - reference) / std::abs(reference);
    report.max_quadrature_rel_dev = std::max(report.max_quadrature_rel_dev, dev);
  }

  for (int c = 0; c < coefficient_points; ++c) {
    const double omega_P = omega_gold * (0.3 + 2.0 * unit(rng));
    const double k_P = omega_P / constants::c;
    const DielectricModel slab =
        (unit(rng) < 0.5) ? DielectricModel::plasma(omega_P)
                          : DielectricModel::constant(1.0 + 9.0 * unit(rng));
    const double d_s = (0.05 + 2.0 * unit(rng)) / k_P;
    const SpectralPoint pt{omega_P * std::pow(10.0, -2.0 + 3.0 * unit(rng)),
                           k_P * std::pow(10.0, -2.0 + 3.0 * unit(rng)),
                           unit(rng) < 0.5 ? Polarization::TM
                                           : Polarization::TE};

    const SlabRT st = slab_rt(slab, d_s, pt);
    const double r_tm = transfer_matrix_r(
        {{vac, 0.0}, {slab, d_s}, {vac, 0.0}}, pt);
    report.max_coefficient_abs_dev =
        std::max(report.max_coefficient_abs_dev, std::abs(st.r - r_tm));

    // Slab + vacuum gap + mirror exercises t^2 through the recurrence.
    const double d_gap = (0.1 + 2.0 * unit(rng)) / k_P;
    const double Om = omega_P * (1.0 + 9.0 * unit(rng));
    const DielectricModel mirror = DielectricModel::drude(Om, 1e-3 * Om);
    const double kv = kappa(vac, pt.xi, pt.k);
    const double r_rec =
        recurrence_r(st.r, st.t, mirror_r(mirror, pt), kv, d_gap, pt);
    const double r_tm3 = transfer_matrix_r(
        {{vac, 0.0}, {slab, d_s}, {vac, d_gap}, {mirror, 0.0}}, pt);
    report.max_coefficient_abs_dev =
        std::max(report.max_coefficient_abs_dev, std::abs(r_rec - r_tm3));
  }

  report.pass = report.max_quadrature_rel_dev <= 1e-3 &&
                report.max_coefficient_abs_dev <= 1e-10;
  return report;
}

}  // namespace oracle
}  // namespace casimir
