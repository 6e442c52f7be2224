#include "casimir/scenarios.hpp"

#include <Eigen/Core>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace casimir {

double casimir_ideal(double d) {
  if (!(d > 0.0)) throw std::domain_error("casimir_ideal: d must be > 0");
  const double pi2 = std::numbers::pi * std::numbers::pi;
  return pi2 * constants::hbar * constants::c / (240.0 * d * d * d * d);
}

AsymptoteValue freestanding_nonretarded(double d_s, double k_P) {
  if (!(d_s > 0.0) || !(k_P > 0.0))
    throw std::domain_error("freestanding_nonretarded: d_s, k_P must be > 0");
  const double x = k_P * d_s;
  return {0.19 * x * casimir_ideal(d_s), x <= 0.2};
}

AsymptoteValue thick_slab_asymptote(double d_s, double k_P) {
  if (!(d_s > 0.0) || !(k_P > 0.0))
    throw std::domain_error("thick_slab_asymptote: d_s, k_P must be > 0");
  const double x = k_P * d_s;
  const double k4 = k_P * k_P * k_P * k_P;
  const double value = constants::hbar * constants::c * k4 /
                       (4.0 * std::sqrt(std::pow(std::numbers::pi * x, 3))) *
                       std::exp(-2.0 * x);
  return {value, x >= 5.0};
}

void SweepSpec::validate() const {
  if (grid.empty()) throw std::domain_error("SweepSpec: empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw std::domain_error("SweepSpec: grid must be strictly increasing");
  if (kind == SweepKind::Position)
    for (double z : grid)
      if (!(z > -1.0 && z < 1.0))
        throw std::domain_error("SweepSpec: position grid must lie in (-1,1)");
  if (kind == SweepKind::Position && !(L_over_ds > 1.0))
    throw std::domain_error("SweepSpec: cavity width must exceed d_s");
  if (!(slab_plasma_eV > 0.0))
    throw std::domain_error("SweepSpec: slab plasma energy must be > 0");
  if (!(kP_ds > 0.0))
    throw std::domain_error("SweepSpec: kP_ds must be > 0");
}

std::vector<double> default_thickness_grid() {
  Eigen::ArrayXd g = Eigen::ArrayXd::LinSpaced(40, std::log10(1e-2),
                                               std::log10(20.0));
  std::vector<double> out(g.size());
  for (Eigen::Index i = 0; i < g.size(); ++i) out[i] = std::pow(10.0, g[i]);
  return out;
}

std::vector<double> default_position_grid() {
  std::vector<double> out;
  for (int i = -19; i <= 19; ++i) out.push_back(0.05 * i);
  return out;
}

std::vector<double> default_contrast_grid() { return {1.0, 10.0, 1e3, 1e5}; }

namespace {

DielectricModel make_mirror(const SweepSpec& spec, double contrast,
                            double omega_P) {
  if (spec.perfect_mirrors) return DielectricModel::perfect_mirror();
  if (contrast == 0.0) return DielectricModel::vacuum();
  const double Omega = contrast * omega_P;
  return DielectricModel::drude(Omega, spec.gamma_over_OmegaP * Omega);
}

}  // namespace

CavityConfig sweep_point_config(const SweepSpec& spec, double abscissa) {
  const double k_P = ev_to_kP(spec.slab_plasma_eV);
  const double omega_P = k_P * constants::c;
  CavityConfig cfg;
  cfg.slab = DielectricModel::plasma(omega_P);
  switch (spec.kind) {
    case SweepKind::Thickness:
      cfg.d_s = abscissa / k_P;
      cfg.d1 = cfg.d2 = 0.0;
      cfg.mirror1 = cfg.mirror2 = make_mirror(spec, spec.mirror_contrast,
                                              omega_P);
      break;
    case SweepKind::Position: {
      cfg.d_s = spec.kP_ds / k_P;
      const double L = spec.L_over_ds * cfg.d_s;
      const double half = 0.5 * (L - cfg.d_s);
      cfg.d1 = half * (1.0 + abscissa);
      cfg.d2 = half * (1.0 - abscissa);
      cfg.mirror1 = cfg.mirror2 = make_mirror(spec, spec.mirror_contrast,
                                              omega_P);
      break;
    }
    case SweepKind::Contrast:
      cfg.d_s = spec.kP_ds / k_P;
      cfg.d1 = cfg.d2 = 0.0;
      cfg.mirror1 = cfg.mirror2 = make_mirror(spec, abscissa, omega_P);
      break;
  }
  return cfg;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const double k_P = ev_to_kP(spec.slab_plasma_eV);
  const ScaledUnits scale{k_P};
  const double pscale = scale.pressure_scale();

  std::vector<SweepRow> rows(spec.grid.size());

  auto eval_point = [&](std::size_t i) {
    SweepRow& row = rows[i];
    row.abscissa = spec.grid[i];
    try {
      const CavityConfig cfg = sweep_point_config(spec, spec.grid[i]);
      const PressureResult fs = stress_in_slab(cfg, spec.quad);
      row.Fs_SI = fs.value;
      row.err_Fs = fs.error_estimate;
      row.Fs_dimensionless = fs.value / pscale;
      row.Fs_over_FC = fs.value / casimir_ideal(cfg.d_s);
      row.evals = fs.evals;
      row.converged = fs.converged;
      if (cfg.d1 > 0.0 && cfg.d2 > 0.0) {
        const PressureResult f = net_force_on_slab(cfg, spec.quad);
        row.has_force = true;
        row.F_SI = f.value;
        row.err_F = f.error_estimate;
        row.F_dimensionless = f.value / pscale;
        row.evals += f.evals;
        row.converged = row.converged && f.converged;
      }
    } catch (const std::exception& e) {
      row.error = e.what();
      row.converged = false;
    }
  };

  const int nthreads =
      std::max(1, std::min<int>(spec.threads, static_cast<int>(rows.size())));
  if (nthreads == 1) {
    for (std::size_t i = 0; i < rows.size(); ++i) eval_point(i);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t)
      pool.emplace_back([&, t]() {
        for (std::size_t i = t; i < rows.size(); i += nthreads) eval_point(i);
      });
    for (auto& th : pool) th.join();
  }
  return rows;
}

}  // namespace casimir
