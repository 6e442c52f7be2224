#ifndef CASIMIR_SCENARIOS_HPP
#define CASIMIR_SCENARIOS_HPP

#include <string>
#include <vector>

#include "casimir/lifshitz.hpp"

namespace casimir {

/// Ideal two-mirror Casimir pressure pi^2 hbar c / (240 d^4).
double casimir_ideal(double d);

struct AsymptoteValue {
  double value;     // N/m^2
  bool in_regime;   // false when evaluated outside its validity range
};

/// Nonretarded stress in a free-standing plasma slab, 0.19 k_P d_s F_C.
/// Valid for k_P d_s << 1; flagged out of regime above 0.2.
AsymptoteValue freestanding_nonretarded(double d_s, double k_P);

/// Thick-slab decay (hbar c k_P^4 / 4 sqrt((pi k_P d_s)^3)) e^{-2 k_P d_s}.
/// Valid for k_P d_s >~ 5; flagged out of regime below.
AsymptoteValue thick_slab_asymptote(double d_s, double k_P);

enum class SweepKind { Thickness, Position, Contrast };

/// One figure curve: a grid of dimensionless abscissae (k_P d_s, z, or
/// Omega_P/omega_P) evaluated over a fixed cavity template.
struct SweepSpec {
  SweepKind kind = SweepKind::Thickness;
  std::vector<double> grid;

  double slab_plasma_eV = 9.0;       // gold
  bool perfect_mirrors = false;
  double mirror_contrast = 1e3;      // Omega_P/omega_P; 0 = no mirrors
  double gamma_over_OmegaP = 1e-3;
  double kP_ds = 0.1;                // slab thickness for position/contrast
  double L_over_ds = 3.0;            // cavity width for position sweeps
  QuadratureSpec quad;
  int threads = 1;

  void validate() const;
};

struct SweepRow {
  double abscissa = 0.0;
  double Fs_dimensionless = 0.0;
  double Fs_over_FC = 0.0;
  double F_dimensionless = 0.0;
  double Fs_SI = 0.0;
  double F_SI = 0.0;
  double err_Fs = 0.0;   // SI
  double err_F = 0.0;    // SI
  long evals = 0;
  bool converged = false;
  bool has_force = false;  // contact configurations have no net force column
  std::string error;       // nonempty if this point failed
};

std::vector<double> default_thickness_grid();  // 40 log points, 1e-2..20
std::vector<double> default_position_grid();   // -0.95..0.95 step 0.05
std::vector<double> default_contrast_grid();   // {1, 10, 1e3, 1e5}

/// Builds the concrete cavity for one grid point of the sweep.
CavityConfig sweep_point_config(const SweepSpec& spec, double abscissa);

/// Evaluates the sweep; per-point failures are recorded in the row and the
/// sweep continues.  Rows are ordered by abscissa regardless of the number
/// of worker threads.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

}  // namespace casimir

#endif  // CASIMIR_SCENARIOS_HPP
