#ifndef CASIMIR_ORACLE_HPP
#define CASIMIR_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "casimir/quadrature.hpp"

namespace casimir {
namespace oracle {

/// Dense fixed-grid reference quadrature.  Deliberately shares no code with
/// the adaptive engine.
struct GridOracleSpec {
  int nodes_per_axis = 2000;
  double xi_scale = 0.0;  // rad/s
  double k_scale = 0.0;   // rad/m

  void validate() const;
};

/// Composite midpoint rule on the transformed unit square for
/// int_0^inf dxi int_0^inf dk [f_TM + f_TE].
double brute_force_integral(const SpectralIntegrand& integrand,
                            const GridOracleSpec& spec);

/// Stack layer for the transfer-matrix reference.  The first and last
/// entries are half-spaces (thickness ignored); the last may be a perfect
/// mirror.
struct OracleLayer {
  DielectricModel medium;
  double thickness = 0.0;
};

/// Reflection coefficient of a finite stack via sequential 2x2
/// continuity/propagation matrix products at imaginary frequency.
double transfer_matrix_r(const std::vector<OracleLayer>& stack,
                         const SpectralPoint& pt);

/// Cross-check report produced by the CLI --verify mode.
struct VerifyReport {
  double max_quadrature_rel_dev = 0.0;  // adaptive vs dense grid
  double max_coefficient_abs_dev = 0.0; // analytic vs transfer matrix
  int quadrature_cases = 0;
  int coefficient_points = 0;
  bool pass = false;
};

VerifyReport run_verification(std::uint64_t seed, int quadrature_cases,
                              int coefficient_points, int nodes_per_axis);

}  // namespace oracle
}  // namespace casimir

#endif  // CASIMIR_ORACLE_HPP
