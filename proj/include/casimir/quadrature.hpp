#ifndef CASIMIR_QUADRATURE_HPP
#define CASIMIR_QUADRATURE_HPP

#include <functional>

#include "casimir/optics.hpp"

namespace casimir {

/// Transforms, tolerances and budget for the semi-infinite double integral
/// int_0^inf dxi int_0^inf dk f(xi, k, pol).
struct QuadratureSpec {
  double rel_tol = 1e-6;
  double abs_tol = 1e-12;     // in the units of the integral being computed
  long max_evals = 2'000'000; // integrand point evaluations (pol pair = 1)
  double xi_scale = 0.0;      // rad/s transform pivot; 0 = fill from config
  double k_scale = 0.0;       // rad/m transform pivot; 0 = fill from config

  void validate() const;
};

struct PressureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evals = 0;
  bool converged = false;
};

using SpectralIntegrand = std::function<double(double xi, double k, Polarization)>;

/// Adaptive nested Gauss-Kronrod quadrature over (0,inf)^2.  Each axis is
/// mapped to (0,1) via u -> scale*u/(1-u); the open rule never touches the
/// endpoints.  The TM+TE sum is formed before any refinement decision so
/// polarization cancellations cannot fool the error estimate.  Sequential
/// and deterministic: identical inputs give bit-identical results.
PressureResult integrate_2d(const SpectralIntegrand& integrand,
                            const QuadratureSpec& spec);

}  // namespace casimir

#endif  // CASIMIR_QUADRATURE_HPP
