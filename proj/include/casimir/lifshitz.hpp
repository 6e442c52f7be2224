#ifndef CASIMIR_LIFSHITZ_HPP
#define CASIMIR_LIFSHITZ_HPP

#include <cmath>

#include "casimir/materials.hpp"
#include "casimir/optics.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/units.hpp"

namespace casimir {

/// mirror1 | vacuum gap d1 | slab d_s | vacuum gap d2 | mirror2.
/// d1 = d2 = 0 is the symmetric Lifshitz contact configuration.
struct CavityConfig {
  DielectricModel mirror1 = DielectricModel::vacuum();
  double d1 = 0.0;
  DielectricModel slab = DielectricModel::vacuum();
  double d_s = 0.0;
  double d2 = 0.0;
  DielectricModel mirror2 = DielectricModel::vacuum();

  double cavity_width() const { return d1 + d_s + d2; }
  void validate() const;
};

/// Reference wavevector for dimensionless export and transform pivots:
/// omega_P(slab)/c when the slab has a plasma frequency, else 1/d_s.
double reference_kP(const CavityConfig& config);

/// Fills zero transform pivots: xi_scale = c*k_ref, k_scale centered on the
/// smallest thickness so nodes land where e^{-2 kappa d} transitions.
QuadratureSpec with_default_pivots(QuadratureSpec spec,
                                   const CavityConfig& config);

/// Per-polarization kappa-weighted multiple-reflection factor
/// kappa * x / (1 - x) with x = r_minus * r_plus * e^{-2 kappa d}.
inline double layer_force_integrand(double r_minus, double r_plus,
                                    double kappa_layer, double d_layer,
                                    double xi = 0.0, double k = 0.0) {
  const double x =
      r_minus * r_plus * std::exp(-2.0 * kappa_layer * d_layer);
  if (x >= 1.0)
    throw SingularityError("layer_force_integrand: geometric series diverges",
                           xi, k);
  return kappa_layer * x / (1.0 - x);
}

/// Vacuum-field stress inside the slab (N/m^2).  Positive for two identical
/// perfect mirrors across a vacuum gap, where it equals the ideal Casimir
/// pressure.
PressureResult stress_in_slab(const CavityConfig& config,
                              const QuadratureSpec& quad);

/// Force per unit area on gap layer `which` (1 or 2), N/m^2.
PressureResult gap_force(const CavityConfig& config, int which,
                         const QuadratureSpec& quad);

/// Net slab-mirror force F = F2 - F1 via the closed-form single integral.
/// Positive value means the layer-2-side term dominates.
PressureResult net_force_on_slab(const CavityConfig& config,
                                 const QuadratureSpec& quad);

}  // namespace casimir

#endif  // CASIMIR_LIFSHITZ_HPP
