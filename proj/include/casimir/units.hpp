#ifndef CASIMIR_UNITS_HPP
#define CASIMIR_UNITS_HPP

#include <cmath>
#include <stdexcept>

namespace casimir {

// CODATA 2018 values.
namespace constants {
inline constexpr double hbar = 1.054571817e-34;           // J s
inline constexpr double c = 2.99792458e8;                 // m/s
inline constexpr double elementary_charge = 1.602176634e-19;  // C
// rad/s per eV (= e/hbar)
inline constexpr double eV_to_angular_frequency = elementary_charge / hbar;
}  // namespace constants

/// Reference scale built from the slab plasma wavevector k_P = omega_P/c.
/// All dimensionless pressures are multiples of hbar*c*k_P^4.
struct ScaledUnits {
  double k_P;  // rad/m

  double pressure_scale() const {
    return constants::hbar * constants::c * k_P * k_P * k_P * k_P;
  }
};

/// Plasma energy in eV -> plasma wavevector omega_P/c in rad/m.
inline double ev_to_kP(double plasma_energy_eV) {
  if (!(plasma_energy_eV > 0.0))
    throw std::domain_error("ev_to_kP: plasma energy must be positive");
  return plasma_energy_eV * constants::eV_to_angular_frequency / constants::c;
}

inline double to_absolute_pressure(double dimensionless_value,
                                   const ScaledUnits& scale) {
  return dimensionless_value * scale.pressure_scale();
}

}  // namespace casimir

#endif  // CASIMIR_UNITS_HPP
