#ifndef CASIMIR_OPTICS_HPP
#define CASIMIR_OPTICS_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "casimir/materials.hpp"
#include "casimir/units.hpp"

namespace casimir {

enum class Polarization { TM, TE };

/// A near-singular denominator in the multiple-reflection algebra.  For
/// passive media at imaginary frequency every |r R e^{-2 kappa d}| < 1
/// strictly, so this indicates a bad configuration, not physics.
class SingularityError : public std::runtime_error {
 public:
  SingularityError(const std::string& what, double xi, double k)
      : std::runtime_error(what + " at (xi=" + std::to_string(xi) +
                           " rad/s, k=" + std::to_string(k) + " rad/m)"),
        xi_(xi), k_(k) {}
  double xi() const { return xi_; }
  double k() const { return k_; }

 private:
  double xi_, k_;
};

/// One (xi, k, polarization) coordinate on the imaginary frequency axis.
struct SpectralPoint {
  double xi;         // rad/s, >= 0
  double k;          // rad/m, >= 0
  Polarization pol;
};

// Relative guard on 1 - r R e^{-2 kappa d} denominators.
inline constexpr double kDenominatorGuard = 1e-14;

/// Perpendicular decay constant kappa = sqrt(eps(i xi) xi^2/c^2 + k^2).
/// Exact at xi = 0 for plasma-like media, where eps*xi^2 -> omega_P^2.
inline double kappa(const DielectricModel& model, double xi, double k) {
  if (model.is_perfect_mirror())
    throw std::logic_error("kappa: perfect mirror has no interior field");
  if (xi < 0.0 || k < 0.0)
    throw std::domain_error("kappa: xi and k must be >= 0");
  const double q = model.xi2_epsilon(xi) / (constants::c * constants::c);
  return std::sqrt(q + k * k);
}

/// Fresnel reflection coefficient of the i|j interface, amplitude incident
/// from medium i.  TE: (ki - kj)/(ki + kj); TM: (ej ki - ei kj)/(ej ki + ei kj).
inline double interface_r(const DielectricModel& medium_i,
                          const DielectricModel& medium_j,
                          const SpectralPoint& pt) {
  if (medium_i.is_perfect_mirror() || medium_j.is_perfect_mirror())
    throw std::logic_error("interface_r: use mirror_r for perfect mirrors");
  const double ki = kappa(medium_i, pt.xi, pt.k);
  const double kj = kappa(medium_j, pt.xi, pt.k);
  if (pt.pol == Polarization::TE) return (ki - kj) / (ki + kj);
  const Permittivity ei = medium_i.epsilon(pt.xi);
  const Permittivity ej = medium_j.epsilon(pt.xi);
  if (ei.divergent || ej.divergent) {
    // xi = 0 with a plasma-like medium: scale both permittivities by xi^2,
    // which is exact and finite (xi^2 eps -> omega_P^2).
    const double Ei = medium_i.xi2_epsilon(0.0);
    const double Ej = medium_j.xi2_epsilon(0.0);
    if (Ei == 0.0 && Ej == 0.0)
      return 0.0;  // both regular parts vanish with xi^2; matched at dc
    return (Ej * ki - Ei * kj) / (Ej * ki + Ei * kj);
  }
  return (ej.value * ki - ei.value * kj) / (ej.value * ki + ei.value * kj);
}

/// Mirror half-space reflection coefficient seen from vacuum.
inline double mirror_r(const DielectricModel& mirror, const SpectralPoint& pt) {
  if (mirror.is_perfect_mirror())
    return pt.pol == Polarization::TM ? 1.0 : -1.0;
  return interface_r(DielectricModel::vacuum(), mirror, pt);
}

/// Reflection and transmission of the whole slab (vacuum on both sides).
struct SlabRT {
  double r;
  double t;
};

inline SlabRT slab_rt(const DielectricModel& slab, double d_s,
                      const SpectralPoint& pt) {
  if (!(d_s > 0.0)) throw std::domain_error("slab_rt: thickness must be > 0");
  if (slab.is_perfect_mirror())
    throw std::logic_error("slab_rt: slab cannot be a perfect mirror");
  const double rho = interface_r(DielectricModel::vacuum(), slab, pt);
  const double ks = kappa(slab, pt.xi, pt.k);
  const double ph = std::exp(-ks * d_s);
  const double e = ph * ph;
  const double denom = 1.0 - rho * rho * e;
  return {rho * (1.0 - e) / denom, (1.0 - rho * rho) * ph / denom};
}

/// Composes slab (r, t) with a far reflector R across a vacuum gap:
/// r + t^2 R e^{-2 kappa d} / (1 - r R e^{-2 kappa d}).
inline double recurrence_r(double r, double t, double R_far, double kappa_gap,
                           double d_gap, const SpectralPoint& pt) {
  if (d_gap < 0.0) throw std::domain_error("recurrence_r: gap must be >= 0");
  const double e = std::exp(-2.0 * kappa_gap * d_gap);
  const double denom = 1.0 - r * R_far * e;
  if (std::abs(denom) < kDenominatorGuard)
    throw SingularityError("recurrence_r: near-singular denominator", pt.xi,
                           pt.k);
  return r + t * t * R_far * e / denom;
}

/// Effective reflection seen from inside the slab toward one mirror:
/// (-rho + R e^{-2 kappa d}) / (1 - rho R e^{-2 kappa d}).
inline double in_slab_r(double rho, double R, double kappa_gap, double d_gap,
                        const SpectralPoint& pt) {
  if (d_gap < 0.0) throw std::domain_error("in_slab_r: gap must be >= 0");
  const double e = std::exp(-2.0 * kappa_gap * d_gap);
  const double denom = 1.0 - rho * R * e;
  if (std::abs(denom) < kDenominatorGuard)
    throw SingularityError("in_slab_r: near-singular denominator", pt.xi,
                           pt.k);
  return (-rho + R * e) / denom;
}

}  // namespace casimir

#endif  // CASIMIR_OPTICS_HPP
