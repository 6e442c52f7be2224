#ifndef CASIMIR_MATERIALS_HPP
#define CASIMIR_MATERIALS_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace casimir {

/// Permittivity value at imaginary frequency i*xi.  Plasma-like models
/// diverge at xi = 0; the flag lets the optics layer take the exact limit
/// instead of working with an overflowed float.
struct Permittivity {
  double value = 1.0;
  bool divergent = false;
};

/// Dielectric response evaluated on the imaginary frequency axis, where
/// all values are real and >= 1 for passive media.
class DielectricModel {
 public:
  enum class Kind {
    Vacuum,
    Constant,
    Plasma,
    Drude,
    PlasmaShifted,
    PerfectMirror,
  };

  static DielectricModel vacuum() { return DielectricModel(Kind::Vacuum); }

  static DielectricModel constant(double eps) {
    if (!(eps > 0.0))
      throw std::domain_error("DielectricModel: constant eps must be > 0");
    DielectricModel m(Kind::Constant);
    m.eps_ = eps;
    return m;
  }

  static DielectricModel plasma(double omega_p) {
    if (!(omega_p > 0.0))
      throw std::domain_error("DielectricModel: plasma frequency must be > 0");
    DielectricModel m(Kind::Plasma);
    m.omega_p_ = omega_p;
    return m;
  }

  /// Damped free-electron response; gamma = 0 degenerates to the plasma model.
  static DielectricModel drude(double omega_p, double gamma) {
    if (!(omega_p > 0.0))
      throw std::domain_error("DielectricModel: Drude frequency must be > 0");
    if (gamma < 0.0)
      throw std::domain_error("DielectricModel: Drude damping must be >= 0");
    DielectricModel m(Kind::Drude);
    m.omega_p_ = omega_p;
    m.gamma_ = gamma;
    return m;
  }

  /// Regular background permittivity plus a plasma-like pole at the origin.
  static DielectricModel plasma_shifted(double eps_regular, double omega_p) {
    if (!(eps_regular > 0.0))
      throw std::domain_error(
          "DielectricModel: regular part of plasma_shifted must be > 0");
    if (!(omega_p > 0.0))
      throw std::domain_error("DielectricModel: plasma frequency must be > 0");
    DielectricModel m(Kind::PlasmaShifted);
    m.eps_ = eps_regular;
    m.omega_p_ = omega_p;
    return m;
  }

  static DielectricModel perfect_mirror() {
    return DielectricModel(Kind::PerfectMirror);
  }

  Kind kind() const { return kind_; }
  bool is_perfect_mirror() const { return kind_ == Kind::PerfectMirror; }
  double plasma_frequency() const { return omega_p_; }
  double damping() const { return gamma_; }

  Permittivity epsilon(double xi) const {
    if (kind_ == Kind::PerfectMirror)
      throw std::logic_error(
          "DielectricModel: perfect mirror has no permittivity");
    if (xi < 0.0)
      throw std::domain_error("DielectricModel: xi must be >= 0");
    switch (kind_) {
      case Kind::Vacuum:
        return {1.0, false};
      case Kind::Constant:
        return {eps_, false};
      case Kind::Plasma:
        if (xi == 0.0) return {0.0, true};
        return {1.0 + omega_p_ * omega_p_ / (xi * xi), false};
      case Kind::Drude:
        if (xi == 0.0 && gamma_ == 0.0) return {0.0, true};
        return {1.0 + omega_p_ * omega_p_ / (xi * xi + gamma_ * gamma_), false};
      case Kind::PlasmaShifted:
        if (xi == 0.0) return {0.0, true};
        return {eps_ + omega_p_ * omega_p_ / (xi * xi), false};
      default:
        throw std::logic_error("DielectricModel: unreachable");
    }
  }

  /// xi^2 * eps(i xi).  Regular everywhere, including the plasma-model
  /// origin where it tends to omega_P^2; this is what kappa needs.
  double xi2_epsilon(double xi) const {
    if (kind_ == Kind::PerfectMirror)
      throw std::logic_error(
          "DielectricModel: perfect mirror has no permittivity");
    if (xi < 0.0)
      throw std::domain_error("DielectricModel: xi must be >= 0");
    const double xi2 = xi * xi;
    switch (kind_) {
      case Kind::Vacuum:
        return xi2;
      case Kind::Constant:
        return xi2 * eps_;
      case Kind::Plasma:
        return xi2 + omega_p_ * omega_p_;
      case Kind::Drude:
        if (gamma_ == 0.0) return xi2 + omega_p_ * omega_p_;
        return xi2 * (1.0 + omega_p_ * omega_p_ / (xi2 + gamma_ * gamma_));
      case Kind::PlasmaShifted:
        return xi2 * eps_ + omega_p_ * omega_p_;
      default:
        throw std::logic_error("DielectricModel: unreachable");
    }
  }

  std::string name() const {
    switch (kind_) {
      case Kind::Vacuum: return "vacuum";
      case Kind::Constant: return "constant";
      case Kind::Plasma: return "plasma";
      case Kind::Drude: return "drude";
      case Kind::PlasmaShifted: return "plasma_shifted";
      case Kind::PerfectMirror: return "perfect_mirror";
    }
    return "?";
  }

 private:
  explicit DielectricModel(Kind k) : kind_(k) {}

  Kind kind_;
  double eps_ = 1.0;
  double omega_p_ = 0.0;
  double gamma_ = 0.0;
};

}  // namespace casimir

#endif  // CASIMIR_MATERIALS_HPP
