#include "casimir/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace casimir {

namespace {

// 15-point Kronrod rule with embedded 7-point Gauss rule (QUADPACK qk15).
constexpr int kGKPoints = 15;
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

// Integrand sample: the value plus an auxiliary non-negative channel (used
// to propagate inner-quadrature error estimates through the outer rule).
struct Sample {
  double value;
  double aux;
};

struct RuleResult {
  double integral;
  double error;  // |Kronrod - Gauss| rule error for the value channel
  double aux;    // Kronrod integral of the auxiliary channel
};

template <class F>
RuleResult gk15(F&& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  Sample fv[kGKPoints];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(center - half * kXgk[i]);
    fv[14 - i] = f(center + half * kXgk[i]);
  }
  fv[7] = f(center);
  double kronrod = kWgk[7] * fv[7].value;
  double gauss = kWg[3] * fv[7].value;
  double aux = kWgk[7] * fv[7].aux;
  for (int i = 0; i < 7; ++i) {
    kronrod += kWgk[i] * (fv[i].value + fv[14 - i].value);
    aux += kWgk[i] * (fv[i].aux + fv[14 - i].aux);
    if (i % 2 == 1) gauss += kWg[i / 2] * (fv[i].value + fv[14 - i].value);
  }
  kronrod *= half;
  gauss *= half;
  aux *= half;
  return {kronrod, std::abs(kronrod - gauss), aux};
}

struct Interval {
  double a, b;
  double integral;
  double error;
  double aux;
};

// Worst-error-first; ties broken by position so the refinement order, and
// with it the result, is deterministic.
bool worse(const Interval& x, const Interval& y) {
  if (x.error != y.error) return x.error > y.error;
  return x.a < y.a;
}

struct Adapt1DResult {
  double value = 0.0;
  double error = 0.0;
  double aux = 0.0;
  bool converged = false;
};

// Adaptive bisection on [0,1] with a caller-supplied continuation check
// (used to enforce the shared evaluation budget).
template <class F, class Continue>
Adapt1DResult adapt1d(F&& f, double rel_tol, double abs_tol, int max_intervals,
                      Continue&& can_continue) {
  std::vector<Interval> ivs;
  ivs.reserve(64);
  RuleResult whole = gk15(f, 0.0, 1.0);
  ivs.push_back({0.0, 1.0, whole.integral, whole.error, whole.aux});

  Adapt1DResult out;
  for (;;) {
    double total = 0.0, err = 0.0, aux = 0.0;
    for (const Interval& iv : ivs) {
      total += iv.integral;
      err += iv.error;
      aux += iv.aux;
    }
    out.value = total;
    out.error = err;
    out.aux = aux;
    if (err <= std::max(rel_tol * std::abs(total), abs_tol)) {
      out.converged = true;
      return out;
    }
    if (static_cast<int>(ivs.size()) >= max_intervals || !can_continue())
      return out;

    auto worst = std::min_element(
        ivs.begin(), ivs.end(),
        [](const Interval& x, const Interval& y) { return worse(x, y); });
    const double a = worst->a, b = worst->b, mid = 0.5 * (a + b);
    RuleResult left = gk15(f, a, mid);
    RuleResult right = gk15(f, mid, b);
    *worst = {a, mid, left.integral, left.error, left.aux};
    ivs.push_back({mid, b, right.integral, right.error, right.aux});
  }
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || rel_tol > 1e-2)
    throw std::domain_error("QuadratureSpec: rel_tol must be in (0, 1e-2]");
  if (abs_tol < 0.0)
    throw std::domain_error("QuadratureSpec: abs_tol must be >= 0");
  if (max_evals < 1000)
    throw std::domain_error("QuadratureSpec: max_evals must be >= 1000");
  if (!(xi_scale > 0.0) || !(k_scale > 0.0))
    throw std::domain_error("QuadratureSpec: transform pivots must be set");
}

PressureResult integrate_2d(const SpectralIntegrand& integrand,
                            const QuadratureSpec& spec) {
  spec.validate();

  long evals = 0;
  constexpr int kMaxIntervals = 512;
  auto within_budget = [&]() { return evals < spec.max_evals; };

  auto inner_point = [&](double xi, double v) -> Sample {
    ++evals;
    const double om = 1.0 - v;
    const double k = spec.k_scale * v / om;
    const double jac = spec.k_scale / (om * om);
    const double val = integrand(xi, k, Polarization::TM) +
                       integrand(xi, k, Polarization::TE);
    if (std::isnan(val))
      throw SingularityError("integrate_2d: integrand returned NaN", xi, k);
    return {jac * val, 0.0};
  };

  // The outer integrand carries the inner quadrature's error estimate in the
  // auxiliary channel; the outer rule then integrates it with the same
  // partition, giving the bound  |leak| <= integral of jac * inner_error du.
  auto outer_point = [&](double u) -> Sample {
    const double om = 1.0 - u;
    const double xi = spec.xi_scale * u / om;
    const double jac = spec.xi_scale / (om * om);
    Adapt1DResult inner =
        adapt1d([&](double v) { return inner_point(xi, v); },
                0.1 * spec.rel_tol, 0.0, kMaxIntervals, within_budget);
    return {jac * inner.value, jac * inner.error};
  };

  // The outer loop gets half the tolerance budgets; the other half absorbs
  // the inner-quadrature leak so the combined estimate can still clear the
  // caller's thresholds.
  Adapt1DResult outer =
      adapt1d(outer_point, 0.5 * spec.rel_tol, 0.5 * spec.abs_tol,
              kMaxIntervals, within_budget);

  PressureResult result;
  result.value = outer.value;
  result.error_estimate = outer.error + outer.aux;
  result.evals = evals;
  result.converged =
      outer.converged && evals <= spec.max_evals &&
      result.error_estimate <=
          std::max(spec.rel_tol * std::abs(result.value), spec.abs_tol);
  return result;
}

}  // namespace casimir
