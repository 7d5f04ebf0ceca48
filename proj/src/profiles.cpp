#include "snell/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "snell/errors.hpp"

namespace snell {

void validate_profile(const SpeedProfile& p) {
  if (const auto* iso = std::get_if<Isotropic>(&p)) {
    if (!std::isfinite(iso->c) || iso->c <= 0.0) {
      throw InvalidProfile("isotropic speed must be finite and positive");
    }
    return;
  }
  const auto& e = std::get<FocusEllipse>(p);
  if (!std::isfinite(e.a) || e.a <= 0.0) {
    throw InvalidProfile("ellipse semi-major axis must be finite and positive");
  }
  if (!std::isfinite(e.eps) || e.eps < 0.0 || e.eps >= 1.0) {
    throw InvalidProfile("ellipse eccentricity must lie in [0, 1)");
  }
  if (!std::isfinite(e.phi)) {
    throw InvalidProfile("ellipse axis direction must be finite");
  }
}

double speed(const SpeedProfile& p, double theta) {
  if (const auto* iso = std::get_if<Isotropic>(&p)) return iso->c;
  const auto& e = std::get<FocusEllipse>(p);
  return e.a * (1.0 - e.eps * e.eps) / (1.0 - e.eps * std::cos(theta - e.phi));
}

SpeedDerivs speed_derivs(const SpeedProfile& p, double theta) {
  if (const auto* iso = std::get_if<Isotropic>(&p)) return {iso->c, 0.0, 0.0};
  const auto& e = std::get<FocusEllipse>(p);
  // V = A/u with A = a (1 - eps^2) and u = 1 - eps cos(theta - phi).
  const double amp = e.a * (1.0 - e.eps * e.eps);
  const double u = 1.0 - e.eps * std::cos(theta - e.phi);
  const double du = e.eps * std::sin(theta - e.phi);
  const double ddu = e.eps * std::cos(theta - e.phi);
  const double v = amp / u;
  const double dv = -amp * du / (u * u);
  const double ddv = amp * (2.0 * du * du / (u * u * u) - ddu / (u * u));
  return {v, dv, ddv};
}

double finsler_cost(const SpeedProfile& p, Vec2 v) {
  const double len = norm(v);
  if (len == 0.0) return 0.0;
  return len / speed(p, angle_of(v));
}

double raypath_parameter(const SpeedProfile& p, double theta) {
  const auto [v, dv, ddv] = speed_derivs(p, theta);
  // sin/V + cos d(1/V)/dtheta with d(1/V)/dtheta = -V'/V^2.
  return (std::sin(theta) * v - std::cos(theta) * dv) / (v * v);
}

double raypath_derivative(const SpeedProfile& p, double theta) {
  const auto [v, dv, ddv] = speed_derivs(p, theta);
  return std::cos(theta) * (v * v + 2.0 * dv * dv - v * ddv) / (v * v * v);
}

double convexity_margin(const SpeedProfile& p, int n_samples) {
  double margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_samples; ++i) {
    const double theta = -kPi + (i + 0.5) * 2.0 * kPi / n_samples;
    const auto [v, dv, ddv] = speed_derivs(p, theta);
    margin = std::min(margin, v * v + 2.0 * dv * dv - v * ddv);
  }
  return margin;
}

}  // namespace snell
