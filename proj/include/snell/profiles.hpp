#pragma once

#include <variant>

#include "snell/geometry.hpp"

namespace snell {

// Direction-dependent propagation speed models. A profile maps a travel
// direction theta (radians, measured from +x) to a Euclidean speed V(theta).

struct Isotropic {
  double c = 1.0;  // same speed in every direction
};

// Elliptical speed indicatrix in polar form about one focus:
//   V(theta) = a (1 - eps^2) / (1 - eps cos(theta - phi))
// a: semi-major axis, eps: eccentricity in [0, 1), phi: major-axis direction.
struct FocusEllipse {
  double a = 1.0;
  double eps = 0.0;
  double phi = 0.0;
};

using SpeedProfile = std::variant<Isotropic, FocusEllipse>;

// Throws InvalidProfile unless parameters are finite and in range
// (c > 0 / a > 0, 0 <= eps < 1).
void validate_profile(const SpeedProfile& p);

struct SpeedDerivs {
  double v;    // V(theta)
  double dv;   // dV/dtheta
  double ddv;  // d^2V/dtheta^2
};

double speed(const SpeedProfile& p, double theta);
SpeedDerivs speed_derivs(const SpeedProfile& p, double theta);

// Travel cost of a displacement: |v| / V(direction of v), and 0 for v = 0.
// Positively 1-homogeneous in v; its unit ball is the speed indicatrix, so
// this is the straight-line traveltime of the displacement.
double finsler_cost(const SpeedProfile& p, Vec2 v);

// Slowness component along a vertical interface for a ray leaving at theta:
//   P(theta) = sin(theta)/V(theta) + cos(theta) d(1/V)/dtheta.
// This is the quantity conserved by refraction and reflection.
double raypath_parameter(const SpeedProfile& p, double theta);

// dP/dtheta = cos(theta) (V^2 + 2 V'^2 - V V'') / V^3. Positive on
// (-pi/2, pi/2) and negative on the back branch whenever the indicatrix is
// strongly convex.
double raypath_derivative(const SpeedProfile& p, double theta);

// Minimum over a theta grid of V^2 + 2 V'^2 - V V'' (the indicatrix's second
// fundamental form up to a positive factor). Positive iff the indicatrix is
// strongly convex, which every interface law here relies on.
double convexity_margin(const SpeedProfile& p, int n_samples = 3600);

}  // namespace snell
