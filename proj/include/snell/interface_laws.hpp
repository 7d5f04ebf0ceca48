#pragma once

#include <optional>
#include <variant>

#include "snell/profiles.hpp"

namespace snell {

enum class Region { Q1, Q2, Eta };

// Two half-planes Q1 = {x < 0} and Q2 = {x > 0} separated by the vertical
// interface eta = {x = 0}, each with its own speed profile. Travel along eta
// itself is costed with region 2's profile.
class Scene {
 public:
  // Validates both profiles, including strong convexity of their indicatrices.
  Scene(SpeedProfile region1, SpeedProfile region2);

  const SpeedProfile& profile1() const { return p1_; }
  const SpeedProfile& profile2() const { return p2_; }
  const SpeedProfile& profile_of(Region r) const { return r == Region::Q1 ? p1_ : p2_; }

 private:
  SpeedProfile p1_;
  SpeedProfile p2_;
};

// Which monotone branch of theta -> raypath_parameter(theta) to invert:
// Front covers theta in [-pi/2, pi/2] (increasing), Back covers the outgoing
// reflected range (-pi, -pi/2] u [pi/2, pi] (decreasing across the wrap).
enum class RaypathBranch { Front, Back };

// Solve raypath_parameter(p, theta) = target on the requested branch by
// bisection. Throws TargetOutOfRange if target is not attained on the branch.
double invert_raypath(const SpeedProfile& p, double target, RaypathBranch branch);

// Incidence angles from region 1 whose transmitted ray grazes the interface
// at +pi/2 (plus) or -pi/2 (minus). Either exists only when region 1 is the
// slower side along that grazing direction.
struct CriticalAngles {
  std::optional<double> plus;
  std::optional<double> minus;
};

CriticalAngles critical_angles(const Scene& scene);

struct Refracted {
  double theta2;  // transmitted direction in region 2
};
struct CriticalIncidence {
  int sign;  // +1: transmitted ray grazes upward, -1: downward
};
struct TotalReflection {
  double theta3;  // ray returns into region 1
};
using RefractionOutcome = std::variant<Refracted, CriticalIncidence, TotalReflection>;

// Outcome of a ray from region 1 hitting the interface at incidence theta1 in
// (-pi/2, pi/2): transmitted, critically grazing, or totally reflected.
// Throws InvalidIncidence outside that range.
RefractionOutcome refract(const Scene& scene, double theta1);

// Reflected direction theta3 in (-pi, -pi/2) u (pi/2, pi] with the same
// raypath parameter as theta1. Throws InvalidIncidence outside (-pi/2, pi/2).
double reflect(const Scene& scene, double theta1);

}  // namespace snell
