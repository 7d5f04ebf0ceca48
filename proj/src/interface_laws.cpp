#include "snell/interface_laws.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "snell/errors.hpp"
#include "snell/numerics.hpp"

namespace snell {

namespace {

constexpr double kCriticalMatchTol = 1e-12;  // theta1 == critical angle test

void require_strongly_convex(const SpeedProfile& p, const char* which) {
  validate_profile(p);
  const double margin = convexity_margin(p);
  if (!(margin > 0.0)) {
    throw InvalidProfile(std::string(which) +
                         ": speed indicatrix is not strongly convex");
  }
}

}  // namespace

Scene::Scene(SpeedProfile region1, SpeedProfile region2)
    : p1_(std::move(region1)), p2_(std::move(region2)) {
  require_strongly_convex(p1_, "region 1");
  require_strongly_convex(p2_, "region 2");
}

double invert_raypath(const SpeedProfile& p, double target, RaypathBranch branch) {
  // P is strictly increasing on [-pi/2, pi/2] and strictly decreasing on the
  // contiguous back interval [pi/2, 3pi/2]; both attain the same value range
  // [-1/V(-pi/2), 1/V(pi/2)].
  const double p_max = raypath_parameter(p, kPi / 2.0);
  const double p_min = raypath_parameter(p, -kPi / 2.0);
  // P is quadratically flat at the grazing directions, so values computed for
  // angles just inside the branch can overshoot the endpoint values by a few
  // ulps; forgive that and treat them as exactly grazing.
  const double slack =
      1e-12 * std::max(1.0, std::max(std::abs(p_min), std::abs(p_max)));
  if (target < p_min - slack || target > p_max + slack) {
    throw TargetOutOfRange("raypath parameter " + std::to_string(target) +
                           " outside attainable range [" + std::to_string(p_min) +
                           ", " + std::to_string(p_max) + "]");
  }
  target = std::min(std::max(target, p_min), p_max);
  if (branch == RaypathBranch::Front) {
    return bisect(
        [&](double th) { return raypath_parameter(p, th) - target; },
        -kPi / 2.0, kPi / 2.0);
  }
  // Solve on the unwrapped interval [pi/2, 3pi/2], then fold back to (-pi, pi].
  const double phi = bisect(
      [&](double th) { return raypath_parameter(p, wrap_angle(th)) - target; },
      kPi / 2.0, 3.0 * kPi / 2.0);
  return wrap_angle(phi);
}

CriticalAngles critical_angles(const Scene& scene) {
  CriticalAngles out;
  // A grazing transmitted ray exists only when region 1 is strictly slower
  // along the grazing direction; then P2(+-pi/2) falls inside P1's range.
  if (speed(scene.profile1(), kPi / 2.0) < speed(scene.profile2(), kPi / 2.0)) {
    out.plus = invert_raypath(scene.profile1(),
                              raypath_parameter(scene.profile2(), kPi / 2.0),
                              RaypathBranch::Front);
  }
  if (speed(scene.profile1(), -kPi / 2.0) < speed(scene.profile2(), -kPi / 2.0)) {
    out.minus = invert_raypath(scene.profile1(),
                               raypath_parameter(scene.profile2(), -kPi / 2.0),
                               RaypathBranch::Front);
  }
  return out;
}

RefractionOutcome refract(const Scene& scene, double theta1) {
  if (!(theta1 > -kPi / 2.0 && theta1 < kPi / 2.0)) {
    throw InvalidIncidence("incidence angle must lie in (-pi/2, pi/2)");
  }
  const CriticalAngles ca = critical_angles(scene);
  if (ca.plus && std::abs(theta1 - *ca.plus) <= kCriticalMatchTol) {
    return CriticalIncidence{+1};
  }
  if (ca.minus && std::abs(theta1 - *ca.minus) <= kCriticalMatchTol) {
    return CriticalIncidence{-1};
  }
  if ((ca.plus && theta1 > *ca.plus) || (ca.minus && theta1 < *ca.minus)) {
    return TotalReflection{reflect(scene, theta1)};
  }
  return Refracted{invert_raypath(scene.profile2(),
                                  raypath_parameter(scene.profile1(), theta1),
                                  RaypathBranch::Front)};
}

double reflect(const Scene& scene, double theta1) {
  if (!(theta1 > -kPi / 2.0 && theta1 < kPi / 2.0)) {
    throw InvalidIncidence("incidence angle must lie in (-pi/2, pi/2)");
  }
  return invert_raypath(scene.profile1(),
                        raypath_parameter(scene.profile1(), theta1),
                        RaypathBranch::Back);
}

}  // namespace snell
