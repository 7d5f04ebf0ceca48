#include "snell/wavefront.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "snell/errors.hpp"
#include "snell/numerics.hpp"

namespace snell {

namespace {

void require_region1_source(Vec2 q1) {
  if (!(q1.x < 0.0)) {
    throw RegionMismatch("wavefront source must lie in region 1 (x < 0)");
  }
}

Vec2 standard_point(const Scene& scene, Vec2 q1, double t0, double theta) {
  return q1 + (t0 * speed(scene.profile1(), theta)) * unit_vector(theta);
}

// Direction along which the standard wavefront reaches the interface first.
// V1(theta) cos(theta) is stationary exactly where the raypath parameter
// vanishes, and strong convexity makes that stationary point the maximum.
double first_touch_direction(const Scene& scene) {
  return invert_raypath(scene.profile1(), 0.0, RaypathBranch::Front);
}

double interface_arrival_time(const Scene& scene, Vec2 q1, double theta) {
  return -q1.x / (speed(scene.profile1(), theta) * std::cos(theta));
}

struct ReflectedChord {
  Vec2 gamma;     // endpoint gliding along the interface
  Vec2 phi;       // endpoint carried by the ordinary reflected ray
  Vec2 b1;        // critical break point on the interface
  double theta3;  // reflected direction
  double tau;     // time the critical ray reaches the interface
};

ReflectedChord reflected_chord(const Scene& scene, Vec2 q1, double t0, int sign) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("reflected wavefront: sign must be +1 or -1");
  }
  const CriticalAngles ca = critical_angles(scene);
  const auto& crit = sign > 0 ? ca.plus : ca.minus;
  if (!crit) {
    throw MissingCriticalAngle(sign > 0 ? "no upward critical angle"
                                        : "no downward critical angle");
  }
  ReflectedChord chord;
  const double theta_c = *crit;
  chord.tau = interface_arrival_time(scene, q1, theta_c);
  if (!(t0 > chord.tau)) {
    throw TooEarly("reflected wavefront: the critical ray has not reached the interface");
  }
  chord.b1 = {0.0, q1.y - q1.x * std::tan(theta_c)};
  const double spare = t0 - chord.tau;
  const double run_speed = speed(scene.profile2(), sign * kPi / 2.0);
  chord.gamma = {0.0, chord.b1.y + spare * run_speed * sign};
  chord.theta3 = reflect(scene, theta_c);
  chord.phi =
      chord.b1 + (spare * speed(scene.profile1(), chord.theta3)) * unit_vector(chord.theta3);
  return chord;
}

Vec2 chord_point(const ReflectedChord& chord, double s) {
  return chord.gamma + s * (chord.phi - chord.gamma);
}

WavefrontArc reflected_piece(const Scene& scene, Vec2 q1, double t0, int sign,
                             double s_from, double s_to, int n) {
  const ReflectedChord chord = reflected_chord(scene, q1, t0, sign);
  WavefrontArc arc;
  arc.kind = ArcKind::Reflected;
  arc.param_start = s_from;
  arc.param_end = s_to;
  arc.samples.reserve(n);
  for (int i = 0; i < n; ++i) {
    arc.samples.push_back(chord_point(chord, s_from + (s_to - s_from) * i / (n - 1.0)));
  }
  return arc;
}

}  // namespace

WavefrontArc standard_wavefront(const Scene& scene, Vec2 q1, double t0, int n) {
  require_region1_source(q1);
  if (!(t0 >= 0.0)) {
    throw std::invalid_argument("standard_wavefront: t0 must be >= 0");
  }
  if (n < 16) {
    throw std::invalid_argument("standard_wavefront: need at least 16 samples");
  }
  WavefrontArc arc;
  arc.kind = ArcKind::Standard;
  arc.param_start = -kPi + 2.0 * kPi / n;
  arc.param_end = kPi;
  arc.samples.reserve(n);
  for (int i = 1; i <= n; ++i) {
    arc.samples.push_back(standard_point(scene, q1, t0, -kPi + 2.0 * kPi * i / n));
  }
  return arc;
}

double time_to_interface(const Scene& scene, Vec2 q1) {
  require_region1_source(q1);
  const SpeedProfile& p1 = scene.profile1();
  const auto cost_to = [&](double y) { return finsler_cost(p1, Vec2{0.0, y} - q1); };
  // Expand a bracket around the source height until both ends cost strictly
  // more than the center; convexity of the cost pins the minimum inside.
  const double center = q1.y;
  const double center_cost = cost_to(center);
  double w = std::max(1.0, -q1.x);
  int expansions = 0;
  while (cost_to(center - w) <= center_cost || cost_to(center + w) <= center_cost) {
    w *= 2.0;
    if (++expansions > 200) {
      throw NoConvergence("time_to_interface: bracket expansion failed");
    }
  }
  return cost_to(ternary_min(cost_to, center - w, center + w, 1e-10));
}

CriticalTimes critical_times(const Scene& scene, Vec2 q1) {
  require_region1_source(q1);
  const CriticalAngles ca = critical_angles(scene);
  CriticalTimes times;
  if (ca.plus) times.plus = interface_arrival_time(scene, q1, *ca.plus);
  if (ca.minus) times.minus = interface_arrival_time(scene, q1, *ca.minus);
  return times;
}

WavefrontArc reflected_wavefront(const Scene& scene, Vec2 q1, double t0, int sign) {
  require_region1_source(q1);
  const ReflectedChord chord = reflected_chord(scene, q1, t0, sign);
  WavefrontArc arc;
  arc.kind = ArcKind::Reflected;
  arc.param_start = 0.0;
  arc.param_end = 1.0;
  arc.samples = {chord.gamma, chord.phi};
  return arc;
}

WavefrontArc refracted_wavefront(const Scene& scene, Vec2 q1, double t0, int n) {
  require_region1_source(q1);
  if (n < 16) {
    throw std::invalid_argument("refracted_wavefront: need at least 16 samples");
  }
  const InterfaceCrossings roots = interface_crossings(scene, q1, t0);
  const CriticalAngles ca = critical_angles(scene);
  // The sweep runs over incidence angles whose rays are already past the
  // interface at t0. Each side is bounded by the critical angle once the
  // critical ray has arrived, and by the standard crossing angle before that.
  double lo = roots.theta_minus;
  if (ca.minus && t0 > interface_arrival_time(scene, q1, *ca.minus)) lo = *ca.minus;
  double hi = roots.theta_plus;
  if (ca.plus && t0 > interface_arrival_time(scene, q1, *ca.plus)) hi = *ca.plus;
  WavefrontArc arc;
  arc.kind = ArcKind::Refracted;
  arc.param_start = lo;
  arc.param_end = hi;
  arc.samples.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double theta1 = lo + (hi - lo) * i / (n - 1.0);
    arc.samples.push_back(trace_ray(scene, q1, theta1, t0).position);
  }
  return arc;
}

InterfaceCrossings interface_crossings(const Scene& scene, Vec2 q1, double t0) {
  require_region1_source(q1);
  const SpeedProfile& p1 = scene.profile1();
  const auto reach = [&](double theta) {
    return q1.x + t0 * speed(p1, theta) * std::cos(theta);
  };
  const double theta_star = first_touch_direction(scene);
  if (!(reach(theta_star) > 0.0)) {
    throw TooEarly("interface_crossings: the wavefront has not reached the interface");
  }
  // Scan for the two sign changes. When t0 barely exceeds the first-touch
  // time the positive bump around theta_star can be narrower than the scan
  // step, in which case splitting at theta_star gives guaranteed brackets.
  constexpr int kScan = 1024;
  std::vector<std::pair<double, double>> brackets;
  double prev_theta = -kPi;
  bool prev_positive = reach(prev_theta) > 0.0;
  for (int i = 1; i <= kScan; ++i) {
    const double theta = -kPi + 2.0 * kPi * i / kScan;
    const bool positive = reach(theta) > 0.0;
    if (positive != prev_positive) brackets.emplace_back(prev_theta, theta);
    prev_theta = theta;
    prev_positive = positive;
  }
  if (brackets.size() < 2) {
    brackets = {{-kPi / 2.0, theta_star}, {theta_star, kPi / 2.0}};
  }
  const double root_a = bisect(reach, brackets.front().first, brackets.front().second);
  const double root_b = bisect(reach, brackets.back().first, brackets.back().second);
  const auto crossing_y = [&](double theta) { return q1.y - q1.x * std::tan(theta); };
  InterfaceCrossings out;
  if (crossing_y(root_a) <= crossing_y(root_b)) {
    out.theta_minus = root_a;
    out.theta_plus = root_b;
  } else {
    out.theta_minus = root_b;
    out.theta_plus = root_a;
  }
  return out;
}

WavefrontIntersection wavefront_intersection(const Scene& scene, Vec2 q1, double t0,
                                             int sign) {
  require_region1_source(q1);
  const ReflectedChord chord = reflected_chord(scene, q1, t0, sign);
  const SpeedProfile& p1 = scene.profile1();
  const auto excess = [&](double s) {
    return finsler_cost(p1, chord_point(chord, s) - q1) - t0;
  };
  // The run endpoint lies ahead of the standard front and the reflected-ray
  // endpoint behind it, so the chord crosses the front exactly once.
  if (!(excess(0.0) > 0.0 && excess(1.0) < 0.0)) {
    throw NoConvergence(
        "wavefront_intersection: chord endpoints do not straddle the standard wavefront");
  }
  WavefrontIntersection meet;
  meet.s0 = bisect(excess, 0.0, 1.0);
  meet.point = chord_point(chord, meet.s0);
  meet.theta0 = angle_of(meet.point - q1);
  return meet;
}

CompositeWavefront composite_wavefront(const Scene& scene, Vec2 q1, double t0, int n) {
  require_region1_source(q1);
  if (!(t0 >= 0.0)) {
    throw std::invalid_argument("composite_wavefront: t0 must be >= 0");
  }
  if (n < 64) {
    throw std::invalid_argument("composite_wavefront: need at least 64 samples per arc");
  }
  CompositeWavefront front;
  front.time = t0;
  front.closed = true;

  const double tau_eta = interface_arrival_time(scene, q1, first_touch_direction(scene));
  if (t0 <= tau_eta) {
    // The untouched standard front, with the seam point repeated so the chain
    // closes exactly.
    WavefrontArc arc;
    arc.kind = ArcKind::Standard;
    arc.param_start = -kPi;
    arc.param_end = kPi;
    arc.samples.reserve(n + 1);
    for (int i = 0; i <= n; ++i) {
      arc.samples.push_back(standard_point(scene, q1, t0, -kPi + 2.0 * kPi * i / n));
    }
    arc.samples.back() = arc.samples.front();
    front.arcs.push_back(std::move(arc));
    return front;
  }

  const CriticalTimes taus = critical_times(scene, q1);
  const bool reflected_plus = taus.plus && t0 > *taus.plus;
  const bool reflected_minus = taus.minus && t0 > *taus.minus;
  const InterfaceCrossings roots = interface_crossings(scene, q1, t0);

  std::optional<WavefrontIntersection> cut_plus;
  std::optional<WavefrontIntersection> cut_minus;
  if (reflected_plus) cut_plus = wavefront_intersection(scene, q1, t0, +1);
  if (reflected_minus) cut_minus = wavefront_intersection(scene, q1, t0, -1);

  // Where the surviving standard piece ends on each side: at the reflected
  // wavefront once it exists, otherwise at the interface crossing.
  const double theta_top = cut_plus ? cut_plus->theta0 : roots.theta_plus;
  const double theta_bot = cut_minus ? cut_minus->theta0 : roots.theta_minus;

  WavefrontArc standard;
  standard.kind = ArcKind::Standard;
  standard.param_start = theta_top;
  standard.param_end = theta_bot + 2.0 * kPi;  // counterclockwise around the source
  standard.samples.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double theta =
        standard.param_start + (standard.param_end - standard.param_start) * i / (n - 1.0);
    standard.samples.push_back(standard_point(scene, q1, t0, theta));
  }
  front.arcs.push_back(std::move(standard));

  if (reflected_minus) {
    front.arcs.push_back(reflected_piece(scene, q1, t0, -1, cut_minus->s0, 0.0, n));
  }
  front.arcs.push_back(refracted_wavefront(scene, q1, t0, n));
  if (reflected_plus) {
    front.arcs.push_back(reflected_piece(scene, q1, t0, +1, 0.0, cut_plus->s0, n));
  }
  return front;
}

std::vector<CutLocusSample> cut_locus(const Scene& scene, Vec2 q1, double t_max, int n) {
  require_region1_source(q1);
  if (n < 2) {
    throw std::invalid_argument("cut_locus: need at least 2 samples per branch");
  }
  const CriticalAngles ca = critical_angles(scene);
  if (!ca.plus && !ca.minus) {
    throw MissingCriticalAngle("cut_locus: the scene has no critical angles");
  }
  const CriticalTimes taus = critical_times(scene, q1);
  std::vector<CutLocusSample> samples;
  for (const int sign : {+1, -1}) {
    const auto& tau = sign > 0 ? taus.plus : taus.minus;
    if (!tau || !(t_max > *tau)) continue;
    for (int j = 1; j <= n; ++j) {
      const double t = *tau + (t_max - *tau) * j / n;
      const WavefrontIntersection meet = wavefront_intersection(scene, q1, t, sign);
      samples.push_back({sign, t, meet.point});
    }
  }
  if (samples.empty()) {
    throw TooEarly("cut_locus: t_max does not exceed any critical time");
  }
  return samples;
}

}  // namespace snell
