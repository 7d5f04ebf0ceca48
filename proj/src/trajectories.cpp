#include "snell/trajectories.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "snell/errors.hpp"
#include "snell/numerics.hpp"

namespace snell {

namespace {

constexpr double kContiguityTol = 1e-9;   // max gap between consecutive legs
constexpr double kTieTol = 1e-9;          // traveltime tie => cut locus
constexpr double kNearCriticalTol = 1e-9; // clamp solver output to an eta run
constexpr double kOnEtaTol = 1e-12;       // |x| below this counts as "on eta"

Region region_of(Vec2 q) {
  if (q.x < 0.0) return Region::Q1;
  if (q.x > 0.0) return Region::Q2;
  return Region::Eta;
}

// Leg between two known endpoints; duration follows from the region's cost.
Segment leg_between(const Scene& scene, Vec2 from, Vec2 to, Region region,
                    double t_start) {
  Segment s;
  s.start = from;
  s.end = to;
  s.region = region;
  s.theta = (from == to) ? 0.0 : angle_of(to - from);
  s.t_start = t_start;
  s.t_end = t_start + finsler_cost(scene.profile_of(region), to - from);
  return s;
}

// Leg from a known start in a known direction for a known duration.
Segment leg_from(const Scene& scene, Vec2 from, Region region, double theta,
                 double duration, double t_start) {
  const double v = speed(scene.profile_of(region), theta);
  Segment s;
  s.start = from;
  s.end = from + (duration * v) * unit_vector(theta);
  s.region = region;
  s.theta = theta;
  s.t_start = t_start;
  s.t_end = t_start + duration;
  return s;
}

// Point where the straight ray from q1 (region 1) at angle theta1 meets eta.
Vec2 eta_hit(Vec2 q1, double theta1) {
  return {0.0, q1.y - q1.x * std::tan(theta1)};
}

// Unwrap a direction onto the contiguous back-branch interval [pi/2, 3pi/2).
// Directions with negative x-component land here bijectively.
double back_param(double theta) {
  return theta < kPi / 2.0 ? theta + 2.0 * kPi : theta;
}

// Scans [lo, hi] for a sign change of f (n_scan intervals), then bisects it.
// The residuals may be +-infinity at the ends. Throws NoConvergence when no
// bracket shows up.
template <class F>
double scan_and_bisect(F&& f, double lo, double hi, int n_scan, int n_bisect) {
  double prev_x = lo;
  double prev_f = f(lo);
  for (int i = 1; i <= n_scan; ++i) {
    const double x = lo + i * (hi - lo) / n_scan;
    const double fx = f(x);
    if (prev_f == 0.0) return prev_x;
    if (std::signbit(fx) != std::signbit(prev_f)) {
      return bisect(f, prev_x, x, n_bisect);
    }
    prev_x = x;
    prev_f = fx;
  }
  if (prev_f == 0.0) return prev_x;
  throw NoConvergence("no sign change found while bracketing the interface solve");
}

SpeedProfile mirror_profile(const SpeedProfile& p) {
  if (const auto* iso = std::get_if<Isotropic>(&p)) return *iso;
  auto e = std::get<FocusEllipse>(p);
  e.phi = wrap_angle(kPi - e.phi);
  return e;
}

Vec2 mirror_point(Vec2 q) { return {-q.x, q.y}; }

Region mirror_region(Region r) {
  if (r == Region::Q1) return Region::Q2;
  if (r == Region::Q2) return Region::Q1;
  return Region::Eta;
}

Trajectory mirror_trajectory(const Trajectory& t) {
  Trajectory out;
  out.kind = t.kind;
  out.segments.reserve(t.segments.size());
  for (const Segment& s : t.segments) {
    Segment m = s;
    m.start = mirror_point(s.start);
    m.end = mirror_point(s.end);
    m.theta = (s.start == s.end) ? s.theta : wrap_angle(kPi - s.theta);
    m.region = mirror_region(s.region);
    out.segments.push_back(m);
  }
  return out;
}

}  // namespace

double traveltime(const Scene& scene, const Trajectory& trajectory) {
  if (trajectory.segments.empty()) {
    throw MalformedTrajectory("trajectory has no segments");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < trajectory.segments.size(); ++i) {
    const Segment& s = trajectory.segments[i];
    if (i > 0 && distance(trajectory.segments[i - 1].end, s.start) > kContiguityTol) {
      throw MalformedTrajectory("segments " + std::to_string(i - 1) + " and " +
                                std::to_string(i) + " do not join up");
    }
    total += finsler_cost(scene.profile_of(s.region), s.end - s.start);
  }
  return total;
}

RayState trace_ray(const Scene& scene, Vec2 source, double theta1, double t) {
  if (!(source.x < 0.0)) {
    throw std::invalid_argument("trace_ray: source must lie in region 1 (x < 0)");
  }
  if (t < 0.0) {
    throw std::invalid_argument("trace_ray: time must be non-negative");
  }
  Trajectory path;
  const double v1 = speed(scene.profile1(), theta1);
  // Rays aimed away from the interface never leave region 1.
  const double time_to_eta =
      std::cos(theta1) > 0.0 ? -source.x / (v1 * std::cos(theta1))
                             : std::numeric_limits<double>::infinity();
  if (t <= time_to_eta) {
    path.kind = TrajectoryKind::Straight;
    path.segments.push_back(leg_from(scene, source, Region::Q1, theta1, t, 0.0));
    return {path.segments.back().end, path};
  }

  const Vec2 b = eta_hit(source, theta1);
  Segment first = leg_from(scene, source, Region::Q1, theta1, time_to_eta, 0.0);
  first.end = b;  // pin the break exactly onto eta
  path.segments.push_back(first);
  const double remaining = t - time_to_eta;

  const RefractionOutcome outcome = refract(scene, theta1);
  if (const auto* r = std::get_if<Refracted>(&outcome)) {
    path.kind = TrajectoryKind::Refracted;
    path.segments.push_back(
        leg_from(scene, b, Region::Q2, r->theta2, remaining, time_to_eta));
  } else if (const auto* c = std::get_if<CriticalIncidence>(&outcome)) {
    path.kind = TrajectoryKind::CriticalRun;
    path.segments.push_back(leg_from(scene, b, Region::Eta,
                                     c->sign * kPi / 2.0, remaining, time_to_eta));
  } else {
    path.kind = TrajectoryKind::Reflected;
    path.segments.push_back(leg_from(scene, b, Region::Q1,
                                     std::get<TotalReflection>(outcome).theta3,
                                     remaining, time_to_eta));
  }
  return {path.segments.back().end, path};
}

Trajectory straight_between(const Scene& scene, Vec2 q1, Vec2 q2) {
  const Region r1 = region_of(q1);
  if (r1 == Region::Eta || r1 != region_of(q2)) {
    throw RegionMismatch("straight_between needs endpoints strictly inside one region");
  }
  Trajectory t;
  t.kind = TrajectoryKind::Straight;
  t.segments.push_back(leg_between(scene, q1, q2, r1, 0.0));
  return t;
}

namespace {

// Critical-run path q1 -> b1 -> (0, y_end) used when a transmitted solve
// collapses onto the critical angle.
Trajectory critical_run_path(const Scene& scene, Vec2 q1, double theta_c, int sign,
                             double y_end) {
  Trajectory t;
  t.kind = TrajectoryKind::CriticalRun;
  const Vec2 b1 = eta_hit(q1, theta_c);
  t.segments.push_back(leg_between(scene, q1, b1, Region::Q1, 0.0));
  Segment run = leg_between(scene, b1, {0.0, y_end}, Region::Eta,
                            t.segments.back().t_end);
  run.theta = sign * kPi / 2.0;  // direction of zero-length runs included
  t.segments.push_back(run);
  return t;
}

}  // namespace

Trajectory refracted_between(const Scene& scene, Vec2 q1, Vec2 q2) {
  if (!(q1.x < 0.0 && q2.x > 0.0)) {
    throw RegionMismatch("refracted_between needs q1 in region 1 and q2 in region 2");
  }
  const CriticalAngles ca = critical_angles(scene);
  // Inset the non-critical ends: refract() is open at +-pi/2, and the huge
  // (but finite) tangents there still give correctly signed residuals.
  const double lo = ca.minus ? *ca.minus : -kPi / 2.0 + 1e-12;
  const double hi = ca.plus ? *ca.plus : kPi / 2.0 - 1e-12;

  // Angular miss: transmitted direction minus the direction actually needed
  // to reach q2 from the break point. Strictly increasing in theta1 and
  // pole-free (a vertical-offset miss would go through tan near +-pi/2,
  // where the solved angles' last-ulp error flips its sign).
  const auto miss = [&](double th1) -> double {
    const RefractionOutcome out = refract(scene, th1);
    double th2;
    if (const auto* r = std::get_if<Refracted>(&out)) {
      th2 = r->theta2;
    } else if (const auto* c = std::get_if<CriticalIncidence>(&out)) {
      th2 = c->sign * kPi / 2.0;
    } else {
      // Grazed past the window edge by rounding; clamp like the critical ray.
      th2 = th1 > 0.0 ? kPi / 2.0 : -kPi / 2.0;
    }
    return th2 - angle_of(q2 - eta_hit(q1, th1));
  };
  const double theta1 = scan_and_bisect(miss, lo, hi, 512, 120);

  // A solve that lands on (or hugs) the critical angle is really the limiting
  // interface run; the transmitted direction would blow up.
  for (int sign : {+1, -1}) {
    const auto& crit = sign > 0 ? ca.plus : ca.minus;
    if (crit && std::abs(theta1 - *crit) < kNearCriticalTol) {
      return critical_run_path(scene, q1, *crit, sign, q2.y);
    }
  }

  const Vec2 b = eta_hit(q1, theta1);
  Trajectory t;
  t.kind = TrajectoryKind::Refracted;
  t.segments.push_back(leg_between(scene, q1, b, Region::Q1, 0.0));
  t.segments.push_back(leg_between(scene, b, q2, Region::Q2, t.segments.back().t_end));
  return t;
}

Trajectory reflected_between(const Scene& scene, Vec2 q1, Vec2 q2) {
  if (!(q1.x < 0.0 && q2.x < 0.0)) {
    throw RegionMismatch("reflected_between needs both endpoints in region 1");
  }
  if (q1 == q2) {
    throw std::invalid_argument("reflected_between: endpoints must differ");
  }
  // Angular miss on the unwrapped back branch: the bounce direction theta3
  // decreases with theta1 while the direction needed to hit q2 increases, so
  // the residual is strictly decreasing with a single root.
  const auto miss = [&](double th1) -> double {
    const double th3 = reflect(scene, th1);
    return back_param(th3) - back_param(angle_of(q2 - eta_hit(q1, th1)));
  };
  const double lo = -kPi / 2.0 + 1e-12;
  const double hi = kPi / 2.0 - 1e-12;
  const double theta1 = scan_and_bisect(miss, lo, hi, 512, 120);

  const Vec2 b = eta_hit(q1, theta1);
  Trajectory t;
  t.kind = TrajectoryKind::Reflected;
  t.segments.push_back(leg_between(scene, q1, b, Region::Q1, 0.0));
  t.segments.push_back(leg_between(scene, b, q2, Region::Q1, t.segments.back().t_end));
  return t;
}

std::optional<Trajectory> three_segment_between(const Scene& scene, Vec2 q1, Vec2 q2,
                                                int sign) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("three_segment_between: sign must be +1 or -1");
  }
  if (!(q1.x < 0.0 && q2.x < 0.0)) {
    throw RegionMismatch("three_segment_between needs both endpoints in region 1");
  }
  const CriticalAngles ca = critical_angles(scene);
  const auto& crit = sign > 0 ? ca.plus : ca.minus;
  if (!crit) {
    throw MissingCriticalAngle(sign > 0 ? "no upward critical angle"
                                        : "no downward critical angle");
  }
  const double theta_c = *crit;
  const double theta3 = reflect(scene, theta_c);
  const Vec2 b1 = eta_hit(q1, theta_c);
  // Departure point of the return leg: walk back from q2 along -theta3.
  const Vec2 b2 = {0.0, q2.y - q2.x * std::tan(theta3)};
  const double run = b2.y - b1.y;
  // The computed critical angle carries rounding error, so the run can land a
  // few ulp on the wrong side of zero in the exact-threshold configuration.
  constexpr double kDegenerateRunTol = 1e-9;
  if (sign * run < 0.0 && std::abs(run) > kDegenerateRunTol) {
    return std::nullopt;  // run would go against the grazing flow
  }

  Trajectory t;
  if (std::abs(run) <= kDegenerateRunTol) {
    // Continuity limit: the interface run vanishes, leaving a pure critical
    // reflection.
    t.kind = TrajectoryKind::Reflected;
    t.segments.push_back(leg_between(scene, q1, b1, Region::Q1, 0.0));
    t.segments.push_back(leg_between(scene, b1, q2, Region::Q1, t.segments.back().t_end));
    return t;
  }
  t.kind = TrajectoryKind::ThreeSegment;
  t.segments.push_back(leg_between(scene, q1, b1, Region::Q1, 0.0));
  t.segments.push_back(leg_between(scene, b1, b2, Region::Eta, t.segments.back().t_end));
  t.segments.push_back(leg_between(scene, b2, q2, Region::Q1, t.segments.back().t_end));
  return t;
}

namespace {

struct Candidate {
  Trajectory path;
  double time;
};

MinimizerResult pick_minimum(std::vector<Candidate> candidates) {
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) { return a.time < b.time; });
  MinimizerResult result;
  result.best = candidates.front().path;
  result.time = candidates.front().time;
  if (candidates.size() > 1 && candidates[1].time - candidates[0].time <= kTieTol) {
    // Two distinct minimizers: the straight one is reported as primary.
    std::size_t primary = 0, other = 1;
    if (candidates[1].path.kind == TrajectoryKind::Straight) {
      primary = 1;
      other = 0;
    }
    result.best = candidates[primary].path;
    result.time = candidates[primary].time;
    result.on_cut_locus = true;
    result.competitor = candidates[other].path;
  }
  return result;
}

MinimizerResult global_minimizer_q1(const Scene& scene, Vec2 q1, Vec2 q2) {
  // Target in region 2: the transmitted path is the unique minimizer.
  if (q2.x > kOnEtaTol) {
    MinimizerResult result;
    result.best = refracted_between(scene, q1, q2);
    result.time = traveltime(scene, result.best);
    return result;
  }

  const CriticalAngles ca = critical_angles(scene);
  std::vector<Candidate> candidates;

  if (std::abs(q2.x) <= kOnEtaTol) {
    // Target on eta: straight up to the interface, or ride it from a critical
    // touch point.
    Trajectory straight;
    straight.kind = TrajectoryKind::Straight;
    straight.segments.push_back(leg_between(scene, q1, {0.0, q2.y}, Region::Q1, 0.0));
    candidates.push_back({straight, straight.segments.back().t_end});
    for (int sign : {+1, -1}) {
      const auto& crit = sign > 0 ? ca.plus : ca.minus;
      if (!crit) continue;
      const Vec2 b1 = eta_hit(q1, *crit);
      if (sign * (q2.y - b1.y) <= 0.0) continue;  // zero-length runs equal "straight"
      Trajectory run = critical_run_path(scene, q1, *crit, sign, q2.y);
      candidates.push_back({run, run.segments.back().t_end});
    }
    return pick_minimum(std::move(candidates));
  }

  // Target in region 1: straight against the two possible interface detours.
  Trajectory straight = straight_between(scene, q1, q2);
  candidates.push_back({straight, traveltime(scene, straight)});
  for (int sign : {+1, -1}) {
    const auto& crit = sign > 0 ? ca.plus : ca.minus;
    if (!crit) continue;
    if (auto three = three_segment_between(scene, q1, q2, sign)) {
      candidates.push_back({*three, traveltime(scene, *three)});
    }
  }
  return pick_minimum(std::move(candidates));
}

}  // namespace

MinimizerResult global_minimizer(const Scene& scene, Vec2 q1, Vec2 q2) {
  if (q1.x == 0.0) {
    throw std::invalid_argument("global_minimizer: source on the interface is not supported");
  }
  if (q1.x < 0.0) return global_minimizer_q1(scene, q1, q2);
  // Source in region 2: solve the scene mirrored through eta.
  const Scene mirrored(mirror_profile(scene.profile2()), mirror_profile(scene.profile1()));
  MinimizerResult m = global_minimizer_q1(mirrored, mirror_point(q1), mirror_point(q2));
  MinimizerResult result;
  result.best = mirror_trajectory(m.best);
  result.time = m.time;
  result.on_cut_locus = m.on_cut_locus;
  if (m.competitor) result.competitor = mirror_trajectory(*m.competitor);
  return result;
}

}  // namespace snell
