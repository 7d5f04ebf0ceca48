#pragma once

#include <optional>
#include <vector>

#include "snell/interface_laws.hpp"

namespace snell {

// One straight leg of a piecewise-straight path. Within a segment travel is
// at the constant Euclidean speed of its region's profile in direction theta,
// so end - start = (t_end - t_start) * V(theta) * (cos theta, sin theta).
struct Segment {
  Vec2 start;
  Vec2 end;
  Region region = Region::Q1;
  double theta = 0.0;
  double t_start = 0.0;
  double t_end = 0.0;
};

enum class TrajectoryKind { Straight, Refracted, CriticalRun, Reflected, ThreeSegment };

struct Trajectory {
  TrajectoryKind kind = TrajectoryKind::Straight;
  std::vector<Segment> segments;
};

// Sum of per-leg costs, each leg costed with its region's profile. Throws
// MalformedTrajectory when consecutive segments do not join up in space.
double traveltime(const Scene& scene, const Trajectory& trajectory);

struct RayState {
  Vec2 position;
  Trajectory path;
};

// Shoot a ray from a region-1 source at angle theta1 and follow it for time t:
// straight until the interface, then whatever refract() dictates (transmitted
// leg, run along the interface, or total reflection).
RayState trace_ray(const Scene& scene, Vec2 source, double theta1, double t);

// Single-leg path between two points strictly inside the same region.
// Throws RegionMismatch otherwise.
Trajectory straight_between(const Scene& scene, Vec2 q1, Vec2 q2);

// Two-leg transmitted path from q1 in region 1 to q2 in region 2.
Trajectory refracted_between(const Scene& scene, Vec2 q1, Vec2 q2);

// Two-leg totally/ordinarily reflected path between region-1 points.
Trajectory reflected_between(const Scene& scene, Vec2 q1, Vec2 q2);

// Critical-angle leg, run along the interface in direction sign * pi/2, then
// reflected leg back to q2 in region 1. Empty when the run would have to go
// against `sign`; degenerates to the two-leg critical reflection when the run
// has zero length. Throws MissingCriticalAngle when the scene has no critical
// angle on that side.
std::optional<Trajectory> three_segment_between(const Scene& scene, Vec2 q1, Vec2 q2,
                                                int sign);

struct MinimizerResult {
  Trajectory best;
  double time = 0.0;
  // True when a geometrically distinct trajectory ties within 1e-9; the tying
  // competitor is attached.
  bool on_cut_locus = false;
  std::optional<Trajectory> competitor;
};

// Fastest path from q1 (off the interface) to q2 anywhere in the plane,
// chosen among the families that can globally minimize: straight, refracted,
// interface runs and three-segment paths. Sources in region 2 are handled by
// mirroring the scene.
MinimizerResult global_minimizer(const Scene& scene, Vec2 q1, Vec2 q2);

}  // namespace snell
