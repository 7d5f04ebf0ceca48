#pragma once

#include <optional>
#include <vector>

#include "snell/trajectories.hpp"

namespace snell {

enum class ArcKind { Standard, Refracted, Reflected };

// One sampled piece of a wavefront. The natural parameter is the launch angle
// theta for Standard arcs, the incidence angle theta1 for Refracted arcs, and
// the chord fraction s for Reflected arcs (s = 0 at the interface-run end,
// s = 1 at the ordinary reflected-ray end).
struct WavefrontArc {
  ArcKind kind = ArcKind::Standard;
  std::vector<Vec2> samples;
  double param_start = 0.0;
  double param_end = 0.0;
};

// A closed, counterclockwise chain of arcs tracing the set of points first
// reached exactly at `time`. Consecutive arc endpoints coincide up to solver
// tolerance; `closed` additionally chains the last arc back to the first.
struct CompositeWavefront {
  double time = 0.0;
  std::vector<WavefrontArc> arcs;
  bool closed = false;
};

// A point reached at time t by two distinct minimizers (straight and
// three-segment), on the branch run in direction branch * pi/2 along the
// interface.
struct CutLocusSample {
  int branch = 1;
  double t = 0.0;
  Vec2 point;
};

// Times at which the critical trajectories on each side reach the interface;
// absent alongside the corresponding critical angle.
struct CriticalTimes {
  std::optional<double> plus;
  std::optional<double> minus;
};

// The two angles at which the standard wavefront crosses the interface;
// theta_minus marks the crossing point with the smaller y.
struct InterfaceCrossings {
  double theta_minus = 0.0;
  double theta_plus = 0.0;
};

// Where the standard and reflected wavefronts meet: chord fraction s0 on the
// reflected segment, the meeting point, and its direction theta0 from the
// source.
struct WavefrontIntersection {
  double theta0 = 0.0;
  double s0 = 0.0;
  Vec2 point;
};

// n samples of the free wavefront q1 + t0 V1(theta) (cos theta, sin theta)
// over theta in (-pi, pi]. Requires a region-1 source, t0 >= 0, n >= 16.
WavefrontArc standard_wavefront(const Scene& scene, Vec2 q1, double t0, int n);

// Earliest time the standard wavefront touches the interface: the minimum
// over y of the straight-line cost from q1 to (0, y), located by ternary
// search on y over an expanding bracket.
double time_to_interface(const Scene& scene, Vec2 q1);

// Arrival times |q1.x| / (V1(theta_c) cos theta_c) of the critical rays at
// the interface, for whichever critical angles the scene has.
CriticalTimes critical_times(const Scene& scene, Vec2 q1);

// The reflected wavefront at time t0 on one side: the straight segment from
// the interface-run endpoint (s = 0) to the reflected-ray endpoint (s = 1),
// returned as its two endpoint samples. Throws MissingCriticalAngle when that
// side has no critical angle and TooEarly when t0 <= tau^sign.
WavefrontArc reflected_wavefront(const Scene& scene, Vec2 q1, double t0, int sign);

// n samples of the transmitted wavefront, swept monotonically over the
// incidence angles whose rays have reached the interface by t0, clipped at
// the critical angles. Includes the interface-run endpoints once t0 passes
// the critical times. Throws TooEarly when t0 <= time_to_interface.
WavefrontArc refracted_wavefront(const Scene& scene, Vec2 q1, double t0, int n);

// The two roots of q1.x + t0 V1(theta) cos(theta) = 0, i.e. the launch angles
// whose straight rays sit exactly on the interface at t0. Throws TooEarly.
InterfaceCrossings interface_crossings(const Scene& scene, Vec2 q1, double t0);

// The unique point where the reflected segment pierces the standard
// wavefront, found by bisecting the straight-line cost along the chord.
// Throws MissingCriticalAngle / TooEarly as reflected_wavefront, and
// NoConvergence if the chord endpoints fail to straddle the front.
WavefrontIntersection wavefront_intersection(const Scene& scene, Vec2 q1, double t0,
                                             int sign);

// The full first-arrival wavefront at t0, assembled counterclockwise from a
// standard arc plus, once t0 allows, a refracted arc and up to two reflected
// arcs. Every arc carries n samples. Requires n >= 64.
CompositeWavefront composite_wavefront(const Scene& scene, Vec2 q1, double t0, int n);

// For each side whose critical time lies below t_max, n samples of the
// standard/reflected wavefront intersection at times uniformly spaced in
// (tau^side, t_max]. Throws MissingCriticalAngle when the scene has no
// critical angle at all, TooEarly when t_max exceeds neither critical time.
std::vector<CutLocusSample> cut_locus(const Scene& scene, Vec2 q1, double t_max, int n);

}  // namespace snell
