#include "snell/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace snell {

namespace {

struct GridMin {
  double arg = 0.0;
  double value = std::numeric_limits<double>::infinity();
};

// Minimum of f over an inclusive uniform grid; first hit wins ties.
template <class F>
GridMin grid_min(F&& f, double lo, double hi, int n) {
  GridMin best;
  for (int i = 0; i <= n; ++i) {
    const double x = lo + i * (hi - lo) / n;
    const double fx = f(x);
    if (fx < best.value) {
      best.value = fx;
      best.arg = x;
    }
  }
  return best;
}

// Nested 1-D refinement: re-grid a 10x narrower bracket around the incumbent
// each round, never letting the best value regress.
template <class F>
GridMin refine_min(F&& f, double lo, double hi, int n, int rounds) {
  GridMin best = grid_min(f, lo, hi, n);
  double width = hi - lo;
  for (int r = 0; r < rounds; ++r) {
    width /= 10.0;
    const GridMin round_best =
        grid_min(f, best.arg - width / 2.0, best.arg + width / 2.0, n);
    if (round_best.value < best.value) best = round_best;
  }
  return best;
}

}  // namespace

OracleResult brute_force_min(const Scene& scene, Vec2 q1, Vec2 q2, int grid_n,
                             int rounds) {
  if (!(q1.x < 0.0)) {
    throw std::invalid_argument("brute_force_min: q1 must lie in region 1 (x < 0)");
  }
  if (grid_n < 2 || rounds < 0) {
    throw std::invalid_argument("brute_force_min: need grid_n >= 2 and rounds >= 0");
  }
  const SpeedProfile& p1 = scene.profile1();
  const SpeedProfile& p2 = scene.profile2();

  // Cost of the closing leg from a point on eta to q2. Anything not strictly
  // left of eta (including travel along eta itself) is costed with region 2.
  const auto closing_cost = [&](Vec2 from) {
    return q2.x < 0.0 ? finsler_cost(p1, q2 - from) : finsler_cost(p2, q2 - from);
  };

  // Candidate break heights live in a band generously covering both points.
  const double pad = 2.0 * (std::abs(q1.x) + std::abs(q2.x) + std::abs(q1.y - q2.y));
  const double y_lo = std::min(q1.y, q2.y) - pad;
  const double y_hi = std::max(q1.y, q2.y) + pad;

  OracleResult result;
  result.time = std::numeric_limits<double>::infinity();

  if (q2.x <= 0.0) {
    // Direct family: one leg entirely inside (the closure of) region 1.
    result.time = finsler_cost(p1, q2 - q1);
    result.family = OracleFamily::Direct;
    Trajectory direct;
    direct.kind = TrajectoryKind::Straight;
    Segment s;
    s.start = q1;
    s.end = q2;
    s.region = Region::Q1;
    s.theta = (q1 == q2) ? 0.0 : angle_of(q2 - q1);
    s.t_end = result.time;
    direct.segments.push_back(s);
    result.path = direct;
  }

  // One break: q1 -> (0, y) -> q2.
  const auto one_break_time = [&](double y) {
    const Vec2 b{0.0, y};
    return finsler_cost(p1, b - q1) + closing_cost(b);
  };
  const GridMin one = refine_min(one_break_time, y_lo, y_hi, grid_n, rounds);
  if (one.value < result.time) {
    result.time = one.value;
    result.family = OracleFamily::OneBreak;
    const Vec2 b{0.0, one.arg};
    Trajectory path;
    path.kind = q2.x > 0.0    ? TrajectoryKind::Refracted
                : q2.x < 0.0  ? TrajectoryKind::Reflected
                              : TrajectoryKind::CriticalRun;
    Segment first;
    first.start = q1;
    first.end = b;
    first.region = Region::Q1;
    first.theta = (q1 == b) ? 0.0 : angle_of(b - q1);
    first.t_end = finsler_cost(p1, b - q1);
    Segment second;
    second.start = b;
    second.end = q2;
    second.region = q2.x > 0.0 ? Region::Q2 : q2.x < 0.0 ? Region::Q1 : Region::Eta;
    second.theta = (b == q2) ? 0.0 : angle_of(q2 - b);
    second.t_start = first.t_end;
    second.t_end = one.value;
    path.segments = {first, second};
    result.path = path;
  }

  // Two breaks with an interface run between them: q1 -> (0,y1) -> (0,y2) -> q2.
  {
    GridMin best1, best2;
    double best = std::numeric_limits<double>::infinity();
    double w1 = y_hi - y_lo, w2 = y_hi - y_lo;
    double c1 = 0.5 * (y_lo + y_hi), c2 = c1;
    for (int r = 0; r <= rounds; ++r) {
      const double lo1 = c1 - w1 / 2.0, hi1 = c1 + w1 / 2.0;
      const double lo2 = c2 - w2 / 2.0, hi2 = c2 + w2 / 2.0;
      for (int i = 0; i <= grid_n; ++i) {
        const double y1 = lo1 + i * (hi1 - lo1) / grid_n;
        const Vec2 b1{0.0, y1};
        const double leg1 = finsler_cost(p1, b1 - q1);
        for (int j = 0; j <= grid_n; ++j) {
          const double y2 = lo2 + j * (hi2 - lo2) / grid_n;
          const Vec2 b2{0.0, y2};
          const double t = leg1 + finsler_cost(p2, b2 - b1) + closing_cost(b2);
          if (t < best) {
            best = t;
            best1.arg = y1;
            best2.arg = y2;
          }
        }
      }
      c1 = best1.arg;
      c2 = best2.arg;
      w1 /= 10.0;
      w2 /= 10.0;
    }
    if (best < result.time) {
      result.time = best;
      result.family = OracleFamily::TwoBreakEtaRun;
      const Vec2 b1{0.0, best1.arg};
      const Vec2 b2{0.0, best2.arg};
      Trajectory path;
      path.kind = TrajectoryKind::ThreeSegment;
      Segment s1;
      s1.start = q1;
      s1.end = b1;
      s1.region = Region::Q1;
      s1.theta = (q1 == b1) ? 0.0 : angle_of(b1 - q1);
      s1.t_end = finsler_cost(p1, b1 - q1);
      Segment s2;
      s2.start = b1;
      s2.end = b2;
      s2.region = Region::Eta;
      s2.theta = (b1 == b2) ? 0.0 : angle_of(b2 - b1);
      s2.t_start = s1.t_end;
      s2.t_end = s1.t_end + finsler_cost(p2, b2 - b1);
      Segment s3;
      s3.start = b2;
      s3.end = q2;
      s3.region = q2.x > 0.0 ? Region::Q2 : q2.x < 0.0 ? Region::Q1 : Region::Eta;
      s3.theta = (b2 == q2) ? 0.0 : angle_of(q2 - b2);
      s3.t_start = s2.t_end;
      s3.t_end = best;
      path.segments = {s1, s2, s3};
      result.path = path;
    }
  }

  return result;
}

Reachability reachable_check(const Scene& scene, Vec2 q1, double t0, Vec2 probe,
                             double tol) {
  const double arrival = brute_force_min(scene, q1, probe).time;
  if (std::abs(arrival - t0) <= tol) return Reachability::Boundary;
  return arrival < t0 ? Reachability::Inside : Reachability::Outside;
}

}  // namespace snell
