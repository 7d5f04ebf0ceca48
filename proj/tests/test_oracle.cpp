#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "snell/errors.hpp"
#include "snell/oracle.hpp"
#include "snell/trajectories.hpp"

using namespace snell;
using fixtures::classic_scene;
using fixtures::ellipse_scene;

TEST_CASE("brute_force_min: same-region targets come back as the direct leg") {
  const Scene s = classic_scene();
  const OracleResult r = brute_force_min(s, {-2.0, 0.0}, {-1.0, 1.0});
  CHECK(r.family == OracleFamily::Direct);
  CHECK(r.time == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(r.path.segments.size() == 1);
}

TEST_CASE("brute_force_min: matched speeds recover the straight-through chord") {
  const Scene same(Isotropic{1.0}, Isotropic{1.0});
  const OracleResult r = brute_force_min(same, {-2.0, 0.0}, {1.0, 1.0});
  CHECK(r.family == OracleFamily::OneBreak);
  CHECK(r.time == doctest::Approx(std::sqrt(10.0)).epsilon(1e-9));
  // The break must sit where the chord crosses eta: y = 2/3.
  CHECK(r.path.segments[0].end.y == doctest::Approx(2.0 / 3.0).epsilon(1e-6));
}

TEST_CASE("brute_force_min: finds the interface run on the showcase pair") {
  const Scene s = ellipse_scene();
  const OracleResult above = brute_force_min(s, {-1.0, -2.0}, {-1.0, 2.0});
  CHECK(above.family == OracleFamily::TwoBreakEtaRun);
  const double expected = 4.0 / 3.0 * 2.0 + 4.0 / std::sqrt(3.0);
  CHECK(std::abs(above.time - expected) <= 2e-3);
  CHECK(above.path.segments.size() == 3);
  CHECK(above.path.segments[1].region == Region::Eta);

  const OracleResult below = brute_force_min(s, {-1.0, -1.0}, {-1.0, 1.0});
  CHECK(below.family == OracleFamily::Direct);
  CHECK(below.time == doctest::Approx(8.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("brute_force_min: never above the analytic time by more than grid error") {
  const Scene s = ellipse_scene();
  for (double y : {-1.0, 0.0, 0.8, 2.0}) {
    const Vec2 q2{1.3, y};
    const OracleResult o = brute_force_min(s, {-1.0, -0.4}, q2);
    const double analytic = global_minimizer(s, {-1.0, -0.4}, q2).time;
    CHECK(o.time >= analytic - 1e-9);
    CHECK(o.time <= analytic + 2e-3);
  }
}

TEST_CASE("brute_force_min: refinement never degrades the incumbent") {
  const Scene s = ellipse_scene();
  const Vec2 q1{-1.0, -2.0};
  const Vec2 q2{1.5, 1.0};
  double prev = brute_force_min(s, q1, q2, 128, 0).time;
  for (int rounds = 1; rounds <= 4; ++rounds) {
    const double t = brute_force_min(s, q1, q2, 128, rounds).time;
    CHECK(t <= prev + 1e-15);
    prev = t;
  }
}

TEST_CASE("brute_force_min: eta targets match the minimum of run and straight") {
  const Scene s = ellipse_scene();
  const Vec2 q1{-1.0, 0.0};
  for (double y : {-1.0, 0.5, 3.0}) {
    const Vec2 q2{0.0, y};
    const OracleResult o = brute_force_min(s, q1, q2);
    const double analytic = global_minimizer(s, q1, q2).time;
    CHECK(std::abs(o.time - analytic) <= 2e-3);
  }
}

TEST_CASE("brute_force_min: rejects sources outside region 1 and bad grids") {
  const Scene s = classic_scene();
  CHECK_THROWS_AS(brute_force_min(s, {1.0, 0.0}, {-1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_min(s, {0.0, 0.0}, {-1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_min(s, {-1.0, 0.0}, {1.0, 0.0}, 1, 4), std::invalid_argument);
}

TEST_CASE("reachable_check: classifies against the brute-force arrival time") {
  const Scene s = ellipse_scene();
  const Vec2 q1{-1.0, 0.0};
  CHECK(reachable_check(s, q1, 1.0, q1) == Reachability::Inside);
  CHECK(reachable_check(s, q1, 1.0, {-1.0, 5.0}) == Reachability::Outside);
  // A point on the time-1 standard front: q1 + V1(pi/4) (cos, sin)(pi/4).
  const double v = speed(s.profile1(), kPi / 4.0);
  const Vec2 on_front = q1 + v * unit_vector(kPi / 4.0);
  CHECK(reachable_check(s, q1, 1.0, on_front) == Reachability::Boundary);
}
