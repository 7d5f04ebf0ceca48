#pragma once

#include "snell/trajectories.hpp"

namespace snell {

enum class OracleFamily { Direct, OneBreak, TwoBreakEtaRun };

struct OracleResult {
  double time = 0.0;
  OracleFamily family = OracleFamily::Direct;
  Trajectory path;
};

// Brute-force reference minimizer, independent of the interface laws: lays
// grids of candidate break heights on eta, costs each candidate path with the
// raw region costs, and refines the grid around the incumbent (bracket shrunk
// 10x per round). Deterministic; ties resolve to the earliest grid point.
OracleResult brute_force_min(const Scene& scene, Vec2 q1, Vec2 q2,
                             int grid_n = 512, int rounds = 4);

enum class Reachability { Inside, Boundary, Outside };

// Compares the brute-force arrival time at probe with t0: strictly earlier
// arrival means probe is inside the time-t0 reachable set, later means
// outside, and within tol of t0 counts as boundary.
Reachability reachable_check(const Scene& scene, Vec2 q1, double t0, Vec2 probe,
                             double tol = 2e-3);

}  // namespace snell
