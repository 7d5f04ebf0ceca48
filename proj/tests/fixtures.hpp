#pragma once

#include "snell/interface_laws.hpp"

// Shared test scenes.
namespace fixtures {

// Region 1: ellipse with major axis along +x; region 2: same shape rotated to
// +y. Slow upward on the left (V1(pi/2) = 3/4), fast upward on the right
// (V2(pi/2) = 3/2), so only the upward critical angle (pi/6) exists.
inline snell::Scene ellipse_scene() {
  return snell::Scene(snell::FocusEllipse{1.0, 0.5, 0.0},
                      snell::FocusEllipse{1.0, 0.5, snell::kPi / 2.0});
}

// Classical Snell pair: V1 = 1, V2 = 2, i.e. refraction indices 1 and 1/2.
// Critical angles at +-pi/6.
inline snell::Scene classic_scene() {
  return snell::Scene(snell::Isotropic{1.0}, snell::Isotropic{2.0});
}

}  // namespace fixtures
