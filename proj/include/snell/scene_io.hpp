#pragma once

#include <string>

#include "snell/interface_laws.hpp"

namespace snell {

// Parse a scene written in line-based `key = value` form with `#` comments.
// Required keys: regionN.profile = isotropic|ellipse with regionN.speed for
// isotropic and regionN.a / regionN.eps / regionN.phi for ellipse (N = 1, 2).
// Throws SceneParseError carrying the 1-based line of the offence; profile
// validation failures are attributed to the regionN.profile line.
Scene parse_scene_text(const std::string& text);

// Read and parse a scene file; unreadable paths raise SceneParseError.
Scene load_scene_file(const std::string& path);

// Canonical textual form. Numbers use shortest round-trip formatting, so
// parse_scene_text(dump_scene(s)) rebuilds exactly the same parameters.
std::string dump_scene(const Scene& scene);

}  // namespace snell
