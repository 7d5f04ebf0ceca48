#include <string>
#include <variant>

#include "doctest.h"
#include "fixtures.hpp"
#include "snell/errors.hpp"
#include "snell/scene_io.hpp"

using namespace snell;

namespace {

int line_of_failure(const std::string& text) {
  try {
    parse_scene_text(text);
  } catch (const SceneParseError& e) {
    return e.line;
  }
  return -1;
}

}  // namespace

TEST_CASE("parse_scene_text: canonical ellipse scene") {
  const Scene s = parse_scene_text(
      "region1.profile = ellipse\n"
      "region1.a = 1\n"
      "region1.eps = 0.5\n"
      "region1.phi = 0\n"
      "region2.profile = ellipse\n"
      "region2.a = 1\n"
      "region2.eps = 0.5\n"
      "region2.phi = 1.5707963267948966\n");
  const auto& p1 = std::get<FocusEllipse>(s.profile1());
  CHECK(p1.a == 1.0);
  CHECK(p1.eps == 0.5);
  CHECK(p1.phi == 0.0);
  const auto& p2 = std::get<FocusEllipse>(s.profile2());
  CHECK(p2.phi == 1.5707963267948966);
  CHECK(speed(s.profile1(), 0.0) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(speed(s.profile2(), kPi / 2.0) == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("parse_scene_text: tolerates comments, blank lines, loose spacing") {
  const Scene s = parse_scene_text(
      "# a header comment\n"
      "\n"
      "region1.profile=isotropic   # trailing comment\n"
      "  region1.speed   =\t2.5\n"
      "region2.profile = isotropic\n"
      "region2.speed = 1e0\n");
  CHECK(std::get<Isotropic>(s.profile1()).c == 2.5);
  CHECK(std::get<Isotropic>(s.profile2()).c == 1.0);
}

TEST_CASE("parse_scene_text: rejections carry the offending line") {
  const std::string classic_tail =
      "region2.profile = isotropic\n"
      "region2.speed = 2\n";
  // Missing '=' on line 2.
  CHECK(line_of_failure("region1.profile = isotropic\nregion1.speed 1\n" + classic_tail) == 2);
  // Duplicate key on line 3.
  CHECK(line_of_failure(
            "region1.profile = isotropic\nregion1.speed = 1\nregion1.speed = 2\n" +
            classic_tail) == 3);
  // Non-numeric value on line 2.
  CHECK(line_of_failure("region1.profile = isotropic\nregion1.speed = fast\n" + classic_tail) ==
        2);
  // Unknown profile kind on line 1.
  CHECK(line_of_failure("region1.profile = banana\nregion1.speed = 1\n" + classic_tail) == 1);
  // Unknown key on line 3.
  CHECK(line_of_failure("region1.profile = isotropic\nregion1.speed = 1\nregion1.tilt = 2\n" +
                        classic_tail) == 3);
  // Key of the other profile family counts as unknown (line 3).
  CHECK(line_of_failure("region1.profile = isotropic\nregion1.speed = 1\nregion1.eps = 0.5\n" +
                        classic_tail) == 3);
  // A missing sub-key is attributed to the profile line (line 1).
  CHECK(line_of_failure("region1.profile = ellipse\nregion1.a = 1\nregion1.eps = 0.5\n" +
                        classic_tail) == 1);
  // A missing profile key is a whole-file error (line 0).
  CHECK(line_of_failure("region1.profile = isotropic\nregion1.speed = 1\n") == 0);
  // Out-of-range parameters surface at the profile line (line 4 here).
  CHECK(line_of_failure("region1.profile = isotropic\nregion1.speed = 1\n"
                        "region2.a = 1\nregion2.profile = ellipse\nregion2.eps = 1\n"
                        "region2.phi = 0\n") == 4);
  CHECK(line_of_failure("region1.profile = isotropic\nregion1.speed = -2\n" + classic_tail) ==
        1);
  // Eccentricities below 1 stay strongly convex and parse fine.
  CHECK(line_of_failure("region1.profile = ellipse\nregion1.a = 1\nregion1.eps = 0.999\n"
                        "region1.phi = 0.2\n" +
                        classic_tail) == -1);
}

TEST_CASE("dump_scene: frozen canonical text") {
  CHECK(dump_scene(fixtures::ellipse_scene()) ==
        "region1.profile = ellipse\n"
        "region1.a = 1\n"
        "region1.eps = 0.5\n"
        "region1.phi = 0\n"
        "region2.profile = ellipse\n"
        "region2.a = 1\n"
        "region2.eps = 0.5\n"
        "region2.phi = 1.5707963267948966\n");
  CHECK(dump_scene(fixtures::classic_scene()) ==
        "region1.profile = isotropic\n"
        "region1.speed = 1\n"
        "region2.profile = isotropic\n"
        "region2.speed = 2\n");
}

TEST_CASE("dump_scene: round-trips awkward doubles exactly") {
  const Scene original(Isotropic{0.1},
                       FocusEllipse{2.3456789012345678e-2, 0.987654321, -2.718281828459045});
  const Scene reparsed = parse_scene_text(dump_scene(original));
  CHECK(std::get<Isotropic>(reparsed.profile1()).c == 0.1);
  const auto& e = std::get<FocusEllipse>(reparsed.profile2());
  CHECK(e.a == 2.3456789012345678e-2);
  CHECK(e.eps == 0.987654321);
  CHECK(e.phi == -2.718281828459045);
  CHECK(dump_scene(reparsed) == dump_scene(original));
}

TEST_CASE("load_scene_file: reads the bundled fixtures and rejects bad paths") {
  const Scene ellipse = load_scene_file(std::string(SCENES_DIR) + "/ellipse.cfg");
  CHECK(std::get<FocusEllipse>(ellipse.profile2()).phi == 1.5707963267948966);
  const Scene classic = load_scene_file(std::string(SCENES_DIR) + "/classic.cfg");
  CHECK(std::get<Isotropic>(classic.profile1()).c == 1.0);
  CHECK(std::get<Isotropic>(classic.profile2()).c == 2.0);
  CHECK_THROWS_AS(load_scene_file("/nonexistent/missing.cfg"), SceneParseError);
}
