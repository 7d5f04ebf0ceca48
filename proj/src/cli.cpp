#include "snell/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "snell/errors.hpp"
#include "snell/oracle.hpp"
#include "snell/output.hpp"
#include "snell/scene_io.hpp"
#include "snell/wavefront.hpp"

namespace snell {

namespace {

constexpr double kDegPerRad = 180.0 / kPi;

// Flag values that parse as text but make no sense; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Vec2 parse_point(const std::string& text, const char* flag) {
  const auto bad = [&]() {
    return UsageError(std::string(flag) + " expects a point as X,Y, got '" + text + "'");
  };
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw bad();
  Vec2 p;
  const char* begin = text.data();
  auto [xp, xe] = std::from_chars(begin, begin + comma, p.x);
  if (xe != std::errc{} || xp != begin + comma) throw bad();
  const char* ybegin = begin + comma + 1;
  const char* yend = begin + text.size();
  auto [yp, ye] = std::from_chars(ybegin, yend, p.y);
  if (ye != std::errc{} || yp != yend) throw bad();
  return p;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
  file << content;
  if (!file) throw std::runtime_error("failed while writing '" + path + "'");
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Planar two-media anisotropic traveltime engine"};
  app.require_subcommand(1);

  std::string scene_path;
  bool degrees = false;
  double theta1 = 0.0;
  std::string from_text;
  std::string to_text;
  std::string source_text;
  std::string csv_path;
  std::string svg_path;
  double time = 0.0;
  double tmax = 0.0;
  int wavefront_samples = 256;
  int cutlocus_samples = 64;
  int cases = 50;
  std::uint64_t seed = 0;
  int grid = 512;
  int rounds = 4;

  const auto add_scene = [&scene_path](CLI::App* cmd) {
    cmd->add_option("--scene", scene_path, "Scene file")->required();
  };
  const auto add_degrees = [&degrees](CLI::App* cmd) {
    cmd->add_flag("--degrees", degrees, "Read and print angles in degrees");
  };

  CLI::App* critical = app.add_subcommand("critical", "Critical incidence angles of a scene");
  add_scene(critical);
  add_degrees(critical);

  CLI::App* refract_cmd =
      app.add_subcommand("refract", "Refraction outcome for an incidence angle");
  add_scene(refract_cmd);
  refract_cmd->add_option("--theta1", theta1, "Incidence angle in (-pi/2, pi/2)")->required();
  add_degrees(refract_cmd);

  CLI::App* reflect_cmd =
      app.add_subcommand("reflect", "Reflected direction for an incidence angle");
  add_scene(reflect_cmd);
  reflect_cmd->add_option("--theta1", theta1, "Incidence angle in (-pi/2, pi/2)")->required();
  add_degrees(reflect_cmd);

  CLI::App* trace = app.add_subcommand("trace", "Fastest trajectory between two points");
  add_scene(trace);
  trace->add_option("--from", from_text, "Source point X,Y")->required();
  trace->add_option("--to", to_text, "Target point X,Y")->required();
  trace->add_option("--csv", csv_path, "Write the segments to this CSV file");

  CLI::App* wavefront_cmd =
      app.add_subcommand("wavefront", "Composite wavefront at a fixed time");
  add_scene(wavefront_cmd);
  wavefront_cmd->add_option("--source", source_text, "Source point X,Y")->required();
  wavefront_cmd->add_option("--time", time, "Propagation time")->required();
  wavefront_cmd->add_option("--samples", wavefront_samples, "Samples per arc (default 256)")
      ->check(CLI::Range(64, 1000000));
  wavefront_cmd->add_option("--csv", csv_path, "Write the samples to this CSV file");
  wavefront_cmd->add_option("--svg", svg_path, "Write a plot to this SVG file");

  CLI::App* cutlocus_cmd = app.add_subcommand("cutlocus", "Sample the cut-locus branches");
  add_scene(cutlocus_cmd);
  cutlocus_cmd->add_option("--source", source_text, "Source point X,Y")->required();
  cutlocus_cmd->add_option("--tmax", tmax, "Largest sampled time")->required();
  cutlocus_cmd->add_option("--samples", cutlocus_samples, "Samples per branch (default 64)")
      ->check(CLI::Range(2, 1000000));
  cutlocus_cmd->add_option("--csv", csv_path, "Write the samples to this CSV file");

  CLI::App* verify =
      app.add_subcommand("verify", "Compare the solver against the brute-force oracle");
  add_scene(verify);
  verify->add_option("--cases", cases, "Number of random cases (default 50)")
      ->check(CLI::Range(1, 100000));
  verify->add_option("--seed", seed, "RNG seed (default 0)");
  verify->add_option("--grid", grid, "Oracle grid size (default 512)")
      ->check(CLI::Range(2, 100000));
  verify->add_option("--rounds", rounds, "Oracle refinement rounds (default 4)")
      ->check(CLI::Range(1, 64));

  CLI::App* dump = app.add_subcommand("scene-dump", "Re-emit the parsed scene canonically");
  add_scene(dump);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      return app.exit(e, out, err);
    }
    err << e.what() << '\n';
    return 2;
  }

  const auto angle_in = [&degrees](double a) { return degrees ? a / kDegPerRad : a; };
  const auto angle_out = [&degrees](double a) { return degrees ? a * kDegPerRad : a; };

  try {
    const Scene scene = load_scene_file(scene_path);

    if (critical->parsed()) {
      const CriticalAngles ca = critical_angles(scene);
      out << "theta_c_plus = "
          << (ca.plus ? format_short(angle_out(*ca.plus)) : std::string("none")) << '\n';
      out << "theta_c_minus = "
          << (ca.minus ? format_short(angle_out(*ca.minus)) : std::string("none")) << '\n';
    } else if (refract_cmd->parsed()) {
      const RefractionOutcome outcome = refract(scene, angle_in(theta1));
      if (const auto* r = std::get_if<Refracted>(&outcome)) {
        out << "outcome = refracted\n";
        out << "theta2 = " << format_short(angle_out(r->theta2)) << '\n';
      } else if (const auto* c = std::get_if<CriticalIncidence>(&outcome)) {
        out << "outcome = critical_incidence\n";
        out << "sign = " << (c->sign > 0 ? "+1" : "-1") << '\n';
        out << "theta2 = " << format_short(angle_out(c->sign * kPi / 2.0)) << '\n';
      } else {
        out << "outcome = total_reflection\n";
        out << "theta3 = " << format_short(angle_out(std::get<TotalReflection>(outcome).theta3))
            << '\n';
      }
    } else if (reflect_cmd->parsed()) {
      out << "theta3 = " << format_short(angle_out(reflect(scene, angle_in(theta1)))) << '\n';
    } else if (trace->parsed()) {
      const Vec2 from = parse_point(from_text, "--from");
      const Vec2 to = parse_point(to_text, "--to");
      const MinimizerResult res = global_minimizer(scene, from, to);
      out << "kind = " << trajectory_kind_name(res.best.kind) << '\n';
      out << "time = " << format_short(res.time) << '\n';
      out << "on_cut_locus = " << (res.on_cut_locus ? "true" : "false") << '\n';
      if (res.on_cut_locus && res.competitor) {
        out << "competitor = " << trajectory_kind_name(res.competitor->kind) << '\n';
      }
      if (!csv_path.empty()) write_file(csv_path, trajectory_csv(res.best));
    } else if (wavefront_cmd->parsed()) {
      const Vec2 source = parse_point(source_text, "--source");
      const CompositeWavefront front = composite_wavefront(scene, source, time, wavefront_samples);
      out << "time = " << format_short(front.time) << '\n';
      out << "arcs = " << front.arcs.size() << '\n';
      for (std::size_t i = 0; i < front.arcs.size(); ++i) {
        const WavefrontArc& arc = front.arcs[i];
        out << "arc " << i << ": " << arc_kind_name(arc.kind) << ", " << arc.samples.size()
            << " samples, param " << format_short(arc.param_start) << " .. "
            << format_short(arc.param_end) << '\n';
      }
      out << "closed = " << (front.closed ? "true" : "false") << '\n';
      if (!csv_path.empty()) write_file(csv_path, wavefront_csv(front));
      if (!svg_path.empty()) write_file(svg_path, wavefront_svg(front));
    } else if (cutlocus_cmd->parsed()) {
      const Vec2 source = parse_point(source_text, "--source");
      const auto samples = cut_locus(scene, source, tmax, cutlocus_samples);
      std::size_t plus = 0;
      for (const CutLocusSample& s : samples) plus += s.branch > 0 ? 1 : 0;
      out << "samples = " << samples.size() << '\n';
      out << "branch_plus = " << plus << '\n';
      out << "branch_minus = " << samples.size() - plus << '\n';
      if (!csv_path.empty()) write_file(csv_path, cut_locus_csv(samples));
    } else if (verify->parsed()) {
      std::mt19937_64 rng(seed);
      std::uniform_real_distribution<double> source_x(-3.0, -0.3);
      std::uniform_real_distribution<double> target_x(-2.9, 2.9);
      std::uniform_real_distribution<double> any_y(-3.0, 3.0);
      int passed = 0;
      for (int k = 0; k < cases; ++k) {
        const Vec2 q1{source_x(rng), any_y(rng)};
        double x = target_x(rng);
        x += x >= 0.0 ? 0.1 : -0.1;  // keep targets off the interface
        const Vec2 q2{x, any_y(rng)};
        const double analytic = global_minimizer(scene, q1, q2).time;
        const double oracle = brute_force_min(scene, q1, q2, grid, rounds).time;
        const double diff = oracle - analytic;
        const bool ok = diff >= -1e-6 && diff <= 2e-3;
        passed += ok ? 1 : 0;
        out << "case " << k << ": q1 = " << format_short(q1.x) << "," << format_short(q1.y)
            << " q2 = " << format_short(q2.x) << "," << format_short(q2.y)
            << " analytic = " << format_short(analytic) << " oracle = " << format_short(oracle)
            << " diff = " << format_short(diff) << (ok ? "" : "  FAIL") << '\n';
      }
      out << "passed " << passed << "/" << cases << " cases\n";
      if (passed != cases) return 1;
    } else if (dump->parsed()) {
      out << dump_scene(scene);
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace snell
