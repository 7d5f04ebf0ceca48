#include "snell/output.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

namespace snell {

std::string format_short(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

std::string format_full(double x) {
  char buf[64];
  const int len = std::snprintf(buf, sizeof(buf), "%.17g", x);
  return std::string(buf, buf + len);
}

const char* region_name(Region r) {
  switch (r) {
    case Region::Q1:
      return "Q1";
    case Region::Q2:
      return "Q2";
    case Region::Eta:
      return "Eta";
  }
  return "?";
}

const char* arc_kind_name(ArcKind k) {
  switch (k) {
    case ArcKind::Standard:
      return "standard";
    case ArcKind::Refracted:
      return "refracted";
    case ArcKind::Reflected:
      return "reflected";
  }
  return "?";
}

const char* trajectory_kind_name(TrajectoryKind k) {
  switch (k) {
    case TrajectoryKind::Straight:
      return "straight";
    case TrajectoryKind::Refracted:
      return "refracted";
    case TrajectoryKind::CriticalRun:
      return "critical_run";
    case TrajectoryKind::Reflected:
      return "reflected";
    case TrajectoryKind::ThreeSegment:
      return "three_segment";
  }
  return "?";
}

std::string trajectory_csv(const Trajectory& trajectory) {
  std::string csv = "segment,region,x0,y0,x1,y1,t0,t1,theta\n";
  for (std::size_t i = 0; i < trajectory.segments.size(); ++i) {
    const Segment& s = trajectory.segments[i];
    csv += std::to_string(i);
    csv += ',';
    csv += region_name(s.region);
    for (const double v : {s.start.x, s.start.y, s.end.x, s.end.y, s.t_start, s.t_end, s.theta}) {
      csv += ',';
      csv += format_full(v);
    }
    csv += '\n';
  }
  return csv;
}

std::string wavefront_csv(const CompositeWavefront& front) {
  std::string csv = "arc,kind,param,x,y\n";
  for (std::size_t a = 0; a < front.arcs.size(); ++a) {
    const WavefrontArc& arc = front.arcs[a];
    const std::size_t last = arc.samples.size() - 1;
    for (std::size_t i = 0; i < arc.samples.size(); ++i) {
      const double frac = last == 0 ? 0.0 : static_cast<double>(i) / static_cast<double>(last);
      const double param = arc.param_start + (arc.param_end - arc.param_start) * frac;
      csv += std::to_string(a);
      csv += ',';
      csv += arc_kind_name(arc.kind);
      for (const double v : {param, arc.samples[i].x, arc.samples[i].y}) {
        csv += ',';
        csv += format_full(v);
      }
      csv += '\n';
    }
  }
  return csv;
}

std::string cut_locus_csv(const std::vector<CutLocusSample>& samples) {
  std::string csv = "branch,t,x,y\n";
  for (const CutLocusSample& s : samples) {
    csv += s.branch > 0 ? '+' : '-';
    for (const double v : {s.t, s.point.x, s.point.y}) {
      csv += ',';
      csv += format_full(v);
    }
    csv += '\n';
  }
  return csv;
}

std::string wavefront_svg(const CompositeWavefront& front) {
  // Plot coordinates flip y so the mathematical orientation survives SVG's
  // downward y axis.
  double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
  bool first = true;
  for (const WavefrontArc& arc : front.arcs) {
    for (const Vec2& p : arc.samples) {
      const double px = p.x;
      const double py = -p.y;
      if (first) {
        min_x = max_x = px;
        min_y = max_y = py;
        first = false;
      } else {
        min_x = std::min(min_x, px);
        max_x = std::max(max_x, px);
        min_y = std::min(min_y, py);
        max_y = std::max(max_y, py);
      }
    }
  }
  double pad = 0.05 * std::max(max_x - min_x, max_y - min_y);
  if (!(pad > 0.0)) pad = 1.0;
  const double view_w = (max_x - min_x) + 2.0 * pad;
  const double view_h = (max_y - min_y) + 2.0 * pad;
  const double stroke = std::max(view_w, view_h) / 400.0;

  std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
  svg += format_short(min_x - pad) + " " + format_short(min_y - pad) + " " +
         format_short(view_w) + " " + format_short(view_h) + "\">\n";
  svg += "<style>polyline { fill: none; stroke-width: " + format_short(stroke) +
         "; } .standard { stroke: #1f77b4; } .refracted { stroke: #d62728; } "
         ".reflected { stroke: #2ca02c; } .cutlocus { stroke: #9467bd; }</style>\n";
  for (const WavefrontArc& arc : front.arcs) {
    svg += "<polyline class=\"";
    svg += arc_kind_name(arc.kind);
    svg += "\" points=\"";
    for (std::size_t i = 0; i < arc.samples.size(); ++i) {
      if (i > 0) svg += ' ';
      svg += format_short(arc.samples[i].x) + "," + format_short(-arc.samples[i].y);
    }
    svg += "\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace snell
