#pragma once

#include <string>
#include <vector>

#include "snell/trajectories.hpp"
#include "snell/wavefront.hpp"

namespace snell {

// Shortest decimal text that round-trips to the same double.
std::string format_short(double x);

// Fixed 17-significant-digit decimal text, used by every CSV emitter.
std::string format_full(double x);

const char* region_name(Region r);                   // "Q1" | "Q2" | "Eta"
const char* arc_kind_name(ArcKind k);                // "standard" | "refracted" | "reflected"
const char* trajectory_kind_name(TrajectoryKind k);  // "straight" | "refracted" | ...

// CSV with header `segment,region,x0,y0,x1,y1,t0,t1,theta`, one row per leg.
std::string trajectory_csv(const Trajectory& trajectory);

// CSV with header `arc,kind,param,x,y`, one row per sample; the param column
// restores each sample's position in the arc's natural parameter.
std::string wavefront_csv(const CompositeWavefront& front);

// CSV with header `branch,t,x,y`, one row per sample, branch written +/-.
std::string cut_locus_csv(const std::vector<CutLocusSample>& samples);

// Standalone SVG with one polyline per arc, kinds mapped to class attributes,
// viewBox fitted to the samples with a 5% margin, +y drawn upwards.
std::string wavefront_svg(const CompositeWavefront& front);

}  // namespace snell
