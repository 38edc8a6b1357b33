#pragma once

#include <string>
#include <vector>

#include "config.hpp"
#include "torusquake/torusquake.hpp"

namespace torusquake::cli {

struct PathSample {
    double r;
    double s;
    TracePoint v;
};

/// Samples the earthquake about c from v at n evenly spaced unit-twist times in [r_min, r_max].
/// Samples that should lie on T_tr are checked at tol_level; failures name the sample.
std::vector<PathSample> sample_path(const CurveSpec& c, const TracePoint& v, double r_min, double r_max,
                                    int n, double tol_level);

struct FigureJob {
    CurveSpec curve;
    int start_index;
    TracePoint start;
    double r_min;
    double r_max;
};

struct FigureSpec {
    std::string id;
    std::string title;
    std::vector<Chart> charts;
    std::vector<FigureJob> jobs;
};

const std::vector<std::string>& figure_ids();
FigureSpec figure_spec(const std::string& id, const Settings& settings);

/// Starting sets S_α, S_β = Σ_Rot⁻¹ S_α, S_αβ = Σ_Rot S_α.
std::vector<TracePoint> start_set(Curve c);

/// Unit-twist range for a figure curve: family members are rescaled by n² or λ₊^{2n}.
double figure_time_scale(const CurveSpec& c);

/// Writes one CSV per job plus an SVG per planar chart; returns the written paths.
std::vector<std::string> run_figure(const std::string& id, const std::string& out_dir, const Settings& settings);

}  // namespace torusquake::cli
