#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "torusquake/charvar.hpp"
#include "torusquake/quake.hpp"

namespace torusquake {

struct FNPoint {
    double ell = 0;  // length of the α geodesic
    double tau = 0;  // signed twist, positive when z < xy/2
};

struct Spherical {
    double theta = 0;
    double phi = 0;
    double rad = 0;
};

struct SimplexPoint {
    double p = 0, q = 0, r = 0;
};

struct PlanePoint {
    double x = 0, y = 0;
};

FNPoint zeta(const TracePoint& v);
TracePoint zeta_inv(const FNPoint& u);

/// (ℓ, τ + orient·s): orient = +1 matches the trace-coordinate α-flow.
FNPoint fn_quake_alpha(const FNPoint& u, double s, int orient = 1);
/// β-earthquake by arclength s from the closed-form length and twist relations.
FNPoint fn_quake_beta_direct(const FNPoint& u, double s);

Spherical spherical(const TracePoint& v);
Spherical inverted(const TracePoint& v);
SimplexPoint simplex(const TracePoint& v);
PlanePoint simplex_plane(const SimplexPoint& sp);
double slope_ratio(const FNPoint& u);

enum class Chart { trace, lengths, fn, spherical, inverted, simplex, simplex_plane };

Chart parse_chart(std::string_view name);
std::string_view chart_name(Chart c);
std::vector<std::string> chart_columns(Chart c);
bool chart_is_planar(Chart c);

/// Coordinates of v in chart c. orient = -1 reports τ with the opposite sign.
std::vector<double> to_chart(const TracePoint& v, Chart c, int orient = 1);
TracePoint from_chart(const std::vector<double>& coords, Chart c, int orient = 1);

}  // namespace torusquake
