#include "torusquake/coords.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "torusquake/errors.hpp"

namespace torusquake {

namespace {

constexpr double kChartSlack = 1e-9;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

FNPoint zeta(const TracePoint& v) {
    if (!(v.x > 2)) {
        throw DomainError("point outside chart: x = " + fmt(v.x) + " must exceed 2");
    }
    const double a = numeric::half_acosh(v.x);
    const double c = v.y * std::tanh(a) / 2;  // cosh(τ/2)
    if (!(c >= 1 - kChartSlack)) {
        throw DomainError("point outside chart: acosh argument " + fmt(c) + " < 1");
    }
    return {2 * a, 2 * std::asinh((v.x * v.y - 2 * v.z) / (2 * v.x))};
}

TracePoint zeta_inv(const FNPoint& u) {
    if (!(u.ell > 0)) {
        throw DomainError("Fenchel-Nielsen length must be positive");
    }
    const double x = 2 * std::cosh(u.ell / 2);
    const double y = 2 * std::cosh(u.tau / 2) / std::tanh(u.ell / 2);
    return {x, y, x * y / 2 - x * std::sinh(u.tau / 2)};
}

FNPoint fn_quake_alpha(const FNPoint& u, double s, int orient) {
    return {u.ell, u.tau + check_dir(orient) * s};
}

// Works in the mirrored twist tp = −τ, for which the closed forms below are written.
FNPoint fn_quake_beta_direct(const FNPoint& u, double s) {
    if (!(u.ell > 0)) {
        throw DomainError("Fenchel-Nielsen length must be positive");
    }
    const double tp = -u.tau;
    const double cb = std::cosh(u.tau / 2) / std::tanh(u.ell / 2);
    const double b = std::acosh(cb);
    const double sb = std::sinh(b);
    const double ch = std::cosh(u.ell / 2) * (std::cosh(s / 2) + std::sinh(s / 2) * std::sinh(tp / 2) / sb);
    if (!(ch >= 1)) {
        throw DomainError("left the real locus: cosh(l/2) argument " + fmt(ch));
    }
    const double half_ell = std::acosh(ch);
    double ct = cb * std::tanh(half_ell);
    if (ct < 1) {
        if (ct < 1 - kChartSlack) throw DomainError("point outside chart: acosh argument " + fmt(ct));
        ct = 1;
    }
    const double s_star = -2 * std::atanh(std::sinh(tp / 2) / sb);
    const double tp_new = (s >= s_star ? 1.0 : -1.0) * 2 * std::acosh(ct);
    return {2 * half_ell, -tp_new};
}

Spherical spherical(const TracePoint& v) {
    if (v.x == 0 && v.y == 0 && v.z == 0) {
        throw DomainError("spherical coordinates undefined at the origin");
    }
    const double rho = std::hypot(v.x, v.y);
    return {std::atan2(v.y, v.x), std::atan2(rho, v.z), rho};
}

Spherical inverted(const TracePoint& v) {
    Spherical s = spherical(v);
    if (s.rad == 0) {
        throw DomainError("inverted radius undefined on the z-axis");
    }
    s.rad = 1 / s.rad;
    return s;
}

SimplexPoint simplex(const TracePoint& v) {
    if (v.x == 0 || v.y == 0 || v.z == 0) {
        throw DomainError("simplex coordinates need nonzero traces");
    }
    return {v.x / (v.y * v.z), v.y / (v.x * v.z), v.z / (v.x * v.y)};
}

PlanePoint simplex_plane(const SimplexPoint& sp) {
    return {sp.q + sp.r / 2, std::numbers::sqrt3 / 2 * sp.r};
}

double slope_ratio(const FNPoint& u) {
    if (!(u.ell > 0)) {
        throw DomainError("Fenchel-Nielsen length must be positive");
    }
    return u.tau / u.ell;
}

Chart parse_chart(std::string_view name) {
    if (name == "trace") return Chart::trace;
    if (name == "lengths" || name == "triangle") return Chart::lengths;
    if (name == "fn") return Chart::fn;
    if (name == "spherical") return Chart::spherical;
    if (name == "inverted") return Chart::inverted;
    if (name == "simplex") return Chart::simplex;
    if (name == "simplex-plane") return Chart::simplex_plane;
    throw std::invalid_argument("unknown chart: " + std::string(name));
}

std::string_view chart_name(Chart c) {
    switch (c) {
        case Chart::trace: return "trace";
        case Chart::lengths: return "lengths";
        case Chart::fn: return "fn";
        case Chart::spherical: return "spherical";
        case Chart::inverted: return "inverted";
        case Chart::simplex: return "simplex";
        case Chart::simplex_plane: return "simplex-plane";
    }
    return "?";
}

std::vector<std::string> chart_columns(Chart c) {
    switch (c) {
        case Chart::trace: return {"x", "y", "z"};
        case Chart::lengths: return {"a", "b", "c"};
        case Chart::fn: return {"ell", "tau"};
        case Chart::spherical: return {"theta", "phi", "rad"};
        case Chart::inverted: return {"theta", "phi", "inv_rad"};
        case Chart::simplex: return {"simplex_p", "simplex_q", "simplex_r"};
        case Chart::simplex_plane: return {"px", "py"};
    }
    return {};
}

bool chart_is_planar(Chart c) {
    return c == Chart::fn || c == Chart::simplex_plane;
}

std::vector<double> to_chart(const TracePoint& v, Chart c, int orient) {
    switch (c) {
        case Chart::trace: return {v.x, v.y, v.z};
        case Chart::lengths: {
            const TriangleLengths w = nu(v);
            return {w.a, w.b, w.c};
        }
        case Chart::fn: {
            const FNPoint u = zeta(v);
            return {u.ell, check_dir(orient) * u.tau};
        }
        case Chart::spherical: {
            const Spherical s = spherical(v);
            return {s.theta, s.phi, s.rad};
        }
        case Chart::inverted: {
            const Spherical s = inverted(v);
            return {s.theta, s.phi, s.rad};
        }
        case Chart::simplex: {
            const SimplexPoint sp = simplex(v);
            return {sp.p, sp.q, sp.r};
        }
        case Chart::simplex_plane: {
            const PlanePoint pp = simplex_plane(simplex(v));
            return {pp.x, pp.y};
        }
    }
    return {};
}

TracePoint from_chart(const std::vector<double>& k, Chart c, int orient) {
    if (k.size() != chart_columns(c).size()) {
        throw std::invalid_argument("chart " + std::string(chart_name(c)) + " expects " +
                                    std::to_string(chart_columns(c).size()) + " coordinates");
    }
    switch (c) {
        case Chart::trace: return {k[0], k[1], k[2]};
        case Chart::lengths: return nu_inv(TriangleLengths{k[0], k[1], k[2]});
        case Chart::fn: return zeta_inv({k[0], check_dir(orient) * k[1]});
        case Chart::spherical:
        case Chart::inverted: {
            const double rho = c == Chart::spherical ? k[2] : 1 / k[2];
            if (!(rho > 0) || std::sin(k[1]) == 0) {
                throw DomainError("spherical point has no trace preimage");
            }
            return {rho * std::cos(k[0]), rho * std::sin(k[0]), rho * std::cos(k[1]) / std::sin(k[1])};
        }
        case Chart::simplex:
        case Chart::simplex_plane: {
            double p = 0, q = 0, r = 0;
            if (c == Chart::simplex) {
                p = k[0], q = k[1], r = k[2];
            } else {
                r = 2 * k[1] / std::numbers::sqrt3;
                q = k[0] - r / 2;
                p = 1 - q - r;
            }
            if (!(p > 0 && q > 0 && r > 0)) {
                throw DomainError("simplex point must have positive entries");
            }
            // On the level set xyz = 1/(pqr), so x = 1/sqrt(qr) and cyclically.
            return {1 / std::sqrt(q * r), 1 / std::sqrt(p * r), 1 / std::sqrt(p * q)};
        }
    }
    return {};
}

}  // namespace torusquake
