#include "torusquake/quake.hpp"

#include <string>

namespace torusquake {

double collar_residual(const TriangleLengths& w) {
    const double ca = std::cosh(w.a), cb = std::cosh(w.b), cc = std::cosh(w.c);
    return ca * ca + cb * cb + cc * cc - 2 * ca * cb * cc;
}

FlowParams flow_params(const TracePoint& v) {
    const auto& [x, y, z] = v;
    if (x < 0) {
        throw DomainError("extend via Klein symmetries");
    }
    FlowParams p;
    const double y1 = x * y - z;
    if (x > 2) {
        const double root = std::sqrt((x - 2) * (x + 2));
        p.branch = FlowParams::Branch::hyperbolic;
        p.Splus = (x + root) / 2;
        p.Sminus = 1 / p.Splus;
        p.Cplus = (y1 - y * p.Sminus) / root;
        p.Cminus = (y * p.Splus - y1) / root;
    } else if (x == 2) {
        p.branch = FlowParams::Branch::parabolic;
        p.constant = y;
        p.linear = y - z;
    } else {
        p.branch = FlowParams::Branch::elliptic;
        p.theta = std::acos(x / 2);
        p.cos_coeff = y;
        p.sin_coeff = (x * y - 2 * z) / std::sqrt(4 - x * x);
    }
    return p;
}

double FlowParams::y(double r) const {
    switch (branch) {
        case Branch::hyperbolic:
            return Cplus * std::pow(Splus, r) + Cminus * std::pow(Sminus, r);
        case Branch::parabolic:
            return constant + linear * r;
        case Branch::elliptic:
            return cos_coeff * std::cos(r * theta) + sin_coeff * std::sin(r * theta);
    }
    return 0;
}

double to_arclength(double r, double a) {
    if (!(a > 0)) throw DomainError("half-length must be positive");
    return 2 * r * a;
}

double from_arclength(double s, double a) {
    if (!(a > 0)) throw DomainError("half-length must be positive");
    return s / (2 * a);
}

Collar collar(double ell) {
    if (!(ell > 0)) {
        throw DomainError("collar requires positive length");
    }
    return {2 / std::tanh(ell / 2), std::asinh(1 / std::sinh(ell / 2))};
}

std::array<double, 3> projective_limit(const TracePoint& v, int dir) {
    check_dir(dir);
    if (!(v.x > 2)) {
        throw DomainError("limit formula requires hyperbolic x");
    }
    const double root = std::sqrt((v.x - 2) * (v.x + 2));
    auto n = [root](double sgn, double u, double vv, double w) {
        return vv + sgn * (2 * w - u * vv) / root;
    };
    const double s = dir > 0 ? 1.0 : -1.0;
    const double p1 = n(-s, v.x, v.y, v.z);
    const double p2 = n(s, v.x, v.z, v.y);
    const double norm = std::hypot(p1, p2);
    return {0.0, p1 / norm, p2 / norm};
}

}  // namespace torusquake
