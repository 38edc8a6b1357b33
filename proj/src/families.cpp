#include "torusquake/families.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

namespace torusquake {

namespace {

double max_abs(const TracePoint& v) {
    return std::max({std::abs(v.x), std::abs(v.y), std::abs(v.z)});
}

int digits_or_horizon(double mag) {
    return numeric::digits_for_magnitude(std::isfinite(mag) ? mag : std::numeric_limits<double>::infinity());
}

double distance(const FNPoint& a, const FNPoint& b) {
    return std::hypot(a.ell - b.ell, a.tau - b.tau);
}

}  // namespace

TracePoint family1_phi_iterated(const TracePoint& v, int n) {
    if (n < 1) {
        throw std::invalid_argument("family index must be at least 1");
    }
    double prev = v.y, cur = v.z;  // x'(0), x'(1)
    for (int k = 2; k <= n; ++k) {
        prev = std::exchange(cur, v.x * cur - prev);
    }
    return {cur, v.x, prev};
}

TracePoint family1_quake_trace(const TracePoint& v, int n, double r, Precision prec) {
    if (n < 1) throw std::invalid_argument("family index must be at least 1");
    const TracePoint local = family1_phi(v, n);
    const double mag = std::max(max_abs(local), max_abs(flow_trace_alpha(local, r)));
    const int digits = prec == Precision::standard ? 16 : digits_or_horizon(mag);
    return numeric::dispatch_digits(digits, [&]<class T>(std::type_identity<T>) {
        return family1_quake_trace<T>(v.as<T>(), n, T(r)).template as<double>();
    });
}

TriangleLengths family1_quake(const TriangleLengths& w, int n, double r, Precision prec) {
    if (n < 1) throw std::invalid_argument("family index must be at least 1");
    double mag = 0;
    if (prec != Precision::standard) {
        const TracePoint local = family1_phi(nu_inv(w), n);
        mag = std::max(max_abs(local), max_abs(flow_trace_alpha(local, r)));
    }
    const int digits = prec == Precision::standard ? 16 : digits_or_horizon(mag);
    return numeric::dispatch_digits(digits, [&]<class T>(std::type_identity<T>) {
        return family1_quake<T>(w.as<T>(), n, T(r)).template as<double>();
    });
}

TriangleLengths family1_limit(const TriangleLengths& w, int n, double s) {
    if (n < 1) throw std::invalid_argument("family index must be at least 1");
    const TracePoint local = family1_phi(nu_inv(w), n);
    const double ell_n = geodesic_length(local.x);
    return family1_quake(w, n, (s / n) / ell_n);
}

double family1_limit_deviation(const TriangleLengths& w, int n, double s) {
    const TriangleLengths got = family1_limit(w, n, s);
    const TriangleLengths want = quake_lengths_alpha(w, from_arclength(s, w.a));
    return std::sqrt((got.a - want.a) * (got.a - want.a) + (got.b - want.b) * (got.b - want.b) +
                     (got.c - want.c) * (got.c - want.c));
}

TracePoint family2_quake(const TracePoint& v, int n, double r, Curve c, Precision prec) {
    if (n < 0) throw std::invalid_argument("family index must be nonnegative");
    return numeric::with_estimated_precision(
        prec, max_abs(v),
        [&](double* mag) { return family2_quake<double>(v, n, r, c, mag); },
        [&]<class T>(std::type_identity<T>) { return family2_quake<T>(v.as<T>(), n, T(r), c).template as<double>(); });
}

TriangleLengths family2_quake_lengths(const TriangleLengths& w, int n, double r) {
    return nu(family2_quake(nu_inv(w), n, r));
}

double family2_rescale(double t, int n, RescaleMode mode) {
    if (n < 0) throw std::invalid_argument("family index must be nonnegative");
    const double k = mode == RescaleMode::unit_twist ? 2.0 * n : 1.0 * n;
    return t / std::pow(kLambdaPlus, k);
}

Slope family2_slope(int n) {
    if (n < 0) throw std::invalid_argument("family index must be nonnegative");
    IntVec2 v{1, 0};
    const IntMatrix2 N{1, 1, 1, 2};
    for (int i = 0; i < n; ++i) v = N * v;
    return Slope(v.m, v.n);
}

Slope family_slope(const FamilySpec& f) {
    if (f.kind == FamilyKind::ABpow) {
        if (f.n < 1) throw std::invalid_argument("family index must be at least 1");
        return Slope(f.n, 1);
    }
    return family2_slope(f.n);
}

CurveSpec CurveSpec::parse(const std::string& text) {
    CurveSpec c;
    auto index = [&](std::size_t skip) {
        std::size_t used = 0;
        const std::string rest = text.substr(skip);
        const int n = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("bad family index in " + text);
        return n;
    };
    if (text == "alpha" || text == "a") {
        c.slope = Slope(1, 0);
    } else if (text == "beta" || text == "b") {
        c.slope = Slope(0, 1);
    } else if (text == "alphabeta" || text == "ab") {
        c.slope = Slope(1, 1);
    } else if (text.rfind("f1:", 0) == 0) {
        c.kind = Kind::family1;
        c.n = index(3);
        c.slope = family_slope({FamilyKind::ABpow, c.n});
    } else if (text.rfind("f2d:", 0) == 0) {
        c.kind = Kind::family2_dual;
        c.n = index(4);
        if (c.n < 0) throw std::invalid_argument("family index must be nonnegative");
        IntVec2 d{0, 1};
        for (int i = 0; i < c.n; ++i) d = IntMatrix2{1, 1, 1, 2} * d;
        c.slope = Slope(d.m, d.n);
    } else if (text.rfind("f2:", 0) == 0) {
        c.kind = Kind::family2;
        c.n = index(3);
        c.slope = family2_slope(c.n);
    } else {
        c.slope = Slope::parse(text);
    }
    return c;
}

std::string CurveSpec::label() const {
    switch (kind) {
        case Kind::slope:
            if (slope == Slope(1, 0)) return "alpha";
            if (slope == Slope(0, 1)) return "beta";
            if (slope == Slope(1, 1)) return "alphabeta";
            return "slope" + std::to_string(slope.p()) + "_" + std::to_string(slope.q());
        case Kind::family1:
            return n == 1 ? "alphabeta" : "abpow" + std::to_string(n);
        case Kind::family2:
            return "T" + std::to_string(n) + "alpha";
        case Kind::family2_dual:
            return "T" + std::to_string(n) + "beta";
    }
    return "curve";
}

TracePoint curve_quake(const CurveSpec& c, const TracePoint& v, double r) {
    switch (c.kind) {
        case CurveSpec::Kind::slope:
            if (c.slope == Slope(1, 0)) return flow_trace(v, Curve::alpha, r);
            if (c.slope == Slope(0, 1)) return flow_trace(v, Curve::beta, r);
            if (c.slope == Slope(1, 1)) return flow_trace(v, Curve::alphabeta, r);
            return quake_about(build_framing(c.slope), v, r);
        case CurveSpec::Kind::family1:
            return family1_quake_trace(v, c.n, r);
        case CurveSpec::Kind::family2:
            return family2_quake(v, c.n, r, Curve::alpha);
        case CurveSpec::Kind::family2_dual:
            return family2_quake(v, c.n, r, Curve::beta);
    }
    return v;
}

double curve_length(const CurveSpec& c, const TracePoint& v) {
    double t = 0;
    switch (c.kind) {
        case CurveSpec::Kind::slope: t = word_trace_at(v, curve_from_slope(c.slope)); break;
        case CurveSpec::Kind::family1: t = family1_phi(v, c.n).x; break;
        case CurveSpec::Kind::family2: t = family2_power(v, c.n).x; break;
        case CurveSpec::Kind::family2_dual: t = family2_power(v, c.n).y; break;
    }
    // Family traces grow doubly exponentially in n and leave double range quickly.
    if (!std::isfinite(t)) {
        throw NumericHorizonError("exceeds numeric horizon: trace of " + c.label() + " overflows double range",
                                  std::numeric_limits<double>::infinity());
    }
    return geodesic_length(t);
}

std::vector<SlopeRow> slope_limit_table(const Slope& s, const FNPoint& u, const std::vector<double>& s_grid,
                                        int dir) {
    check_dir(dir);
    for (std::size_t i = 0; i < s_grid.size(); ++i) {
        if (!(s_grid[i] > 0) || (i > 0 && !(s_grid[i] > s_grid[i - 1]))) {
            throw std::invalid_argument("s grid must be positive and increasing");
        }
    }
    const TracePoint v = zeta_inv(u);
    CurveSpec c;
    c.slope = s;
    const double ell_gamma = curve_length(c, v);
    std::vector<SlopeRow> rows;
    rows.reserve(s_grid.size());
    for (double sv : s_grid) {
        const FNPoint p = zeta(curve_quake(c, v, dir * sv / ell_gamma));
        rows.push_back({sv, p.ell, p.tau, slope_ratio(p)});
    }
    return rows;
}

ProbeResult quake_intersection_probe(const Slope& s1, const Slope& s2, const FNPoint& u, double s_max) {
    if (s1 == s2) {
        throw std::invalid_argument("intersection probe needs two distinct curves");
    }
    if (!(s_max > 0)) {
        throw std::invalid_argument("s_max must be positive");
    }
    const TracePoint v = zeta_inv(u);
    CurveSpec c1, c2;
    c1.slope = s1;
    c2.slope = s2;
    const double l1 = curve_length(c1, v), l2 = curve_length(c2, v);
    auto dist = [&](double s) {
        return distance(zeta(curve_quake(c1, v, -s / l1)), zeta(curve_quake(c2, v, s / l2)));
    };

    constexpr int kGrid = 200;
    std::vector<double> grid(kGrid + 1), d(kGrid + 1);
    for (int i = 0; i <= kGrid; ++i) {
        grid[i] = s_max * (i + 1) / (kGrid + 1);
        d[i] = dist(grid[i]);
    }
    int best = -1;
    for (int i = 1; i < kGrid; ++i) {
        if (d[i] < d[i - 1] && d[i] <= d[i + 1] && (best < 0 || d[i] < d[best])) best = i;
    }
    ProbeResult res;
    if (best < 0) {
        res.message = "no candidate intersection in range";
        return res;
    }
    double lo = grid[best - 1], hi = grid[best + 1];
    const double g = (std::sqrt(5.0) - 1) / 2;
    double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    double f1 = dist(x1), f2 = dist(x2);
    for (int it = 0; it < 80 && hi - lo > 1e-12 * std::max(1.0, hi); ++it) {
        if (f1 < f2) {
            hi = x2, x2 = x1, f2 = f1;
            x1 = hi - g * (hi - lo), f1 = dist(x1);
        } else {
            lo = x1, x1 = x2, f1 = f2;
            x2 = lo + g * (hi - lo), f2 = dist(x2);
        }
    }
    res.found = true;
    res.s_star = f1 < f2 ? x1 : x2;
    res.residual = std::min(f1, f2);
    res.message = "bracketed minimum";
    return res;
}

}  // namespace torusquake
