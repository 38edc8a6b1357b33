#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "torusquake/charvar.hpp"
#include "torusquake/chgcoords.hpp"
#include "torusquake/coords.hpp"
#include "torusquake/quake.hpp"

namespace torusquake {

enum class FamilyKind {
    ABpow,    // γ_n = αβα^{n−1}, dual α⁻¹
    PAorbit,  // γ_n = Tⁿ(α), T = T_β T_α⁻¹
};

struct FamilySpec {
    FamilyKind kind;
    int n;
};

inline const double kLambdaPlus = (3 + std::sqrt(5.0)) / 2;

// ---- family 1 ----

template <class T>
TraceTriple<T> family1_phi(const TraceTriple<T>& v, int n) {
    const T k = v.z - v.x * v.y / 2;
    return {detail::chebyshev_orbit(v.x, v.y, k, T(n)), v.x, detail::chebyshev_orbit(v.x, v.y, k, T(n - 1))};
}

/// family1_phi by stepping x'(k) = x x'(k−1) − x'(k−2) from x'(0) = y, x'(1) = z.
TracePoint family1_phi_iterated(const TracePoint& v, int n);

template <class T>
TraceTriple<T> family1_psi(const TraceTriple<T>& w, int n) {
    const T k = w.z - w.y * w.x / 2;
    return {w.y, detail::chebyshev_orbit(w.y, w.x, k, T(n)), detail::chebyshev_orbit(w.y, w.x, k, T(n - 1))};
}

template <class T>
TraceTriple<T> family1_quake_trace(const TraceTriple<T>& v, int n, const T& r) {
    return family1_psi(flow_trace_alpha(family1_phi(v, n), r), n);
}

namespace detail {

template <class T>
T family_cosh_orbit(const T& ca, const T& cb, const T& cc, const T& a, int n) {
    using std::cosh;
    using std::sinh;
    return cb * cosh(n * a) + (cc - ca * cb) * sinh(n * a) / sinh(a);
}

template <class T>
T checked_acosh(const T& arg) {
    using std::acosh;
    if (!(arg >= 1)) {
        throw DomainError("left the real locus");
    }
    return acosh(arg);
}

}  // namespace detail

template <class T>
LengthTriple<T> family1_phi_bar(const LengthTriple<T>& w, int n) {
    using std::cosh;
    const T ca = cosh(w.a), cb = cosh(w.b), cc = cosh(w.c);
    return {detail::checked_acosh(detail::family_cosh_orbit(ca, cb, cc, w.a, n)), w.a,
            detail::checked_acosh(detail::family_cosh_orbit(ca, cb, cc, w.a, n - 1))};
}

template <class T>
LengthTriple<T> family1_psi_bar(const LengthTriple<T>& w, int n) {
    using std::cosh;
    const T ca = cosh(w.a), cb = cosh(w.b), cc = cosh(w.c);
    // B(n) = cosh a' cosh(n b') + (cosh c' − cosh a' cosh b') sinh(n b')/sinh b'
    return {w.b, detail::checked_acosh(detail::family_cosh_orbit(cb, ca, cc, w.b, n)),
            detail::checked_acosh(detail::family_cosh_orbit(cb, ca, cc, w.b, n - 1))};
}

template <class T>
LengthTriple<T> family1_quake(const LengthTriple<T>& w, int n, const T& r) {
    return family1_psi_bar(quake_lengths_alpha(family1_phi_bar(w, n), r), n);
}

TracePoint family1_quake_trace(const TracePoint& v, int n, double r, Precision prec = Precision::automatic);
TriangleLengths family1_quake(const TriangleLengths& w, int n, double r, Precision prec = Precision::automatic);

/// E_n(w) at arclength s/n measured along γ_n.
TriangleLengths family1_limit(const TriangleLengths& w, int n, double s);
/// Euclidean distance between family1_limit and the α-earthquake at arclength s.
double family1_limit_deviation(const TriangleLengths& w, int n, double s);

// ---- family 2 ----

template <class T>
TraceTriple<T> family2_step(const TraceTriple<T>& v, int dir) {
    const auto& [x, y, z] = v;
    if (check_dir(dir) > 0) {
        const T y1 = y * z - x;
        return {z, y1, z * y1 - y};
    }
    const T y1 = x * y - z;
    return {x * y1 - y, y1, x};
}

template <class T>
TraceTriple<T> family2_power(TraceTriple<T> v, int n, double* max_abs = nullptr) {
    using std::abs;
    const int dir = n >= 0 ? 1 : -1;
    for (int i = 0; i != n; i += dir) {
        v = family2_step(v, dir);
        if (max_abs) {
            *max_abs = std::max({*max_abs, numeric::to_double(abs(v.x)), numeric::to_double(abs(v.y)),
                                 numeric::to_double(abs(v.z))});
        }
    }
    return v;
}

/// T̃⁻ⁿ(F_c(T̃ⁿ(v))(r)); c = alpha follows Tⁿ(α), c = beta its dual Tⁿ(β).
template <class T>
TraceTriple<T> family2_quake(const TraceTriple<T>& v, int n, const T& r, Curve c = Curve::alpha,
                             double* max_abs = nullptr) {
    const TraceTriple<T> moved = flow_trace(family2_power(v, n, max_abs), c, r);
    if (max_abs) {
        using std::abs;
        *max_abs = std::max({*max_abs, numeric::to_double(abs(moved.x)), numeric::to_double(abs(moved.y)),
                             numeric::to_double(abs(moved.z))});
    }
    return family2_power(moved, -n);
}

TracePoint family2_quake(const TracePoint& v, int n, double r, Curve c = Curve::alpha,
                         Precision prec = Precision::automatic);
TriangleLengths family2_quake_lengths(const TriangleLengths& w, int n, double r);

enum class RescaleMode { unit_twist, arclength };
double family2_rescale(double t, int n, RescaleMode mode);
Slope family2_slope(int n);
Slope family_slope(const FamilySpec& f);

// ---- curves addressed by the CLI and figures ----

/// A curve whose earthquake can be sampled: a slope, a family member, or a family dual.
struct CurveSpec {
    enum class Kind { slope, family1, family2, family2_dual };
    Kind kind = Kind::slope;
    Slope slope{1, 0};
    int n = 0;

    /// "p/q", "alpha", "beta", "alphabeta", "f1:n", "f2:n", "f2d:n".
    static CurveSpec parse(const std::string& text);
    std::string label() const;
};

/// Earthquake about the curve by unit-twist time r (one full Dehn twist at r = 1).
TracePoint curve_quake(const CurveSpec& c, const TracePoint& v, double r);
/// Hyperbolic length of the curve at v.
double curve_length(const CurveSpec& c, const TracePoint& v);

// ---- slope asymptotics and the intersection probe ----

struct SlopeRow {
    double s;
    double ell;
    double tau;
    double ratio;
};

/// FN ratios τ/ℓ along the γ-earthquake by arclength s (negated for dir = −1).
std::vector<SlopeRow> slope_limit_table(const Slope& s, const FNPoint& u, const std::vector<double>& s_grid,
                                        int dir = 1);

struct ProbeResult {
    bool found = false;
    double s_star = 0;
    double residual = 0;
    std::string message;
};

ProbeResult quake_intersection_probe(const Slope& s1, const Slope& s2, const FNPoint& u, double s_max);

}  // namespace torusquake
