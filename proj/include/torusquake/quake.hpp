#pragma once

#include <array>
#include <cmath>

#include "torusquake/charvar.hpp"
#include "torusquake/errors.hpp"
#include "torusquake/numeric.hpp"

namespace torusquake {

template <class T>
struct LengthTriple {
    T a{};
    T b{};
    T c{};

    template <class U>
    LengthTriple<U> as() const {
        return {static_cast<U>(a), static_cast<U>(b), static_cast<U>(c)};
    }
};

using TriangleLengths = LengthTriple<double>;

/// Residual of cosh²a + cosh²b + cosh²c − 2 cosh a cosh b cosh c.
double collar_residual(const TriangleLengths& w);

/// Coefficients of y(r) for the α-flow, in the three real branches.
struct FlowParams {
    enum class Branch { hyperbolic, parabolic, elliptic };
    Branch branch = Branch::hyperbolic;
    double Cplus = 0, Cminus = 0, Splus = 0, Sminus = 0;  // hyperbolic
    double theta = 0, cos_coeff = 0, sin_coeff = 0;       // elliptic
    double constant = 0, linear = 0;                      // parabolic

    double y(double r) const;
};

FlowParams flow_params(const TracePoint& v);

namespace detail {

// u(r) for the recurrence u(n+1) = x u(n) − u(n−1) continued to real r, where
// u(0) = u0 and u(1) = u0 x/2 + k.
template <class T>
T chebyshev_orbit(const T& x, const T& u0, const T& k, const T& r) {
    using std::cos;
    using std::cosh;
    using std::sin;
    using std::sinh;
    using std::acos;
    if (x > 2) {
        const T a = numeric::half_acosh(x);
        return u0 * cosh(r * a) + k * sinh(r * a) / sinh(a);
    }
    if (x == 2) {
        return u0 + k * r;
    }
    if (x >= 0) {
        const T theta = acos(x / 2);
        return u0 * cos(r * theta) + k * sin(r * theta) / sin(theta);
    }
    throw DomainError("extend via Klein symmetries");
}

template <class T>
void check_flow_output(const TraceTriple<T>& out, const T& r, const T& x) {
    if (!numeric::finite(out.y) || !numeric::finite(out.z)) {
        using std::abs;
        const double mag = numeric::to_double(abs(r) * numeric::half_acosh(x));
        throw NumericHorizonError("exceeds numeric horizon: |r| a = " + std::to_string(mag), mag);
    }
}

}  // namespace detail

template <class T>
TraceTriple<T> flow_trace_alpha(const TraceTriple<T>& v, const T& r) {
    const T k = v.x * v.y / 2 - v.z;
    TraceTriple<T> out{v.x, detail::chebyshev_orbit(v.x, v.y, k, r),
                       detail::chebyshev_orbit(v.x, v.y, k, T(r - 1))};
    detail::check_flow_output(out, r, v.x);
    return out;
}

template <class T>
TraceTriple<T> flow_trace(const TraceTriple<T>& v, Curve c, const T& r) {
    switch (c) {
        case Curve::alpha:
            return flow_trace_alpha(v, r);
        case Curve::beta:
            return sigma(flow_trace_alpha(sigma(v, Symmetry::rot_inv), r), Symmetry::rot);
        case Curve::alphabeta:
            return sigma(flow_trace_alpha(sigma(v, Symmetry::rot), r), Symmetry::rot_inv);
    }
    return v;
}

template <class T>
LengthTriple<T> quake_lengths_alpha(const LengthTriple<T>& w, const T& r) {
    using std::acosh;
    using std::cosh;
    using std::sinh;
    const T ca = cosh(w.a), cb = cosh(w.b), cc = cosh(w.c);
    const T sa = sinh(w.a);
    auto b_of = [&](const T& t) {
        const T arg = cb * cosh(t * w.a) - (cc - ca * cb) * sinh(t * w.a) / sa;
        if (!numeric::finite(arg)) {
            const double mag = numeric::to_double(t * w.a);
            throw NumericHorizonError("exceeds numeric horizon: |r| a = " + std::to_string(mag), mag);
        }
        if (arg < 1) {
            throw DomainError("left the real locus");
        }
        return acosh(arg);
    };
    return {w.a, b_of(r), b_of(T(r - 1))};
}

template <class T>
LengthTriple<T> nu(const TraceTriple<T>& v) {
    if (!(v.x > 2) || !(v.y > 2) || !(v.z > 2)) {
        throw DomainError("triangle lengths require traces > 2");
    }
    return {numeric::half_acosh(v.x), numeric::half_acosh(v.y), numeric::half_acosh(v.z)};
}

template <class T>
TraceTriple<T> nu_inv(const LengthTriple<T>& w) {
    using std::cosh;
    if (!(w.a > 0) || !(w.b > 0) || !(w.c > 0)) {
        throw DomainError("triangle lengths must be positive");
    }
    return {2 * cosh(w.a), 2 * cosh(w.b), 2 * cosh(w.c)};
}

double to_arclength(double r, double a);
double from_arclength(double s, double a);

struct Collar {
    double d;        // boundary length
    double epsilon;  // half-width
};

Collar collar(double ell);

/// Unit vector of the limiting direction of the α-flow as r → ±∞.
std::array<double, 3> projective_limit(const TracePoint& v, int dir);

}  // namespace torusquake
