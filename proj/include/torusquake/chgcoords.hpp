#pragma once

#include <algorithm>
#include <cmath>
#include <optional>

#include "torusquake/charvar.hpp"
#include "torusquake/f2words.hpp"
#include "torusquake/quake.hpp"
#include "torusquake/rep.hpp"

namespace torusquake {

/// Generators (γ, δ) = M(α, β) for a mapping class M; γ has slope `slope`.
struct Framing {
    Slope slope{1, 0};
    IntVec2 dual{0, 1};
    Word gamma;
    Word delta;
    TwistWord M;
    TwistWord M_inv;
};

Framing build_framing(const Slope& s);
/// Framing with a chosen dual (m2, n2); requires p n2 − m2 q = 1.
Framing build_framing(const Slope& s, const IntVec2& dual);
Framing make_framing(const TwistWord& M);

Curve twist_curve(Twist t);

/// Character action of the mapping class: v ↦ char(M(α), M(β)).
template <class T>
TraceTriple<T> apply_chain(const TwistWord& M, TraceTriple<T> v, double* max_abs = nullptr) {
    using std::abs;
    for (const TwistFactor& f : M.factors()) {
        const int dir = f.power > 0 ? 1 : -1;
        for (long long i = 0; i < std::llabs(f.power); ++i) {
            v = twist(v, twist_curve(f.twist), dir);
            if (max_abs) {
                *max_abs = std::max({*max_abs, numeric::to_double(abs(v.x)),
                                     numeric::to_double(abs(v.y)), numeric::to_double(abs(v.z))});
            }
        }
    }
    return v;
}

template <class T>
TraceTriple<T> phi(const Framing& f, const TraceTriple<T>& v) {
    return apply_chain(f.M, v);
}

template <class T>
TraceTriple<T> psi(const Framing& f, const TraceTriple<T>& v_local) {
    return apply_chain(f.M_inv, v_local);
}

/// ψ(F_c(φ(v))(r)): earthquake about the image of framing curve c (γ for alpha, δ for beta).
/// max_abs collects magnitudes of the local point before and after the flow.
template <class T>
TraceTriple<T> quake_local(const Framing& f, const TraceTriple<T>& v, Curve c, const T& r,
                           double* max_abs = nullptr) {
    const TraceTriple<T> local = apply_chain(f.M, v, max_abs);
    const TraceTriple<T> moved = flow_trace(local, c, r);
    if (max_abs) {
        using std::abs;
        *max_abs = std::max({*max_abs, numeric::to_double(abs(moved.y)), numeric::to_double(abs(moved.z)),
                             numeric::to_double(abs(moved.x))});
    }
    return apply_chain(f.M_inv, moved);
}

/// quake_local in the cheapest precision tier that resolves the chain's cancellation.
TracePoint quake_local(const Framing& f, const TracePoint& v, Curve c, double r,
                       Precision prec = Precision::automatic);

TracePoint quake_about(const Framing& f, const TracePoint& v, double r,
                       Precision prec = Precision::automatic);

/// Integer-time twist about the slope-s curve via conjugated substitutions and matrices.
TracePoint dehn_twist_about(const Slope& s, const TracePoint& v, int n,
                            Precision prec = Precision::automatic);

}  // namespace torusquake
