#include "torusquake/chgcoords.hpp"

#include <limits>

namespace torusquake {

namespace {

double max_abs(const TracePoint& v) {
    return std::max({std::abs(v.x), std::abs(v.y), std::abs(v.z)});
}

}  // namespace

Curve twist_curve(Twist t) {
    switch (t) {
        case Twist::Ta: return Curve::alpha;
        case Twist::Tb: return Curve::beta;
        case Twist::Tab: return Curve::alphabeta;
    }
    return Curve::alpha;
}

Framing make_framing(const TwistWord& M) {
    const IntMatrix2 m = mcg_matrix(M);
    Framing f;
    f.slope = Slope(m.m1, m.n1);
    // Orient the dual so p n2 − m2 q = 1 for the normalized slope.
    const int s = (f.slope.p() == m.m1 && f.slope.q() == m.n1) ? 1 : -1;
    f.dual = {s * m.m2, s * m.n2};
    f.M = M;
    f.M_inv = M.inverse();
    f.gamma = apply(M, Word::alpha());
    f.delta = apply(M, Word::beta());
    return f;
}

Framing build_framing(const Slope& s, const IntVec2& dual) {
    if (s.p() * dual.n - dual.m * s.q() != 1) {
        throw DomainError("dual does not meet the curve once with the right orientation");
    }
    Framing f = make_framing(decompose_matrix({s.p(), dual.m, s.q(), dual.n}).word);
    f.slope = s;
    f.dual = dual;
    return f;
}

Framing build_framing(const Slope& s) {
    return build_framing(s, find_dual(s));
}

TracePoint quake_local(const Framing& f, const TracePoint& v, Curve c, double r, Precision prec) {
    return numeric::with_estimated_precision(
        prec, max_abs(v),
        [&](double* mag) { return quake_local<double>(f, v, c, r, mag); },
        [&]<class T>(std::type_identity<T>) { return quake_local<T>(f, v.as<T>(), c, T(r)).template as<double>(); });
}

TracePoint quake_about(const Framing& f, const TracePoint& v, double r, Precision prec) {
    return quake_local(f, v, Curve::alpha, r, prec);
}

TracePoint dehn_twist_about(const Slope& s, const TracePoint& v, int n, Precision prec) {
    const Framing f = build_framing(s);
    const TwistWord conj = f.M * TwistWord{{Twist::Ta, n}} * f.M_inv;
    const Word wa = apply(conj, Word::alpha());
    const Word wb = apply(conj, Word::beta());
    return char_of_pair_at(v, wa, wb, prec);
}

}  // namespace torusquake
