#pragma once

#include <algorithm>
#include <cmath>

#include "torusquake/charvar.hpp"
#include "torusquake/errors.hpp"
#include "torusquake/f2words.hpp"

namespace torusquake {

template <class T>
struct Mat2 {
    T a{1}, b{0};
    T c{0}, d{1};

    T trace() const { return a + d; }
    T det() const { return a * d - b * c; }
    /// Inverse of a unit-determinant matrix.
    Mat2 inverse() const { return {d, -b, -c, a}; }

    friend Mat2 operator*(const Mat2& l, const Mat2& r) {
        return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
                l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
    }
};

template <class T>
struct Rep {
    Mat2<T> A;  // image of α
    Mat2<T> B;  // image of β
};

template <class T>
Rep<T> realize(const TraceTriple<T>& v) {
    using std::sqrt;
    if (!(v.x > 2) || !(v.y > 2)) {
        throw DomainError("realization requires hyperbolic framing traces");
    }
    const T lam = v.x / 2 + sqrt((v.x - 2) * (v.x + 2)) / 2;
    const T mu = v.y / 2 + sqrt((v.y - 2) * (v.y + 2)) / 2;
    const T t = v.z - lam * mu - 1 / (lam * mu);
    return {{lam, T(1), T(0), 1 / lam}, {mu, T(0), t, 1 / mu}};
}

/// Ordered product of letter images; max_abs collects the largest partial-product entry.
template <class T>
Mat2<T> evaluate(const Rep<T>& r, const Word& w, double* max_abs = nullptr) {
    using std::abs;
    const Mat2<T> Ai = r.A.inverse(), Bi = r.B.inverse();
    Mat2<T> m;
    for (const Letter& l : w.letters()) {
        const Mat2<T>& g = l.gen == Gen::a ? (l.exp > 0 ? r.A : Ai) : (l.exp > 0 ? r.B : Bi);
        m = m * g;
        if (max_abs) {
            for (const T* e : {&m.a, &m.b, &m.c, &m.d}) {
                *max_abs = std::max(*max_abs, numeric::to_double(abs(*e)));
            }
        }
    }
    return m;
}

template <class T>
T word_trace(const Rep<T>& r, const Word& w) {
    return evaluate(r, w).trace();
}

template <class T>
TraceTriple<T> char_of_pair(const Rep<T>& r, const Word& w1, const Word& w2) {
    const Mat2<T> m1 = evaluate(r, w1), m2 = evaluate(r, w2);
    return {m1.trace(), m2.trace(), (m1 * m2).trace()};
}

/// Trace of w at the character v, in the precision tier its partial products call for.
double word_trace_at(const TracePoint& v, const Word& w, Precision prec = Precision::automatic);

/// char_of_pair at the character v, in the precision tier its partial products call for.
TracePoint char_of_pair_at(const TracePoint& v, const Word& w1, const Word& w2,
                           Precision prec = Precision::automatic);

double geodesic_length(double trace);

}  // namespace torusquake
