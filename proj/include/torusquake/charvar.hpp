#pragma once

#include <cmath>
#include <stdexcept>
#include <string_view>

#include "torusquake/numeric.hpp"

namespace torusquake {

/// Traces (tr A, tr B, tr AB) of a representation of the free group <α, β>.
template <class T>
struct TraceTriple {
    T x{};
    T y{};
    T z{};

    template <class U>
    TraceTriple<U> as() const {
        return {static_cast<U>(x), static_cast<U>(y), static_cast<U>(z)};
    }
};

using TracePoint = TraceTriple<double>;

enum class Curve { alpha, beta, alphabeta };
enum class KleinFlip { xy, xz, yz };
enum class Symmetry { rot, rot_inv, ref1, ref2, ref3 };

inline constexpr double kLevelTolerance = 1e-9;

std::string_view curve_name(Curve c);
Curve parse_curve(std::string_view name);

/// Checks dir is +1 or -1.
inline int check_dir(int dir) {
    if (dir != 1 && dir != -1) {
        throw std::invalid_argument("direction must be +1 or -1");
    }
    return dir;
}

template <class T>
T kappa(const TraceTriple<T>& v) {
    return v.x * v.x + v.y * v.y + v.z * v.z - v.x * v.y * v.z - 2;
}

bool is_finite(const TracePoint& v);
bool is_teich(const TracePoint& v, double tol = kLevelTolerance);

template <class T>
TraceTriple<T> sigma(const TraceTriple<T>& v, Symmetry which) {
    switch (which) {
        case Symmetry::rot: return {v.z, v.x, v.y};
        case Symmetry::rot_inv: return {v.y, v.z, v.x};
        case Symmetry::ref1: return {v.x, v.z, v.y};
        case Symmetry::ref2: return {v.z, v.y, v.x};
        case Symmetry::ref3: return {v.y, v.x, v.z};
    }
    return v;
}

template <class T>
TraceTriple<T> klein(const TraceTriple<T>& v, KleinFlip which) {
    switch (which) {
        case KleinFlip::xy: return {-v.x, -v.y, v.z};
        case KleinFlip::xz: return {-v.x, v.y, -v.z};
        case KleinFlip::yz: return {v.x, -v.y, -v.z};
    }
    return v;
}

template <class T>
TraceTriple<T> twist(const TraceTriple<T>& v, Curve c, int dir) {
    const auto& [x, y, z] = v;
    const bool fwd = check_dir(dir) > 0;
    switch (c) {
        case Curve::alpha:
            return fwd ? TraceTriple<T>{x, x * y - z, y} : TraceTriple<T>{x, z, x * z - y};
        case Curve::beta:
            return fwd ? TraceTriple<T>{z, y, y * z - x} : TraceTriple<T>{x * y - z, y, x};
        case Curve::alphabeta:
            return fwd ? TraceTriple<T>{x * z - y, x, z} : TraceTriple<T>{y, y * z - x, z};
    }
    return v;
}

/// n-fold twist; negative n twists backwards.
template <class T>
TraceTriple<T> twist_power(TraceTriple<T> v, Curve c, int n) {
    const int dir = n >= 0 ? 1 : -1;
    for (int i = 0; i != n; i += dir) {
        v = twist(v, c, dir);
    }
    return v;
}

}  // namespace torusquake
