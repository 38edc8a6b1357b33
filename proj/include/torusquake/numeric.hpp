#pragma once

// Scalar plumbing shared by the templated geometry code: precision tiers,
// tier dispatch and a few hyperbolic helpers that are accurate near 1.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <type_traits>

#include <boost/multiprecision/mpfr.hpp>

#include "torusquake/errors.hpp"

namespace torusquake {

enum class Precision {
    standard,   // IEEE double throughout
    automatic,  // pick the smallest tier whose digits cover the estimated cancellation
};

namespace numeric {

namespace mp = boost::multiprecision;

template <unsigned Digits>
using Mpfr = mp::number<mp::mpfr_float_backend<Digits, mp::allocate_stack>, mp::et_off>;

using Real40 = Mpfr<40>;
using Real80 = Mpfr<80>;
using Real160 = Mpfr<160>;
using Real320 = Mpfr<320>;

inline constexpr int kMaxDigits = 320;

template <class T>
inline double to_double(const T& v) {
    return static_cast<double>(v);
}

template <class T>
bool finite(const T& v) {
    using std::isfinite;
    using boost::multiprecision::isfinite;
    return isfinite(v);
}

/// Decimal digits needed to resolve an O(1) result computed from intermediates
/// of size `magnitude` whose products cancel (error grows like magnitude^2).
inline int digits_for_magnitude(double magnitude, double power = 2.0) {
    if (!std::isfinite(magnitude)) {
        return std::numeric_limits<int>::max();
    }
    const double m = std::max(1.0, magnitude);
    return 17 + 8 + static_cast<int>(std::ceil(power * std::log10(m)));
}

/// As digits_for_magnitude, given log10 of the magnitude.
inline int digits_for_log10(double log10_magnitude, double power = 2.0) {
    if (!std::isfinite(log10_magnitude)) {
        return std::numeric_limits<int>::max();
    }
    return 17 + 8 + static_cast<int>(std::ceil(power * std::max(0.0, log10_magnitude)));
}

/// Invokes fn(std::type_identity<T>{}) with the cheapest scalar T carrying at least `digits`.
template <class Fn>
decltype(auto) dispatch_digits(int digits, Fn&& fn) {
    if (digits <= 16) {
        return fn(std::type_identity<double>{});
    }
    if (digits <= 40) {
        return fn(std::type_identity<Real40>{});
    }
    if (digits <= 80) {
        return fn(std::type_identity<Real80>{});
    }
    if (digits <= 160) {
        return fn(std::type_identity<Real160>{});
    }
    if (digits <= kMaxDigits) {
        return fn(std::type_identity<Real320>{});
    }
    throw NumericHorizonError("exceeds numeric horizon: needs " + std::to_string(digits) +
                                  " significant digits",
                              static_cast<double>(digits));
}

/// Runs `estimate` in double, which records the largest magnitude that later steps must
/// cancel against, then reruns `exact` in the tier those magnitudes call for. The double
/// result is kept when it is finite and double carries enough digits.
template <class Estimate, class Exact>
auto with_estimated_precision(Precision prec, double start_mag, Estimate&& estimate, Exact&& exact) {
    double mag = start_mag;
    auto out = estimate(&mag);
    const bool out_finite = finite(out.x) && finite(out.y) && finite(out.z);
    if (!std::isfinite(mag)) {
        throw NumericHorizonError("exceeds numeric horizon: intermediate traces overflow double range", mag);
    }
    if (prec == Precision::standard) {
        if (!out_finite) {
            throw NumericHorizonError("exceeds numeric horizon in double precision", mag);
        }
        return out;
    }
    const int digits = digits_for_magnitude(mag);
    if (digits <= 16 && out_finite) {
        return out;
    }
    auto hi = dispatch_digits(std::max(digits, 40), exact);
    if (!(finite(hi.x) && finite(hi.y) && finite(hi.z))) {
        throw NumericHorizonError("exceeds numeric horizon: result overflows double range", mag);
    }
    return hi;
}

/// acosh(1 + d) without forming 1 + d.
template <class T>
T acosh1p(const T& d) {
    using std::log1p;
    using std::sqrt;
    return log1p(d + sqrt(d * (d + 2)));
}

/// acosh(u / 2) for u >= 2, accurate for u close to 2.
template <class T>
T half_acosh(const T& u) {
    return acosh1p((u - 2) / 2);
}


}  // namespace numeric
}  // namespace torusquake
