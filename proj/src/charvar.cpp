#include "torusquake/charvar.hpp"

#include <algorithm>
#include <string>

namespace torusquake {

std::string_view curve_name(Curve c) {
    switch (c) {
        case Curve::alpha: return "alpha";
        case Curve::beta: return "beta";
        case Curve::alphabeta: return "alphabeta";
    }
    return "?";
}

Curve parse_curve(std::string_view name) {
    if (name == "alpha" || name == "a") return Curve::alpha;
    if (name == "beta" || name == "b") return Curve::beta;
    if (name == "alphabeta" || name == "ab") return Curve::alphabeta;
    throw std::invalid_argument("unknown curve name: " + std::string(name));
}

bool is_finite(const TracePoint& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

bool is_teich(const TracePoint& v, double tol) {
    if (!(tol > 0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    if (!is_finite(v)) {
        return false;
    }
    return std::abs(kappa(v) + 2) < tol && std::min({v.x, v.y, v.z}) > 2;
}

}  // namespace torusquake
