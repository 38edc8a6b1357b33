#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "torusquake/quake.hpp"

using namespace torusquake;

namespace {

const double kR2 = std::sqrt(2.0);
const std::vector<TracePoint> kStarts = {{3, 3, 3}, {2 * kR2, 2 * kR2, 4}, {10, 10, 10 * (5 - std::sqrt(23.0))}};

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("flow is the identity at zero and the twist at one") {
    for (const TracePoint& v : kStarts) {
        for (Curve c : {Curve::alpha, Curve::beta, Curve::alphabeta}) {
            const TracePoint f0 = flow_trace(v, c, 0.0);
            CHECK(f0.x == doctest::Approx(v.x));
            CHECK(f0.y == doctest::Approx(v.y));
            CHECK(f0.z == doctest::Approx(v.z));
            const TracePoint f1 = flow_trace(v, c, 1.0), t1 = twist(v, c, 1);
            CHECK(f1.x == doctest::Approx(t1.x).epsilon(1e-12));
            CHECK(f1.y == doctest::Approx(t1.y).epsilon(1e-12));
            CHECK(f1.z == doctest::Approx(t1.z).epsilon(1e-12));
        }
    }
}

TEST_CASE("flow agrees with iterated twists at integer times") {
    double worst = 0;
    for (const TracePoint& v : kStarts) {
        for (Curve c : {Curve::alpha, Curve::beta, Curve::alphabeta}) {
            for (int n = -8; n <= 8; ++n) {
                const TracePoint f = flow_trace(v, c, double(n)), t = twist_power(v, c, n);
                worst = std::max({worst, rel(f.x, t.x), rel(f.y, t.y), rel(f.z, t.z)});
            }
        }
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("flow is a one-parameter group and preserves kappa") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-2.5, 2.5);
    for (const TracePoint& v : kStarts) {
        for (int i = 0; i < 50; ++i) {
            const double r1 = u(rng), r2 = u(rng);
            const TracePoint a = flow_trace(flow_trace(v, Curve::beta, r1), Curve::beta, r2);
            const TracePoint b = flow_trace(v, Curve::beta, r1 + r2);
            CHECK(rel(a.x, b.x) < 1e-10);
            CHECK(rel(a.y, b.y) < 1e-10);
            CHECK(rel(a.z, b.z) < 1e-10);
            const double scale = b.x * b.x + b.y * b.y + b.z * b.z;
            CHECK(std::abs(kappa(b) + 2) / scale < 1e-12);
        }
    }
}

TEST_CASE("exponential form matches the orbit on each branch") {
    // κ need not be -2 here; the flow is defined algebraically.
    for (const TracePoint& v : {TracePoint{3, 3, 3}, TracePoint{2, 3, 1.5}, TracePoint{1.2, 2.5, 0.7}}) {
        const FlowParams p = flow_params(v);
        for (double r = -3; r <= 3; r += 0.25) {
            CHECK(p.y(r) == doctest::Approx(flow_trace_alpha(v, r).y).epsilon(1e-10));
        }
        for (int n = -4; n <= 4; ++n) {
            const TracePoint t = twist_power(v, Curve::alpha, n);
            CHECK(flow_trace_alpha(v, double(n)).y == doctest::Approx(t.y).epsilon(1e-10));
        }
    }
    CHECK(flow_params({3, 3, 3}).branch == FlowParams::Branch::hyperbolic);
    CHECK(flow_params({2, 3, 3}).branch == FlowParams::Branch::parabolic);
    CHECK(flow_params({1, 3, 3}).branch == FlowParams::Branch::elliptic);
    CHECK_THROWS_AS(flow_trace_alpha(TracePoint{-3, 3, 3}, 0.5), DomainError);
    CHECK_THROWS_AS(flow_params({-3, 3, 3}), DomainError);
}

TEST_CASE("numeric horizon is reported") {
    CHECK_THROWS_AS(flow_trace_alpha(TracePoint{3, 3, 3}, 1e4), NumericHorizonError);
    try {
        flow_trace_alpha(TracePoint{3, 3, 3}, 1e4);
    } catch (const NumericHorizonError& e) {
        CHECK(e.magnitude() > 700);
    }
}

TEST_CASE("length earthquake equals conjugated trace flow") {
    double worst = 0;
    for (const TracePoint& v : kStarts) {
        const TriangleLengths w = nu(v);
        for (int i = -30; i <= 30; ++i) {
            const double r = 0.1 * i;
            const TriangleLengths a = quake_lengths_alpha(w, r);
            const TriangleLengths b = nu(flow_trace_alpha(v, r));
            worst = std::max({worst, std::abs(a.a - b.a), std::abs(a.b - b.b), std::abs(a.c - b.c)});
        }
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("lengths map") {
    for (const TracePoint& v : kStarts) {
        const TriangleLengths w = nu(v);
        CHECK(w.a == doctest::Approx(std::acosh(v.x / 2)));
        const TracePoint back = nu_inv(w);
        CHECK(back.z == doctest::Approx(v.z).epsilon(1e-13));
        CHECK(std::abs(collar_residual(w)) < 1e-10);
    }
    CHECK_THROWS_AS(nu(TracePoint{3, 1.5, 3}), DomainError);
    CHECK_THROWS_AS(nu_inv(TriangleLengths{1, 0, 1}), DomainError);
    CHECK_THROWS_AS(quake_lengths_alpha(TriangleLengths{1, 0.1, 0.1}, 0.5), DomainError);
}

TEST_CASE("arclength and collar") {
    CHECK(to_arclength(1.5, 0.75) == doctest::Approx(2.25));
    CHECK(from_arclength(to_arclength(0.3, 1.1), 1.1) == doctest::Approx(0.3));
    CHECK_THROWS_AS(from_arclength(1, 0), DomainError);
    for (double ell : {0.1, 1.0, 3.0}) {
        const Collar c = collar(ell);
        CHECK(std::sinh(c.epsilon) * std::sinh(ell / 2) == doctest::Approx(1));
        CHECK(c.d == doctest::Approx(2 / std::tanh(ell / 2)));
    }
    CHECK(collar(2 * std::acosh(1.5)).d == doctest::Approx(2 * 1.5 / std::sqrt(1.25)));
    CHECK(collar(50).d == doctest::Approx(2));
    CHECK(collar(50).epsilon < 1e-10);
    CHECK_THROWS_AS(collar(0), DomainError);
}

TEST_CASE("projective limit of the flow") {
    for (const TracePoint& v : {TracePoint{3, 3, 3}, TracePoint{3, 4, 6 + std::sqrt(11.0)}}) {
        for (int dir : {1, -1}) {
            const TracePoint f = flow_trace_alpha(v, 40.0 * dir);
            const double n = std::sqrt(f.x * f.x + f.y * f.y + f.z * f.z);
            const auto lim = projective_limit(v, dir);
            CHECK(std::abs(f.x / n - lim[0]) < 1e-6);
            CHECK(std::abs(f.y / n - lim[1]) < 1e-6);
            CHECK(std::abs(f.z / n - lim[2]) < 1e-6);
        }
    }
    const auto p = projective_limit({3, 3, 3}, 1);
    const double n1 = 3 + 3 / std::sqrt(5.0), n2 = 3 - 3 / std::sqrt(5.0);
    CHECK(p[1] == doctest::Approx(n1 / std::hypot(n1, n2)));
    CHECK(p[2] == doctest::Approx(n2 / std::hypot(n1, n2)));
    CHECK_THROWS_AS(projective_limit({3, 3, 3}, 0), std::invalid_argument);
}
