#include <doctest.h>

#include <cmath>
#include <random>

#include "torusquake/rep.hpp"

using namespace torusquake;

namespace {

using R = numeric::Real160;

// Word trace by explicit matrix products at 160 digits, built independently of realize().
R trace_hp(const TracePoint& v, const Word& w) {
    const R x = v.x, y = v.y, z = v.z;
    const R l = (x + sqrt(x * x - 4)) / 2, m = (y + sqrt(y * y - 4)) / 2;
    const R t = z - l * m - 1 / (l * m);
    R A[4] = {l, 1, 0, 1 / l}, Ai[4] = {1 / l, -1, 0, l};
    R B[4] = {m, 0, t, 1 / m}, Bi[4] = {1 / m, 0, -t, m};
    R P[4] = {1, 0, 0, 1};
    for (const Letter& le : w.letters()) {
        const R* g = le.gen == Gen::a ? (le.exp > 0 ? A : Ai) : (le.exp > 0 ? B : Bi);
        const R q0 = P[0] * g[0] + P[1] * g[2], q1 = P[0] * g[1] + P[1] * g[3];
        const R q2 = P[2] * g[0] + P[3] * g[2], q3 = P[2] * g[1] + P[3] * g[3];
        P[0] = q0; P[1] = q1; P[2] = q2; P[3] = q3;
    }
    return P[0] + P[3];
}

}  // namespace

TEST_CASE("realization reproduces the traces") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(2.05, 20.0);
    for (int i = 0; i < 100; ++i) {
        const TracePoint v{u(rng), u(rng), u(rng)};
        const Rep<double> r = realize(v);
        CHECK(r.A.det() == doctest::Approx(1).epsilon(1e-12));
        CHECK(r.B.det() == doctest::Approx(1).epsilon(1e-12));
        const TracePoint c = char_of_pair(r, Word::alpha(), Word::beta());
        CHECK(c.x == doctest::Approx(v.x).epsilon(1e-12));
        CHECK(c.y == doctest::Approx(v.y).epsilon(1e-12));
        CHECK(c.z == doctest::Approx(v.z).epsilon(1e-10));
    }
    CHECK_THROWS_AS(realize(TracePoint{1.5, 3, 3}), DomainError);
}

TEST_CASE("trace identities") {
    const TracePoint v{3, 3, 3};
    const Rep<double> r = realize(v);
    CHECK(word_trace(r, Word::parse("a b a")) == doctest::Approx(6));  // xz - y
    CHECK(word_trace(r, Word::parse("a a")) == doctest::Approx(7));    // x^2 - 2
    CHECK(word_trace(r, Word::parse("a b A B")) == doctest::Approx(kappa(v)));
    CHECK(word_trace(r, Word::parse("a B")) == doctest::Approx(v.x * v.y - v.z));

    const TracePoint w{4.5, 3.25, 12.0};
    const Rep<double> s = realize(w);
    CHECK(word_trace(s, Word::parse("a b A B")) == doctest::Approx(kappa(w)).epsilon(1e-10));
    CHECK(word_trace(s, Word::parse("a b a")) == doctest::Approx(w.x * w.z - w.y));
}

TEST_CASE("automatic precision tracks cancellation") {
    const TracePoint v{3, 3, 3};
    const Word u = Word::alpha().pow(12) * Word::beta().pow(12);
    const Word comm = u * Word::beta().pow(-13) * u.inverse() * Word::beta().pow(13);
    const double oracle = static_cast<double>(trace_hp(v, comm));
    CHECK(word_trace_at(v, comm) == doctest::Approx(oracle).epsilon(1e-12));

    for (const char* s : {"a", "a b", "a b a", "a b A B", "a a b B b"}) {
        const Word w = Word::parse(s);
        CHECK(word_trace_at(v, w, Precision::standard) ==
              doctest::Approx(static_cast<double>(trace_hp(v, w))).epsilon(1e-12));
    }
}

TEST_CASE("character of a pair") {
    const TracePoint v{3, 4, 10.0};
    const TracePoint c = char_of_pair_at(v, Word::parse("a b"), Word::beta());
    CHECK(c.x == doctest::Approx(v.z));
    CHECK(c.y == doctest::Approx(v.y));
    CHECK(c.z == doctest::Approx(static_cast<double>(trace_hp(v, Word::parse("a b b")))));
}

TEST_CASE("geodesic length") {
    CHECK(geodesic_length(3) == doctest::Approx(2 * std::acosh(1.5)));
    CHECK_THROWS_AS(geodesic_length(2), DomainError);
}
