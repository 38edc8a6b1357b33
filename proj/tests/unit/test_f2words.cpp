#include <doctest.h>

#include <numeric>
#include <random>

#include "torusquake/errors.hpp"
#include "torusquake/f2words.hpp"

using namespace torusquake;

namespace {

IntMatrix2 random_sl2z(std::mt19937_64& rng, int len) {
    std::uniform_int_distribution<int> pick(0, 3);
    IntMatrix2 m;
    for (int i = 0; i < len; ++i) {
        switch (pick(rng)) {
            case 0: m = m * IntMatrix2{1, 1, 0, 1}; break;
            case 1: m = m * IntMatrix2{1, -1, 0, 1}; break;
            case 2: m = m * IntMatrix2{1, 0, 1, 1}; break;
            default: m = m * IntMatrix2{1, 0, -1, 1}; break;
        }
    }
    if (pick(rng) == 0) m = IntMatrix2{-m.m1, -m.m2, -m.n1, -m.n2};
    return m;
}

TwistWord random_twist_word(std::mt19937_64& rng, int len) {
    std::uniform_int_distribution<int> t(0, 2), p(-3, 3);
    std::vector<TwistFactor> fs;
    for (int i = 0; i < len; ++i) fs.push_back({static_cast<Twist>(t(rng)), p(rng)});
    return TwistWord(fs);
}

}  // namespace

TEST_CASE("words reduce and print") {
    CHECK(Word::parse("a b B A b").str() == "b");
    CHECK(Word::parse("abAB").str() == "a b A B");
    CHECK(Word::parse("").empty());
    CHECK(Word::parse("a a A").size() == 1);
    CHECK_THROWS_AS(Word::parse("a c"), std::invalid_argument);

    const Word w = Word::parse("a b a B");
    CHECK((w * w.inverse()).empty());
    CHECK(w.pow(0).empty());
    CHECK(w.pow(-2) == w.inverse() * w.inverse());
    CHECK(w.abelianization() == IntVec2{2, 0});
    CHECK(Word::parse("a b a").abelianization() == IntVec2{2, 1});
}

TEST_CASE("twist substitutions") {
    const Word a = Word::alpha(), b = Word::beta();
    CHECK(apply_twist(b, Twist::Ta, 1) == Word::parse("b A"));
    CHECK(apply_twist(b, Twist::Ta, -1) == Word::parse("b a"));
    CHECK(apply_twist(a, Twist::Ta, 1) == a);
    CHECK(apply_twist(a, Twist::Tb, 1) == Word::parse("a b"));
    CHECK(apply_twist(a, Twist::Tb, -1) == Word::parse("a B"));
    CHECK(apply_twist(a, Twist::Tab, 1) == Word::parse("a b a"));
    CHECK(apply_twist(b, Twist::Tab, 1) == Word::parse("A"));
    CHECK(apply_twist(a, Twist::Tab, -1) == Word::parse("B"));
    CHECK(apply_twist(b, Twist::Tab, -1) == Word::parse("b a b"));

    for (Twist t : {Twist::Ta, Twist::Tb, Twist::Tab}) {
        for (const Word& w : {a, b, Word::parse("a b A b b")}) {
            CHECK(apply_twist(apply_twist(w, t, 1), t, -1) == w);
        }
    }
}

TEST_CASE("twist word normalization") {
    const TwistWord tw{{Twist::Ta, 2}, {Twist::Ta, -2}, {Twist::Tb, 1}};
    CHECK(tw == TwistWord{{Twist::Tb, 1}});
    CHECK(TwistWord{{Twist::Ta, 0}}.empty());
    const TwistWord x{{Twist::Ta, 2}, {Twist::Tab, -1}};
    CHECK((x * x.inverse()).empty());
    CHECK(x.str() == "Ta^2 Tab^-1");
}

TEST_CASE("generator matrices") {
    CHECK(generator_matrix(Twist::Ta) == IntMatrix2{1, -1, 0, 1});
    CHECK(generator_matrix(Twist::Tb) == IntMatrix2{1, 0, 1, 1});
    CHECK(generator_matrix(Twist::Tab) == IntMatrix2{2, -1, 1, 0});
}

TEST_CASE("matrix columns are abelianized images of the generators") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const TwistWord tw = random_twist_word(rng, 4);
        const IntMatrix2 m = mcg_matrix(tw);
        const IntVec2 ia = apply(tw, Word::alpha()).abelianization();
        const IntVec2 ib = apply(tw, Word::beta()).abelianization();
        CHECK(ia == IntVec2{m.m1, m.n1});
        CHECK(ib == IntVec2{m.m2, m.n2});
    }
}

TEST_CASE("decompose example") {
    const Decomposition d = decompose_matrix({1, 1, 1, 2});
    CHECK(d.sign == 1);
    CHECK(d.word == TwistWord{{Twist::Tb, 1}, {Twist::Ta, -1}});
    CHECK_THROWS_AS(decompose_matrix({2, 0, 0, 2}), DomainError);
}

TEST_CASE("decompose round trips on random SL2(Z)") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> len(0, 12);
    for (int i = 0; i < 500; ++i) {
        const IntMatrix2 m = random_sl2z(rng, len(rng));
        REQUIRE(m.det() == 1);
        const Decomposition d = decompose_matrix(m);
        IntMatrix2 back = mcg_matrix(d.word);
        if (d.sign < 0) back = IntMatrix2{-back.m1, -back.m2, -back.n1, -back.n2};
        CHECK(back == m);
    }
}

TEST_CASE("slopes normalize and validate") {
    CHECK(Slope(-2, -3) == Slope(2, 3));
    CHECK(Slope(-1, 0) == Slope(1, 0));
    CHECK(Slope(1, -2).p() == -1);
    CHECK(Slope::parse("3/5") == Slope(3, 5));
    CHECK(Slope(2, 3).str() == "2/3");
    CHECK_THROWS_AS(Slope(0, 0), DomainError);
    CHECK_THROWS_AS(Slope(2, 4), DomainError);
    CHECK_THROWS(Slope::parse("3"));
}

TEST_CASE("duals have unit intersection") {
    for (int p = -9; p <= 9; ++p) {
        for (int q = 0; q <= 9; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const Slope s(p, q);
            const IntVec2 d = find_dual(s);
            CHECK(s.p() * d.n - d.m * s.q() == 1);
            if (s.p() != 0) {
                CHECK(d.m >= 0);
                CHECK(d.m < std::llabs(s.p()));
            }
        }
    }
    CHECK(find_dual(Slope(0, 1)) == IntVec2{-1, 0});
}

TEST_CASE("curves from slopes") {
    CHECK(curve_from_slope(Slope(1, 0)) == Word::alpha());
    CHECK(curve_from_slope(Slope(0, 1)).abelianization() == IntVec2{0, 1});
    for (int p = -7; p <= 7; ++p) {
        for (int q = 0; q <= 7; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const Slope s(p, q);
            CHECK(curve_from_slope(s).abelianization() == IntVec2{s.p(), s.q()});
        }
    }
}

TEST_CASE("intersection numbers and slope values") {
    CHECK(intersection(Slope(1, 0), Slope(0, 1)) == 1);
    CHECK(intersection(Slope(2, 3), Slope(1, 1)) == 1);
    CHECK(intersection(Slope(2, 3), Slope(3, 5)) == 1);
    CHECK(intersection(Slope(1, 2), Slope(1, -2)) == 4);
    CHECK(slope_of(Slope(1, 0)) == ExtRational{0, 1});
    CHECK(slope_of(Slope(0, 1)).infinite());
    CHECK(slope_of(Slope(2, 3)).value() == doctest::Approx(1.5));
    CHECK(slope_of(Slope(-1, 2)).value() == doctest::Approx(-2));
    CHECK(inverse_slope(Slope(2, 3)).value() == doctest::Approx(2.0 / 3));
    CHECK(inverse_slope(Slope(0, 1)).value() == 0);
    CHECK(slope_of(Slope(0, 1)).str() == "inf");
}
