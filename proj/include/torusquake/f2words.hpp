#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace torusquake {

enum class Gen : std::uint8_t { a, b };

struct Letter {
    Gen gen;
    int exp;  // +1 or -1

    friend bool operator==(const Letter&, const Letter&) = default;
};

struct IntVec2 {
    long long m = 0;
    long long n = 0;

    friend bool operator==(const IntVec2&, const IntVec2&) = default;
};

/// Freely reduced word in α, β.
class Word {
public:
    Word() = default;
    explicit Word(std::span<const Letter> letters);
    Word(std::initializer_list<Letter> letters);

    static Word alpha() { return Word{{Gen::a, 1}}; }
    static Word beta() { return Word{{Gen::b, 1}}; }

    /// Text form: 'a', 'b' generators, 'A', 'B' inverses; whitespace ignored.
    static Word parse(std::string_view text);
    std::string str() const;

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    Word inverse() const;
    Word pow(int k) const;
    IntVec2 abelianization() const;

    friend Word operator*(const Word& lhs, const Word& rhs);
    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<Letter> letters_;
};

Word reduce(std::span<const Letter> letters);

enum class Twist : std::uint8_t { Ta, Tb, Tab };

struct TwistFactor {
    Twist twist;
    long long power;

    friend bool operator==(const TwistFactor&, const TwistFactor&) = default;
};

/// Product φ_1 ∘ φ_2 ∘ … of twist powers; adjacent factors have distinct twists.
class TwistWord {
public:
    TwistWord() = default;
    TwistWord(std::initializer_list<TwistFactor> factors);
    explicit TwistWord(std::span<const TwistFactor> factors);

    const std::vector<TwistFactor>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }

    TwistWord inverse() const;
    std::string str() const;

    friend TwistWord operator*(const TwistWord& lhs, const TwistWord& rhs);
    friend bool operator==(const TwistWord&, const TwistWord&) = default;

private:
    std::vector<TwistFactor> factors_;
};

struct IntMatrix2 {
    long long m1 = 1, m2 = 0;
    long long n1 = 0, n2 = 1;

    long long det() const { return m1 * n2 - m2 * n1; }
    IntMatrix2 inverse() const { return {n2, -m2, -n1, m1}; }  // assumes det = 1
    IntVec2 operator*(const IntVec2& v) const { return {m1 * v.m + m2 * v.n, n1 * v.m + n2 * v.n}; }

    static IntMatrix2 identity() { return {}; }
    friend IntMatrix2 operator*(const IntMatrix2& l, const IntMatrix2& r);
    friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

IntMatrix2 generator_matrix(Twist t);
IntMatrix2 mcg_matrix(const TwistWord& tw);

struct Decomposition {
    TwistWord word;
    int sign = 1;
};

Decomposition decompose_matrix(const IntMatrix2& m);

/// Unoriented simple closed curve class of abelianization ±(p, q).
class Slope {
public:
    Slope(long long p, long long q);

    long long p() const { return p_; }
    long long q() const { return q_; }
    std::string str() const;
    static Slope parse(std::string_view text);  // "p/q"

    friend bool operator==(const Slope&, const Slope&) = default;

private:
    long long p_;
    long long q_;
};

/// Rational num/den with den >= 0; den == 0 is ∞.
struct ExtRational {
    long long num = 0;
    long long den = 1;

    bool infinite() const { return den == 0; }
    double value() const;
    std::string str() const;

    friend bool operator==(const ExtRational&, const ExtRational&) = default;
};

Word apply_twist(const Word& w, Twist t, int dir);
Word apply(const TwistWord& tw, const Word& w);

Word curve_from_slope(const Slope& s);
long long intersection(const Slope& s1, const Slope& s2);
IntVec2 find_dual(const Slope& s);
ExtRational slope_of(const Slope& s);
/// 1/sl(γ) = p/q, the limit of τ/ℓ along γ-earthquakes.
ExtRational inverse_slope(const Slope& s);

}  // namespace torusquake
