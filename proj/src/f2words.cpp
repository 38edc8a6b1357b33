#include "torusquake/f2words.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <cmath>

#include "torusquake/errors.hpp"

namespace torusquake {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp) {
        out.pop_back();
    } else {
        out.push_back(l);
    }
}

char letter_char(Letter l) {
    if (l.gen == Gen::a) return l.exp > 0 ? 'a' : 'A';
    return l.exp > 0 ? 'b' : 'B';
}

void check_letter(Letter l) {
    if (l.exp != 1 && l.exp != -1) {
        throw std::invalid_argument("letter exponent must be +1 or -1");
    }
}

// Images of α and β under one forward or backward twist.
std::pair<Word, Word> substitution(Twist t, int dir) {
    const Letter a{Gen::a, 1}, A{Gen::a, -1}, b{Gen::b, 1}, B{Gen::b, -1};
    switch (t) {
        case Twist::Ta:
            return dir > 0 ? std::pair{Word{a}, Word{b, A}} : std::pair{Word{a}, Word{b, a}};
        case Twist::Tb:
            return dir > 0 ? std::pair{Word{a, b}, Word{b}} : std::pair{Word{a, B}, Word{b}};
        case Twist::Tab:
            return dir > 0 ? std::pair{Word{a, b, a}, Word{A}} : std::pair{Word{B}, Word{b, a, b}};
    }
    throw std::logic_error("bad twist");
}

Word substitute(const Word& w, const Word& img_a, const Word& img_b) {
    const Word inv_a = img_a.inverse();
    const Word inv_b = img_b.inverse();
    std::vector<Letter> out;
    for (const Letter& l : w.letters()) {
        const Word& img = l.gen == Gen::a ? (l.exp > 0 ? img_a : inv_a) : (l.exp > 0 ? img_b : inv_b);
        for (const Letter& m : img.letters()) {
            push_reduced(out, m);
        }
    }
    return Word(out);
}

std::vector<TwistFactor> normalize_factors(std::span<const TwistFactor> in) {
    std::vector<TwistFactor> out;
    for (const TwistFactor& f : in) {
        if (!out.empty() && out.back().twist == f.twist) {
            out.back().power += f.power;
            if (out.back().power == 0) {
                out.pop_back();
            }
        } else if (f.power != 0) {
            out.push_back(f);
        }
    }
    return out;
}

IntMatrix2 matrix_power(IntMatrix2 m, long long k) {
    if (k < 0) {
        m = m.inverse();
        k = -k;
    }
    IntMatrix2 result;
    while (k > 0) {
        if (k & 1) result = result * m;
        m = m * m;
        k >>= 1;
    }
    return result;
}

long long floor_mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

// x with a*x ≡ 1 (mod m), m > 0, gcd(a, m) = 1.
long long mod_inverse(long long a, long long m) {
    long long r0 = floor_mod(a, m), r1 = m, s0 = 1, s1 = 0;
    while (r1 != 0) {
        const long long q = r0 / r1;
        r0 = std::exchange(r1, r0 - q * r1);
        s0 = std::exchange(s1, s0 - q * s1);
    }
    return floor_mod(s0, m);
}

}  // namespace

Word reduce(std::span<const Letter> letters) {
    return Word(letters);
}

Word::Word(std::span<const Letter> letters) {
    for (const Letter& l : letters) {
        check_letter(l);
        push_reduced(letters_, l);
    }
}

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

Word Word::parse(std::string_view text) {
    std::vector<Letter> out;
    for (char ch : text) {
        switch (ch) {
            case 'a': out.push_back({Gen::a, 1}); break;
            case 'A': out.push_back({Gen::a, -1}); break;
            case 'b': out.push_back({Gen::b, 1}); break;
            case 'B': out.push_back({Gen::b, -1}); break;
            case ' ': case '\t': case '1': break;
            default: throw std::invalid_argument(std::string("bad word letter '") + ch + "'");
        }
    }
    return Word(out);
}

std::string Word::str() const {
    std::string out;
    for (const Letter& l : letters_) {
        if (!out.empty()) out += ' ';
        out += letter_char(l);
    }
    return out;
}

Word Word::inverse() const {
    std::vector<Letter> out(letters_.rbegin(), letters_.rend());
    for (Letter& l : out) l.exp = -l.exp;
    return Word(out);
}

Word Word::pow(int k) const {
    const Word base = k >= 0 ? *this : inverse();
    Word out;
    for (int i = 0; i < std::abs(k); ++i) out = out * base;
    return out;
}

IntVec2 Word::abelianization() const {
    IntVec2 v;
    for (const Letter& l : letters_) {
        (l.gen == Gen::a ? v.m : v.n) += l.exp;
    }
    return v;
}

Word operator*(const Word& lhs, const Word& rhs) {
    std::vector<Letter> out = lhs.letters_;
    for (const Letter& l : rhs.letters_) push_reduced(out, l);
    return Word(out);
}

TwistWord::TwistWord(std::initializer_list<TwistFactor> factors)
    : factors_(normalize_factors(std::span<const TwistFactor>(factors.begin(), factors.size()))) {}

TwistWord::TwistWord(std::span<const TwistFactor> factors) : factors_(normalize_factors(factors)) {}

TwistWord TwistWord::inverse() const {
    std::vector<TwistFactor> out(factors_.rbegin(), factors_.rend());
    for (TwistFactor& f : out) f.power = -f.power;
    return TwistWord(out);
}

std::string TwistWord::str() const {
    static constexpr const char* names[] = {"Ta", "Tb", "Tab"};
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << ' ';
        os << names[static_cast<int>(factors_[i].twist)];
        if (factors_[i].power != 1) os << '^' << factors_[i].power;
    }
    return os.str();
}

TwistWord operator*(const TwistWord& lhs, const TwistWord& rhs) {
    std::vector<TwistFactor> all = lhs.factors_;
    all.insert(all.end(), rhs.factors_.begin(), rhs.factors_.end());
    return TwistWord(all);
}

IntMatrix2 operator*(const IntMatrix2& l, const IntMatrix2& r) {
    return {l.m1 * r.m1 + l.m2 * r.n1, l.m1 * r.m2 + l.m2 * r.n2,
            l.n1 * r.m1 + l.n2 * r.n1, l.n1 * r.m2 + l.n2 * r.n2};
}

IntMatrix2 generator_matrix(Twist t) {
    switch (t) {
        case Twist::Ta: return {1, -1, 0, 1};
        case Twist::Tb: return {1, 0, 1, 1};
        case Twist::Tab: return {2, -1, 1, 0};
    }
    throw std::logic_error("bad twist");
}

IntMatrix2 mcg_matrix(const TwistWord& tw) {
    IntMatrix2 m;
    for (const TwistFactor& f : tw.factors()) {
        m = m * matrix_power(generator_matrix(f.twist), f.power);
    }
    return m;
}

// Row-reduces the first column to (±1, 0) with left multiplications by
// A^k (row1 -= k row2) and B^k (row2 += k row1), then reads off the last A power.
Decomposition decompose_matrix(const IntMatrix2& m) {
    if (m.det() != 1) {
        throw DomainError("not in SL₂(ℤ)");
    }
    IntMatrix2 r = m;
    std::vector<TwistFactor> inv_steps;
    auto apply_a = [&](long long k) {
        r = IntMatrix2{1, -k, 0, 1} * r;
        inv_steps.push_back({Twist::Ta, -k});
    };
    auto apply_b = [&](long long k) {
        r = IntMatrix2{1, 0, k, 1} * r;
        inv_steps.push_back({Twist::Tb, -k});
    };
    while (r.n1 != 0) {
        if (std::llabs(r.n1) == 1) {
            if (r.m1 != 1) apply_a((r.m1 - 1) / r.n1);
            apply_b(-r.n1);
        } else if (std::llabs(r.m1) >= std::llabs(r.n1)) {
            apply_a(r.m1 / r.n1);
        } else {
            apply_b(-(r.n1 / r.m1));
        }
    }
    const int sign = r.m1 > 0 ? 1 : -1;
    inv_steps.push_back({Twist::Ta, -sign * r.m2});
    // m = G_1^{-1} G_2^{-1} ... (sign A^{-sign m2}), steps recorded in that order.
    return {TwistWord(inv_steps), sign};
}

Slope::Slope(long long p, long long q) : p_(p), q_(q) {
    if (p == 0 && q == 0) {
        throw DomainError("slope (0, 0) is not a curve");
    }
    if (std::gcd(p, q) != 1) {
        throw DomainError("slope entries must be coprime");
    }
    if (q_ < 0 || (q_ == 0 && p_ < 0)) {
        p_ = -p_;
        q_ = -q_;
    }
}

std::string Slope::str() const {
    return std::to_string(p_) + "/" + std::to_string(q_);
}

Slope Slope::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        throw std::invalid_argument("slope must be written p/q");
    }
    std::size_t used = 0;
    const std::string ps(text.substr(0, slash)), qs(text.substr(slash + 1));
    const long long p = std::stoll(ps, &used);
    if (used != ps.size()) throw std::invalid_argument("bad slope numerator: " + ps);
    const long long q = std::stoll(qs, &used);
    if (used != qs.size()) throw std::invalid_argument("bad slope denominator: " + qs);
    return Slope(p, q);
}

double ExtRational::value() const {
    if (den == 0) return num >= 0 ? HUGE_VAL : -HUGE_VAL;
    return static_cast<double>(num) / static_cast<double>(den);
}

std::string ExtRational::str() const {
    if (den == 0) return "inf";
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Word apply_twist(const Word& w, Twist t, int dir) {
    if (dir != 1 && dir != -1) throw std::invalid_argument("direction must be +1 or -1");
    const auto [img_a, img_b] = substitution(t, dir);
    return substitute(w, img_a, img_b);
}

Word apply(const TwistWord& tw, const Word& w) {
    Word out = w;
    const auto& fs = tw.factors();
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
        const int dir = it->power > 0 ? 1 : -1;
        for (long long i = 0; i < std::llabs(it->power); ++i) {
            out = apply_twist(out, it->twist, dir);
        }
    }
    return out;
}

Word curve_from_slope(const Slope& s) {
    const IntVec2 d = find_dual(s);
    const Decomposition dec = decompose_matrix({s.p(), d.m, s.q(), d.n});
    const Word w = apply(dec.word, Word::alpha());
    return dec.sign > 0 ? w : w.inverse();
}

long long intersection(const Slope& s1, const Slope& s2) {
    return std::llabs(s1.p() * s2.q() - s2.p() * s1.q());
}

IntVec2 find_dual(const Slope& s) {
    const long long p = s.p(), q = s.q();
    if (p == 0) {
        return {-q, 0};  // q = 1 by normalization
    }
    const long long ap = std::llabs(p);
    // p n2 - m2 q = 1  =>  m2 ≡ -q^{-1} (mod |p|)
    const long long m2 = ap == 1 ? 0 : floor_mod(-mod_inverse(q, ap), ap);
    return {m2, (1 + m2 * q) / p};
}

ExtRational slope_of(const Slope& s) {
    if (s.p() == 0) return {1, 0};
    return s.p() > 0 ? ExtRational{s.q(), s.p()} : ExtRational{-s.q(), -s.p()};
}

ExtRational inverse_slope(const Slope& s) {
    return {s.p(), s.q()};
}

}  // namespace torusquake
