#include "torusquake/rep.hpp"

#include <limits>

namespace torusquake {

namespace {

// Digits needed for products whose partial entries reach `mag` in double.
int product_digits(const TracePoint& v, std::initializer_list<const Word*> words) {
    const Rep<double> r = realize(v);
    double mag = 1;
    for (const Word* w : words) {
        evaluate(r, *w, &mag);
    }
    if (!std::isfinite(mag)) {
        return std::numeric_limits<int>::max();
    }
    return numeric::digits_for_magnitude(mag);
}

}  // namespace

double word_trace_at(const TracePoint& v, const Word& w, Precision prec) {
    if (prec == Precision::standard) {
        return word_trace(realize(v), w);
    }
    return numeric::dispatch_digits(product_digits(v, {&w}), [&]<class T>(std::type_identity<T>) {
        return numeric::to_double(word_trace(realize(v.as<T>()), w));
    });
}

TracePoint char_of_pair_at(const TracePoint& v, const Word& w1, const Word& w2, Precision prec) {
    if (prec == Precision::standard) {
        return char_of_pair(realize(v), w1, w2);
    }
    const Word w12 = w1 * w2;
    return numeric::dispatch_digits(product_digits(v, {&w1, &w2, &w12}), [&]<class T>(std::type_identity<T>) {
        return char_of_pair(realize(v.as<T>()), w1, w2).template as<double>();
    });
}

double geodesic_length(double trace) {
    const double t = std::abs(trace);
    if (!(t > 2)) {
        throw DomainError("non-hyperbolic element");
    }
    return 2 * numeric::half_acosh(t);
}

}  // namespace torusquake
