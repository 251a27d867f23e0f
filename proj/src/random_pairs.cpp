#include "sturmian/random_pairs.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace sturmian {

int PairGenerator::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

namespace {

Rational ratio(int p, int q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

}  // namespace

Rational PairGenerator::positive_rational(int num_max, int den_max) {
    return ratio(uniform(1, num_max), uniform(1, den_max));
}

Rational PairGenerator::signed_rational(int h) {
    const int p = uniform(1, h);
    return ratio(uniform(0, 1) ? p : -p, uniform(1, h));
}

Mat2Q PairGenerator::conjugator(int height) {
    while (true) {
        Mat2Q T{signed_rational(height), signed_rational(height), signed_rational(height), signed_rational(height)};
        if (uniform(0, 4) == 0) T.b = 0;  // keep some triangular conjugators, they move ∞ less
        if (T.det() != 0) return T;
    }
}

MatrixPair PairGenerator::disguise(const Mat2Q& A, const Mat2Q& B) {
    const Mat2Q T = conjugator();
    const Mat2Q Ti = T.inverse();
    const Rational ca = positive_rational(9, 9), cb = positive_rational(9, 9);
    return {ca * (T * A * Ti), cb * (T * B * Ti)};
}

GeneratedPair PairGenerator::balanced() {
    static constexpr char tags[] = {'h', 'm', 'p'};
    return balanced(tags[uniform(0, 2)]);
}

GeneratedPair PairGenerator::balanced(char tag) {
    GeneratedPair out;
    out.tag = tag;
    Mat2Q A, B;
    switch (tag) {
        case 'h': {
            const Rational s1 = positive_rational(6, 3), s2 = s1 + positive_rational(6, 3);
            const Rational u1 = -positive_rational(6, 3), u2 = u1 - positive_rational(6, 3);
            A = make_hyperbolic(s1, u1, 1 + positive_rational(4, 3));
            B = make_hyperbolic(s2, u2, 1 + positive_rational(4, 3));
            out.expected = PairClass::CoParallel;
            break;
        }
        case 'm': {
            const Rational s = positive_rational(6, 3), u = -positive_rational(6, 3);
            A = make_hyperbolic(s, u, 1 + positive_rational(4, 3));
            B = make_parabolic(positive_rational(6, 3));
            out.expected = PairClass::Mixed;
            break;
        }
        case 'p':
            A = make_parabolic(positive_rational(6, 3));
            B = make_parabolic_transpose(positive_rational(6, 3));
            out.expected = PairClass::ParabolicPair;
            break;
        default:
            throw std::invalid_argument(std::string("unknown normal-form tag ") + tag);
    }
    if (uniform(0, 1)) std::swap(A, B);
    out.pair = disguise(A, B);
    return out;
}

GeneratedPair PairGenerator::crossing() {
    const Rational s1 = positive_rational(6, 3), s2 = s1 + positive_rational(6, 3);
    const Rational u2 = -positive_rational(6, 3), u1 = u2 - positive_rational(6, 3);
    Mat2Q A = make_hyperbolic(s1, u1, 1 + positive_rational(4, 3));
    Mat2Q B = make_hyperbolic(s2, u2, 1 + positive_rational(4, 3));
    if (uniform(0, 1)) std::swap(A, B);
    return {disguise(A, B), PairClass::Crossing, 'x'};
}

GeneratedPair PairGenerator::unstructured(int bound) {
    auto entry = [&] { return Rational(uniform(-bound, bound)); };
    GeneratedPair out;
    out.tag = 'r';
    out.pair = {{entry(), entry(), entry(), entry()}, {entry(), entry(), entry(), entry()}};
    return out;
}

Mat2Q PairGenerator::unimodular(int bound) {
    while (true) {
        Mat2Q X;
        for (int step = 0, n = uniform(1, 12); step < n; ++step) {
            const Rational k(uniform(-3, 3));
            X = uniform(0, 1) ? X * Mat2Q{1, k, 0, 1} : X * Mat2Q{1, 0, k, 1};
        }
        const auto small = [&](const Rational& r) { return abs(r) <= bound; };
        if (small(X.a) && small(X.b) && small(X.c) && small(X.d) && !X.is_scalar()) return X;
    }
}

}  // namespace sturmian
