#include "sturmian/pairs.hpp"
#include "sturmian/random_pairs.hpp"

#include <doctest.h>

#include <cmath>

using namespace sturmian;

namespace {

const MatrixPair P{make_parabolic(1), make_parabolic_transpose(1)};

MatrixPair conjugate(const MatrixPair& p, const Mat2Q& T, const Rational& ca, const Rational& cb) {
    const Mat2Q Ti = T.inverse();
    return {ca * (T * p.A * Ti), cb * (T * p.B * Ti)};
}

}  // namespace

TEST_SUITE("pairs") {
    TEST_CASE("normal forms classify") {
        CHECK(classify(P) == PairClass::ParabolicPair);
        CHECK(classify({P.B, P.A}) == PairClass::ParabolicPair);
        CHECK(classify({make_hyperbolic(1, -1, 2), make_hyperbolic(2, -2, 3)}) == PairClass::CoParallel);
        CHECK(classify({make_hyperbolic(1, -1, 2), make_parabolic(Rational(1, 2))}) == PairClass::Mixed);
        CHECK(classify({make_parabolic(3), make_hyperbolic(2, -1, 3)}) == PairClass::Mixed);
    }

    TEST_CASE("classification is conjugation and scale invariant") {
        const Mat2Q T{2, 1, 5, 3};
        CHECK(classify(conjugate(P, T, 2, 3)) == PairClass::ParabolicPair);
        const MatrixPair h{make_hyperbolic(1, -1, 2), make_hyperbolic(2, -2, 3)};
        CHECK(classify(conjugate(h, Mat2Q{-1, 4, 3, Rational(1, 2)}, Rational(1, 7), 5)) == PairClass::CoParallel);
    }

    TEST_CASE("other classes") {
        CHECK(classify({make_hyperbolic(1, -2, 2), make_hyperbolic(2, -1, Rational(3, 2))}) == PairClass::Crossing);
        CHECK(classify({P.A, Mat2Q{1, -1, 0, 1}}) == PairClass::NotBalanced);
        CHECK(classify({Mat2Q{0, -1, 1, 0}, P.A}) == PairClass::Elliptic);
        CHECK(classify({Mat2Q::scalar(2), P.A}) == PairClass::IdentityComponent);
        CHECK(classify({make_hyperbolic(1, -1, 2), make_hyperbolic(1, -2, 3)}) == PairClass::SharedFixedPoint);
        CHECK_THROWS_AS(classify({Mat2Q{1, 0, 0, -1}, P.A}), std::invalid_argument);
    }

    TEST_CASE("class names round-trip") {
        for (PairClass c : {PairClass::CoParallel, PairClass::Mixed, PairClass::ParabolicPair, PairClass::Crossing,
                            PairClass::SharedFixedPoint, PairClass::Elliptic, PairClass::IdentityComponent,
                            PairClass::NotBalanced})
            CHECK(pair_class_from_string(to_string(c)) == c);
        CHECK(to_string(PairClass::CoParallel) == "co_parallel");
        CHECK_THROWS_AS(pair_class_from_string("nope"), std::invalid_argument);
    }

    TEST_CASE("normalization") {
        const auto n = std::get<NormalizedPair>(normalize_to_unimodular({Rational(2) * P.A, Rational(9) * P.B}));
        REQUIRE(n.a_exact.has_value());
        CHECK(*n.a_exact == Rational(1, 2));
        CHECK(*n.b_exact == Rational(1, 9));
        CHECK(*n.A_exact == P.A);
        const auto m = std::get<NormalizedPair>(normalize_to_unimodular({Rational(2) * P.A, Mat2Q{2, 0, 0, 1}}));
        CHECK_FALSE(m.b_exact.has_value());
        CHECK(m.b == doctest::Approx(1 / std::sqrt(2.0)));
    }

    TEST_CASE("normal-form conjugators verify") {
        PairGenerator gen(7);
        for (char tag : {'h', 'm', 'p'})
            for (int i = 0; i < 10; ++i) {
                const GeneratedPair g = gen.balanced(tag);
                const NormalForm nf = normal_form_conjugator(g.pair);
                CHECK(nf.tag == tag);
                CHECK_MESSAGE(nf.verified, nf.failure);
            }
        CHECK_THROWS_AS(normal_form_conjugator({make_hyperbolic(1, -2, 2), make_hyperbolic(2, -1, 2)}),
                        std::invalid_argument);
    }

    TEST_CASE("pair-level checks on the golden pair") {
        const BalancedPairReport r = balanced_pair_checks(P);
        CHECK(r.all());
        CHECK(r.trace_abab == 7);
        CHECK(r.trace_aabb == 6);
        CHECK(cone_invariance(P, 6));
    }

    TEST_CASE("cones of the golden pair") {
        const PairAnalysis a = analyze(P);
        REQUIRE(a.cones.has_value());
        // I+ is the positive half-line between the two parabolic fixed points
        CHECK(a.cones->plus.contains(ProjectivePoint(Rational(1))));
        CHECK_FALSE(a.cones->plus.contains(ProjectivePoint(Rational(-1))));
        CHECK(a.cones->minus.contains(ProjectivePoint(Rational(-1))));
    }

    TEST_CASE("generator is reproducible") {
        PairGenerator a(42), b(42);
        for (int i = 0; i < 20; ++i) {
            const GeneratedPair x = a.balanced(), y = b.balanced();
            CHECK(x.pair.A == y.pair.A);
            CHECK(x.pair.B == y.pair.B);
            CHECK(classify(x.pair) == x.expected);
        }
    }
}
