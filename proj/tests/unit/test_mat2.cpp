#include "sturmian/mat2.hpp"

#include <doctest.h>

#include <cmath>

using namespace sturmian;

namespace {
const MatrixPair P{make_parabolic(1), make_parabolic_transpose(1)};
}

TEST_SUITE("mat2") {
    TEST_CASE("rationals") {
        CHECK(parse_rational("3/6") == Rational(1, 2));
        CHECK(parse_rational("0.25") == Rational(1, 4));
        CHECK(parse_rational("-1.5e-1") == Rational(-3, 20));
        CHECK(to_string(parse_rational("4/2")) == "2");
        CHECK(rational_from_double(0.1) != Rational(1, 10));
        CHECK(rational_from_double(0.5) == Rational(1, 2));
        CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
        CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    }

    TEST_CASE("quadratic numbers compare exactly") {
        const QuadraticNumber phi(Rational(1, 2), Rational(1, 2), 5);
        CHECK(phi * phi == phi + QuadraticNumber(1));
        CHECK(QuadraticNumber::sqrt(2) < QuadraticNumber(Rational(99, 70)));
        CHECK(QuadraticNumber::sqrt(2) > QuadraticNumber(Rational(140, 99)));
        CHECK(QuadraticNumber::sqrt(8) == QuadraticNumber(0, 2, 2));
        CHECK(QuadraticNumber::sqrt(3) < QuadraticNumber::sqrt(2) + QuadraticNumber(Rational(1, 3)));
    }

    TEST_CASE("word products") {
        CHECK(word_product(P, Word("01")) == Mat2Q{1, 1, 1, 2});
        CHECK(word_product(P, Word("0011")) == Mat2Q{1, 2, 2, 5});
        CHECK(word_product(P, Word("")) == Mat2Q::identity());
        const ScaledPair sp(MatrixPair{Rational(1, 2) * P.A, Rational(2, 3) * P.B});
        const Word w("00101");
        CHECK(sp.to_rational(sp.product(w), 3, 2) == word_product({Rational(1, 2) * P.A, Rational(2, 3) * P.B}, w));
    }

    TEST_CASE("spectra") {
        const Mat2Q X{1, 1, 1, 2};
        CHECK(spectral_class(X) == SpectralClass::Hyperbolic);
        CHECK(spectral_class(P.A) == SpectralClass::Parabolic);
        CHECK(spectral_class(Mat2Q{0, -1, 1, 0}) == SpectralClass::EllipticOrNegativeTrace);
        CHECK(spectral_class(Mat2Q::scalar(3)) == SpectralClass::Identity);
        CHECK(spectral_radius(X) == QuadraticNumber(Rational(3, 2), Rational(1, 2), 5));
        CHECK(log_spectral_radius(X) == doctest::Approx(std::log((3 + std::sqrt(5.0)) / 2)).epsilon(1e-15));
    }

    TEST_CASE("hyperbolic normal form and fixed points") {
        const Mat2Q H = make_hyperbolic(1, -1, 2);
        CHECK(H == Mat2Q{Rational(5, 4), Rational(3, 4), Rational(3, 4), Rational(5, 4)});
        const auto f = std::get<HyperbolicFixedPoints>(fixed_points(H));
        CHECK(f.attracting == ProjectivePoint(Rational(1)));
        CHECK(f.repelling == ProjectivePoint(Rational(-1)));
        CHECK(std::get<ParabolicFixedPoint>(fixed_points(P.B)).point.is_infinite());
        CHECK(std::get<ParabolicFixedPoint>(fixed_points(P.A)).point == ProjectivePoint(Rational(0)));
        CHECK_THROWS_AS(make_hyperbolic(1, -1, Rational(1, 2)), std::invalid_argument);
        CHECK_THROWS_AS(make_parabolic(0), std::invalid_argument);
        CHECK_THROWS(fixed_points(Mat2Q{0, -1, 1, 0}));
    }

    TEST_CASE("chebyshev coefficients") {
        const Mat2Q X{1, 1, 1, 2};
        const int expect[] = {0, 1, 3, 8, 21};
        for (unsigned k = 0; k < 5; ++k) CHECK(gamma(X, k) == expect[k]);
        CHECK(X.pow(5) == gamma(X, 5) * X - gamma(X, 4) * Mat2Q::identity());
    }

    TEST_CASE("projective order") {
        CHECK(cyclically_between(ProjectivePoint(Rational(0)), ProjectivePoint(Rational(1)), ProjectivePoint::infinity()));
        CHECK(cyclically_between(ProjectivePoint(Rational(1)), ProjectivePoint::infinity(), ProjectivePoint(Rational(-1))));
        CHECK_FALSE(cyclically_between(ProjectivePoint(Rational(1)), ProjectivePoint(Rational(0)), ProjectivePoint(Rational(2))));
        CHECK(mobius(P.A, ProjectivePoint::infinity()) == ProjectivePoint(Rational(1)));
        CHECK(mobius(P.B, ProjectivePoint(Rational(1))) == ProjectivePoint(Rational(2)));
    }

    TEST_CASE("inverse and norms") {
        const Mat2Q X{2, 1, 7, 4};
        CHECK(X * X.inverse() == Mat2Q::identity());
        CHECK(hs_norm_sq(X) == 70);
        CHECK_THROWS(Mat2Q{1, 2, 2, 4}.inverse());
    }
}
