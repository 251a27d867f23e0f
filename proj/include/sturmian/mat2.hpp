#pragma once

#include "sturmian/quadratic.hpp"
#include "sturmian/rational.hpp"
#include "sturmian/words.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>

namespace sturmian {

/// 2×2 matrix [[a, b], [c, d]] with exact rational entries.
struct Mat2Q {
    Rational a{1}, b{0}, c{0}, d{1};

    static Mat2Q identity() { return {}; }
    static Mat2Q scalar(const Rational& s) { return {s, 0, 0, s}; }

    Rational det() const { return a * d - b * c; }
    Rational trace() const { return a + d; }
    Mat2Q transpose() const { return {a, c, b, d}; }
    /// Throws std::domain_error when singular.
    Mat2Q inverse() const;
    bool is_scalar() const { return b == 0 && c == 0 && a == d; }
    Mat2Q pow(unsigned k) const;

    friend Mat2Q operator*(const Mat2Q& x, const Mat2Q& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend Mat2Q operator+(const Mat2Q& x, const Mat2Q& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
    friend Mat2Q operator-(const Mat2Q& x, const Mat2Q& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
    friend Mat2Q operator*(const Rational& s, const Mat2Q& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }
    friend bool operator==(const Mat2Q& x, const Mat2Q& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }

    std::string str() const;
};

/// Integer 2×2 matrix; the fast path for long word products.
struct Mat2Z {
    Integer a{1}, b{0}, c{0}, d{1};

    friend Mat2Z operator*(const Mat2Z& x, const Mat2Z& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    Integer trace() const { return a + d; }
    Integer det() const { return a * d - b * c; }
    Mat2Z pow(unsigned k) const;
};

/// Ordered pair (A_0, A_1) = (A, B); letter i of a word selects A_i.
struct MatrixPair {
    Mat2Q A, B;
    const Mat2Q& operator[](int letter) const { return letter ? B : A; }
};

/// [w] = A_{i1} A_{i2} ⋯ A_{in} (left to right); the empty word gives I.
Mat2Q word_product(const MatrixPair& pair, const Word& w);

/// A pair rewritten as integer matrices over common denominators:
/// A = A_int / den_a, B = B_int / den_b, so that [w] = [w]_int / (den_a^{|w|_0} den_b^{|w|_1}).
/// Words with equal letter counts share a denominator, so their traces compare as integers.
class ScaledPair {
public:
    explicit ScaledPair(const MatrixPair& pair);

    const Mat2Z& generator(int letter) const { return letter ? b_ : a_; }
    const Integer& denominator(int letter) const { return letter ? den_b_ : den_a_; }
    Mat2Z product(const Word& w) const;
    Rational scale(std::size_t zeros, std::size_t ones) const;
    Mat2Q to_rational(const Mat2Z& m, std::size_t zeros, std::size_t ones) const;
    /// ln ρ(m / (den_a^zeros · den_b^ones)).
    long double log_spectral_radius(const Mat2Z& m, std::size_t zeros, std::size_t ones) const;
    /// zeros·ln den_a + ones·ln den_b.
    long double log_scale(std::size_t zeros, std::size_t ones) const {
        return static_cast<long double>(zeros) * log_den_a_ + static_cast<long double>(ones) * log_den_b_;
    }

private:
    Mat2Z a_, b_;
    Integer den_a_, den_b_;
    long double log_den_a_, log_den_b_;
};

enum class SpectralClass { Hyperbolic, Parabolic, EllipticOrNegativeTrace, Identity };
std::string to_string(SpectralClass c);

/// Class after unimodular scaling by 1/√det: |tr| vs 2√det. Negative-determinant matrices
/// (and zero-trace ones) land in EllipticOrNegativeTrace.
SpectralClass spectral_class(const Mat2Q& x);

/// Exact spectral radius: (|tr| + √(tr² − 4det))/2 for real spectrum, √det otherwise.
QuadraticNumber spectral_radius(const Mat2Q& x);
/// ln ρ at 256-bit working precision, from trace and determinant.
long double log_spectral_radius(const Rational& trace, const Rational& det);
inline long double log_spectral_radius(const Mat2Q& x) { return log_spectral_radius(x.trace(), x.det()); }

/// Point of ℝP¹ = ℝ ∪ {∞}.
class ProjectivePoint {
public:
    ProjectivePoint() : infinite_(true) {}
    ProjectivePoint(QuadraticNumber x) : value_(std::move(x)), infinite_(false) {}  // NOLINT
    ProjectivePoint(const Rational& x) : value_(x), infinite_(false) {}             // NOLINT
    static ProjectivePoint infinity() { return {}; }

    bool is_infinite() const noexcept { return infinite_; }
    const QuadraticNumber& value() const { return value_; }

    /// Total order cutting the circle at ∞ (∞ is the largest point).
    friend std::strong_ordering operator<=>(const ProjectivePoint& x, const ProjectivePoint& y);
    friend bool operator==(const ProjectivePoint& x, const ProjectivePoint& y) {
        return (x <=> y) == std::strong_ordering::equal;
    }
    long double to_long_double() const;
    std::string str() const;

private:
    QuadraticNumber value_;
    bool infinite_;
};

/// Strict cyclic betweenness: walking from `a` in the increasing direction, `x` comes before `b`.
/// Requires a, x, b pairwise distinct.
bool cyclically_between(const ProjectivePoint& a, const ProjectivePoint& x, const ProjectivePoint& b);

/// Möbius action z ↦ (az + b)/(cz + d).
ProjectivePoint mobius(const Mat2Q& m, const ProjectivePoint& z);

struct HyperbolicFixedPoints {
    ProjectivePoint attracting, repelling;
};
struct ParabolicFixedPoint {
    ProjectivePoint point;
};
using FixedPoints = std::variant<HyperbolicFixedPoints, ParabolicFixedPoint>;

/// Fixed points of the Möbius map of X. Works for any non-scalar X with real spectrum
/// (the map is scale invariant); attracting is the root where |cz + d| is largest.
/// Throws std::domain_error for elliptic or scalar input.
FixedPoints fixed_points(const Mat2Q& x);

/// Γ_0 = 0, Γ_1 = 1, Γ_{k+1} = tr(X)·Γ_k − Γ_{k−1}. Requires det X = 1.
Rational gamma(const Mat2Q& x, unsigned k);

/// a² + b² + c² + d².
Rational hs_norm_sq(const Mat2Q& x);

/// S·diag(λ, 1/λ)·S⁻¹ with S = [[s, u], [1, 1]]; requires λ > 1, u < 0 < s.
Mat2Q make_hyperbolic(const Rational& s, const Rational& u, const Rational& lambda);
/// [[1, 0], [x, 1]]; requires x > 0.
Mat2Q make_parabolic(const Rational& x);
/// [[1, y], [0, 1]]; requires y > 0.
Mat2Q make_parabolic_transpose(const Rational& y);

/// Floating 2×2 matrix, used only for the inspection-grade normal-form conjugator.
struct Mat2D {
    long double a{1}, b{0}, c{0}, d{1};
    friend Mat2D operator*(const Mat2D& x, const Mat2D& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    long double det() const { return a * d - b * c; }
    Mat2D inverse() const;
    static Mat2D from(const Mat2Q& m);
};

}  // namespace sturmian
