#include "sturmian/mat2.hpp"

#include "sturmian/bigfloat.hpp"

#include <limits>
#include <stdexcept>

namespace sturmian {

Mat2Q Mat2Q::inverse() const {
    const Rational dt = det();
    if (dt == 0) throw std::domain_error("singular matrix");
    return {d / dt, -b / dt, -c / dt, a / dt};
}

Mat2Q Mat2Q::pow(unsigned k) const {
    Mat2Q result, base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

std::string Mat2Q::str() const {
    return "[[" + to_string(a) + "," + to_string(b) + "],[" + to_string(c) + "," + to_string(d) + "]]";
}

Mat2Z Mat2Z::pow(unsigned k) const {
    Mat2Z result, base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

Mat2Q word_product(const MatrixPair& pair, const Word& w) {
    Mat2Q out;
    for (std::size_t i = 0; i < w.size(); ++i) out = out * pair[w[i]];
    return out;
}

// ---- ScaledPair -------------------------------------------------------------

namespace {

Integer common_denominator(const Mat2Q& m) {
    Integer l = m.a.get_den();
    for (const Rational* e : {&m.b, &m.c, &m.d}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e->get_den_mpz_t());
    return l;
}

Integer scaled_entry(const Rational& e, const Integer& den) { return e.get_num() * (den / e.get_den()); }

Mat2Z scaled(const Mat2Q& m, const Integer& den) {
    return {scaled_entry(m.a, den), scaled_entry(m.b, den), scaled_entry(m.c, den), scaled_entry(m.d, den)};
}

Integer power(const Integer& base, std::size_t e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

BigFloat big_log_rho(const BigFloat& tr, const BigFloat& det) {
    const BigFloat disc = tr * tr - BigFloat(4.0L) * det;
    if (disc.sign() >= 0) return ((tr.abs() + disc.sqrt()) / BigFloat(2.0L)).log();
    return det.sqrt().log();
}

}  // namespace

ScaledPair::ScaledPair(const MatrixPair& pair)
    : den_a_(common_denominator(pair.A)), den_b_(common_denominator(pair.B)) {
    a_ = scaled(pair.A, den_a_);
    b_ = scaled(pair.B, den_b_);
    log_den_a_ = BigFloat(den_a_).log().to_long_double();
    log_den_b_ = BigFloat(den_b_).log().to_long_double();
}

Mat2Z ScaledPair::product(const Word& w) const {
    Mat2Z out;
    for (std::size_t i = 0; i < w.size(); ++i) out = out * generator(w[i]);
    return out;
}

Rational ScaledPair::scale(std::size_t zeros, std::size_t ones) const {
    Rational r(1, power(den_a_, zeros) * power(den_b_, ones));
    r.canonicalize();
    return r;
}

Mat2Q ScaledPair::to_rational(const Mat2Z& m, std::size_t zeros, std::size_t ones) const {
    const Rational s = scale(zeros, ones);
    return {s * Rational(m.a), s * Rational(m.b), s * Rational(m.c), s * Rational(m.d)};
}

long double ScaledPair::log_spectral_radius(const Mat2Z& m, std::size_t zeros, std::size_t ones) const {
    const BigFloat l = big_log_rho(BigFloat(m.trace()), BigFloat(m.det()));
    return l.to_long_double() - log_scale(zeros, ones);
}

// ---- spectra ------------------------------------------------------------------

std::string to_string(SpectralClass c) {
    switch (c) {
        case SpectralClass::Hyperbolic: return "hyperbolic";
        case SpectralClass::Parabolic: return "parabolic";
        case SpectralClass::EllipticOrNegativeTrace: return "elliptic_or_negative_trace";
        case SpectralClass::Identity: return "identity";
    }
    return "?";
}

SpectralClass spectral_class(const Mat2Q& x) {
    const Rational dt = x.det();
    if (sgn(dt) <= 0) return SpectralClass::EllipticOrNegativeTrace;
    if (x.is_scalar()) return SpectralClass::Identity;
    const Rational t = x.trace();
    const Rational disc = t * t - 4 * dt;
    if (sgn(disc) > 0) return SpectralClass::Hyperbolic;
    if (sgn(disc) == 0) return SpectralClass::Parabolic;
    return SpectralClass::EllipticOrNegativeTrace;
}

QuadraticNumber spectral_radius(const Mat2Q& x) {
    const Rational t = x.trace(), dt = x.det();
    const Rational disc = t * t - 4 * dt;
    if (sgn(disc) >= 0) return (QuadraticNumber(abs(t)) + QuadraticNumber::sqrt(disc)) / QuadraticNumber(2);
    return QuadraticNumber::sqrt(dt);
}

long double log_spectral_radius(const Rational& trace, const Rational& det) {
    return big_log_rho(BigFloat(trace), BigFloat(det)).to_long_double();
}

// ---- projective line ---------------------------------------------------------------

std::strong_ordering operator<=>(const ProjectivePoint& x, const ProjectivePoint& y) {
    if (x.infinite_ || y.infinite_) {
        if (x.infinite_ && y.infinite_) return std::strong_ordering::equal;
        return x.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return x.value_ <=> y.value_;
}

long double ProjectivePoint::to_long_double() const {
    return infinite_ ? std::numeric_limits<long double>::infinity() : value_.to_long_double();
}

std::string ProjectivePoint::str() const { return infinite_ ? "inf" : value_.str(); }

bool cyclically_between(const ProjectivePoint& a, const ProjectivePoint& x, const ProjectivePoint& b) {
    return (a < x && x < b) || (x < b && b < a) || (b < a && a < x);
}

ProjectivePoint mobius(const Mat2Q& m, const ProjectivePoint& z) {
    if (z.is_infinite()) {
        if (m.c == 0) return ProjectivePoint::infinity();
        return ProjectivePoint(m.a / m.c);
    }
    const QuadraticNumber den = QuadraticNumber(m.c) * z.value() + QuadraticNumber(m.d);
    if (den.sign() == 0) return ProjectivePoint::infinity();
    return ProjectivePoint((QuadraticNumber(m.a) * z.value() + QuadraticNumber(m.b)) / den);
}

FixedPoints fixed_points(const Mat2Q& x) {
    if (x.is_scalar()) throw std::domain_error("scalar matrix fixes every point");
    const Rational t = x.trace();
    const Rational disc = t * t - 4 * x.det();
    if (sgn(disc) < 0) throw std::domain_error("elliptic matrix has no real fixed points");
    if (x.c == 0) {
        if (x.a == x.d) return ParabolicFixedPoint{ProjectivePoint::infinity()};
        const ProjectivePoint finite(x.b / (x.d - x.a));
        // z ↦ (a/d) z near ∞: ∞ attracts iff |a| > |d|
        if (abs(x.a) > abs(x.d)) return HyperbolicFixedPoints{ProjectivePoint::infinity(), finite};
        return HyperbolicFixedPoints{finite, ProjectivePoint::infinity()};
    }
    const Rational two_c = 2 * x.c;
    if (sgn(disc) == 0) return ParabolicFixedPoint{ProjectivePoint((x.a - x.d) / two_c)};
    // c·z + d equals the eigenvalue (tr ± √disc)/2 at the root (a − d ± √disc)/(2c)
    const int st = sgn(t);
    const QuadraticNumber root = QuadraticNumber::sqrt(disc);
    const QuadraticNumber base(x.a - x.d);
    const QuadraticNumber plus = (base + root) / QuadraticNumber(two_c);
    const QuadraticNumber minus = (base - root) / QuadraticNumber(two_c);
    if (st >= 0) return HyperbolicFixedPoints{plus, minus};
    return HyperbolicFixedPoints{minus, plus};
}

Rational gamma(const Mat2Q& x, unsigned k) {
    if (x.det() != 1) throw std::invalid_argument("gamma needs a unimodular matrix");
    const Rational t = x.trace();
    Rational prev = 0, cur = 1;
    if (k == 0) return prev;
    for (unsigned i = 1; i < k; ++i) {
        Rational next = t * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rational hs_norm_sq(const Mat2Q& x) { return x.a * x.a + x.b * x.b + x.c * x.c + x.d * x.d; }

Mat2Q make_hyperbolic(const Rational& s, const Rational& u, const Rational& lambda) {
    if (!(lambda > 1)) throw std::invalid_argument("hyperbolic generator needs lambda > 1");
    if (!(sgn(u) < 0 && sgn(s) > 0)) throw std::invalid_argument("hyperbolic generator needs u < 0 < s");
    const Mat2Q S{s, u, 1, 1};
    const Mat2Q D{lambda, 0, 0, 1 / lambda};
    return S * D * S.inverse();
}

Mat2Q make_parabolic(const Rational& x) {
    if (!(sgn(x) > 0)) throw std::invalid_argument("parabolic generator needs x > 0");
    return {1, 0, x, 1};
}

Mat2Q make_parabolic_transpose(const Rational& y) {
    if (!(sgn(y) > 0)) throw std::invalid_argument("parabolic generator needs y > 0");
    return {1, y, 0, 1};
}

Mat2D Mat2D::inverse() const {
    const long double dt = det();
    if (dt == 0) throw std::domain_error("singular matrix");
    return {d / dt, -b / dt, -c / dt, a / dt};
}

Mat2D Mat2D::from(const Mat2Q& m) {
    return {to_long_double(m.a), to_long_double(m.b), to_long_double(m.c), to_long_double(m.d)};
}

}  // namespace sturmian
