#include "sturmian/quadratic.hpp"

#include "sturmian/bigfloat.hpp"

#include <cstdio>
#include <stdexcept>

namespace sturmian {

namespace {

constexpr unsigned long kTrialLimit = 1024;

// Splits d = f²·r with r free of square factors up to the trial limit (and not a perfect square).
void strip_squares(Integer& d, Integer& f) {
    f = 1;
    if (d == 0) return;
    for (unsigned long pr = 2; pr <= kTrialLimit; ++pr) {
        const unsigned long sq = pr * pr;
        while (mpz_divisible_ui_p(d.get_mpz_t(), sq)) {
            d /= sq;
            f *= pr;
        }
    }
    if (mpz_perfect_square_p(d.get_mpz_t())) {
        Integer r;
        mpz_sqrt(r.get_mpz_t(), d.get_mpz_t());
        f *= r;
        d = 1;
    }
}

// sign(p + q√d)
int sign2(const Rational& p, const Rational& q, const Integer& d) {
    const int sp = sgn(p);
    const int sq = (d == 0) ? 0 : sgn(q);
    if (sq == 0) return sp;
    if (sp == 0 || sp == sq) return sq;
    // opposite signs: compare p² with q²d
    const Rational diff = p * p - q * q * d;
    const int sd = sgn(diff);
    return sd == 0 ? 0 : (sd > 0 ? sp : sq);
}

// sign(P + a√d1 + b√d2)
int sign3(const Rational& P, const Rational& a, const Integer& d1, const Rational& b, const Integer& d2) {
    const int s1 = sign2(P, a, d1);
    const int s2 = (d2 == 0) ? 0 : sgn(b);
    if (s2 == 0) return s1;
    if (s1 == 0 || s1 == s2) return s2;
    // |P + a√d1| vs |b|√d2: (P + a√d1)² − b²d2 = (P² + a²d1 − b²d2) + 2Pa√d1
    const int t = sign2(P * P + a * a * d1 - b * b * d2, 2 * P * a, d1);
    if (t == 0) return 0;
    return t > 0 ? s1 : s2;
}

[[noreturn]] void radicand_mismatch() {
    throw std::domain_error("quadratic arithmetic across different radicands");
}

const Integer& common_radicand(const QuadraticNumber& x, const QuadraticNumber& y) {
    if (x.is_rational()) return y.radicand();
    if (y.is_rational() || x.radicand() == y.radicand()) return x.radicand();
    radicand_mismatch();
}

BigFloat to_big(const QuadraticNumber& x) {
    BigFloat v(x.rational_part());
    if (!x.is_rational()) v = v + BigFloat(x.radical_coefficient()) * BigFloat(x.radicand()).sqrt();
    return v;
}

}  // namespace

QuadraticNumber::QuadraticNumber(const Rational& p, const Rational& q, const Integer& d) : p_(p), q_(q), d_(d) {
    if (sgn(d_) < 0) throw std::domain_error("negative radicand");
    if (q_ == 0 || d_ == 0) {
        q_ = 0;
        d_ = 0;
        return;
    }
    Integer f;
    strip_squares(d_, f);
    q_ *= f;
    if (d_ == 1) {
        p_ += q_;
        q_ = 0;
        d_ = 0;
    }
}

QuadraticNumber QuadraticNumber::sqrt(const Rational& r) {
    if (sgn(r) < 0) throw std::domain_error("square root of a negative rational");
    // √(n/m) = √(n·m)/m
    const Integer nm = r.get_num() * r.get_den();
    return QuadraticNumber(0, Rational(1, r.get_den()), nm);
}

int QuadraticNumber::sign() const { return sign2(p_, q_, d_); }

QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
    const Integer& d = common_radicand(x, y);
    return QuadraticNumber(x.p_ + y.p_, x.q_ + y.q_, d);
}

QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
    const Integer& d = common_radicand(x, y);
    return QuadraticNumber(x.p_ - y.p_, x.q_ - y.q_, d);
}

QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
    const Integer& d = common_radicand(x, y);
    return QuadraticNumber(x.p_ * y.p_ + x.q_ * y.q_ * d, x.p_ * y.q_ + x.q_ * y.p_, d);
}

QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
    // x / y = x·(p − q√d) / (p² − q²d)
    const Rational norm = y.p_ * y.p_ - y.q_ * y.q_ * y.d_;
    if (norm == 0) throw std::domain_error("division by zero");
    const QuadraticNumber conj(y.p_, -y.q_, y.d_);
    QuadraticNumber num = x * conj;
    return QuadraticNumber(num.p_ / norm, num.q_ / norm, num.d_);
}

std::strong_ordering operator<=>(const QuadraticNumber& x, const QuadraticNumber& y) {
    int s;
    if (x.is_rational() || y.is_rational() || x.d_ == y.d_) {
        const Integer& d = x.is_rational() ? y.d_ : x.d_;
        s = sign2(x.p_ - y.p_, x.q_ - y.q_, d);
    } else {
        s = sign3(x.p_ - y.p_, x.q_, x.d_, -y.q_, y.d_);
    }
    return s < 0 ? std::strong_ordering::less : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

long double QuadraticNumber::to_long_double() const { return to_big(*this).to_long_double(); }

long double QuadraticNumber::log_abs() const {
    if (sign() == 0) throw std::domain_error("log of zero");
    return to_big(*this).abs().log().to_long_double();
}

std::string QuadraticNumber::str() const {
    if (is_rational()) return to_string(p_);
    std::string out;
    if (p_ != 0) out = to_string(p_) + (sgn(q_) < 0 ? " - " : " + ");
    else if (sgn(q_) < 0) out = "-";
    const Rational aq = abs(q_);
    if (aq != 1) out += to_string(aq) + "*";
    out += "sqrt(" + d_.get_str() + ")";
    return out;
}

std::string QuadraticNumber::decimal(int digits) const {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%.*Lg", digits, to_long_double());
    return buf;
}

}  // namespace sturmian
