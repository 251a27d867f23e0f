#pragma once

#include "sturmian/rational.hpp"

#include <compare>
#include <string>

namespace sturmian {

/// Exact real number p + q·√d with rational p, q and a non-square radicand d ≥ 0.
///
/// Canonical form: q = 0 ⟺ d = 0. The radicand is stripped of square factors by trial
/// division up to 1024 plus a perfect-square test, so two equal values may in principle
/// carry different radicands; comparisons never rely on the representation and are exact
/// across radicands (isolate a radical, square, recurse on signs).
class QuadraticNumber {
public:
    QuadraticNumber() = default;
    QuadraticNumber(const Rational& p) : p_(p) {}  // NOLINT(google-explicit-constructor)
    QuadraticNumber(long p) : p_(p) {}             // NOLINT(google-explicit-constructor)
    QuadraticNumber(const Rational& p, const Rational& q, const Integer& d);

    /// √r for rational r ≥ 0.
    static QuadraticNumber sqrt(const Rational& r);

    const Rational& rational_part() const noexcept { return p_; }
    const Rational& radical_coefficient() const noexcept { return q_; }
    const Integer& radicand() const noexcept { return d_; }
    bool is_rational() const noexcept { return d_ == 0; }

    int sign() const;

    friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y);
    friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y);
    friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y);
    friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y);
    QuadraticNumber operator-() const { return QuadraticNumber(-p_, -q_, d_); }

    /// Exact three-way comparison, valid for any pair of radicands.
    friend std::strong_ordering operator<=>(const QuadraticNumber& x, const QuadraticNumber& y);
    friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
        return (x <=> y) == std::strong_ordering::equal;
    }

    long double to_long_double() const;
    /// Natural log of |value| at 256-bit working precision, rounded to long double.
    long double log_abs() const;
    /// e.g. "-1/2 + 1/2*sqrt(5)".
    std::string str() const;
    /// Decimal rendering with `digits` significant digits.
    std::string decimal(int digits = 20) const;

private:
    Rational p_{0};
    Rational q_{0};
    Integer d_{0};
};

}  // namespace sturmian
