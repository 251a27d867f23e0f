#pragma once

#include "sturmian/rational.hpp"

#include <mpfr.h>

namespace sturmian {

/// Minimal RAII wrapper over an MPFR value at a fixed 256-bit precision.
/// Used only where a transcendental (sqrt, log) of an exact quantity is needed.
class BigFloat {
public:
    static constexpr mpfr_prec_t kPrecision = 256;

    BigFloat() { mpfr_init2(v_, kPrecision); mpfr_set_zero(v_, 1); }
    explicit BigFloat(const Rational& q) { mpfr_init2(v_, kPrecision); mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
    explicit BigFloat(const Integer& z) { mpfr_init2(v_, kPrecision); mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
    explicit BigFloat(long double x) { mpfr_init2(v_, kPrecision); mpfr_set_ld(v_, x, MPFR_RNDN); }
    BigFloat(const BigFloat& o) { mpfr_init2(v_, kPrecision); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    friend BigFloat operator+(const BigFloat& x, const BigFloat& y) { BigFloat r; mpfr_add(r.v_, x.v_, y.v_, MPFR_RNDN); return r; }
    friend BigFloat operator-(const BigFloat& x, const BigFloat& y) { BigFloat r; mpfr_sub(r.v_, x.v_, y.v_, MPFR_RNDN); return r; }
    friend BigFloat operator*(const BigFloat& x, const BigFloat& y) { BigFloat r; mpfr_mul(r.v_, x.v_, y.v_, MPFR_RNDN); return r; }
    friend BigFloat operator/(const BigFloat& x, const BigFloat& y) { BigFloat r; mpfr_div(r.v_, x.v_, y.v_, MPFR_RNDN); return r; }

    BigFloat sqrt() const { BigFloat r; mpfr_sqrt(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat log() const { BigFloat r; mpfr_log(r.v_, v_, MPFR_RNDN); return r; }
    BigFloat abs() const { BigFloat r; mpfr_abs(r.v_, v_, MPFR_RNDN); return r; }
    int sign() const { return mpfr_sgn(v_); }

    long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }

private:
    mpfr_t v_;
};

}  // namespace sturmian
