#include "sturmian/rational.hpp"

#include "sturmian/bigfloat.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace sturmian {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    Integer v(std::string(s), 10);
    return negative ? Integer(-v) : v;
}

Rational parse_decimal(std::string_view text) {
    std::string_view s = text;
    Integer exponent_adjust = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        exponent_adjust = parse_integer(s.substr(e + 1), text);
        s = s.substr(0, e);
    }
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string digits;
    long frac_digits = 0;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        digits = std::string(ip) + std::string(fp);
        frac_digits = static_cast<long>(fp.size());
    } else {
        if (!all_digits(s)) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        digits = std::string(s);
    }
    if (!exponent_adjust.fits_slong_p() || std::abs(exponent_adjust.get_si()) > 100000)
        throw std::invalid_argument("exponent out of range: '" + std::string(text) + "'");
    long exp10 = exponent_adjust.get_si() - frac_digits;
    Integer mant(digits, 10);
    Integer ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exp10)));
    Rational r = exp10 >= 0 ? Rational(mant * ten_pow) : Rational(mant, ten_pow);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty rational");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash), text);
        Integer den = parse_integer(text.substr(slash + 1), text);
        if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    return parse_decimal(text);
}

Rational rational_from_double(double value) {
    if (!std::isfinite(value)) throw std::invalid_argument("non-finite value cannot be made exact");
    Rational r;
    mpq_set_d(r.get_mpq_t(), value);
    return r;
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

long double to_long_double(const Rational& value) { return BigFloat(value).to_long_double(); }

Integer floor_of(const Rational& value) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

bool rational_sqrt(const Rational& value, Rational& root) {
    if (sgn(value) < 0) return false;
    if (!mpz_perfect_square_p(value.get_num_mpz_t()) || !mpz_perfect_square_p(value.get_den_mpz_t())) return false;
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), value.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), value.get_den_mpz_t());
    root = Rational(n, d);
    root.canonicalize();
    return true;
}

}  // namespace sturmian
