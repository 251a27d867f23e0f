#include "sturmian/lyapunov.hpp"

#include <doctest.h>

#include <cmath>

using namespace sturmian;

namespace {
const MatrixPair P{make_parabolic(1), make_parabolic_transpose(1)};

std::vector<std::string> strs(const std::vector<Word>& ws) {
    std::vector<std::string> out;
    for (const Word& w : ws) out.push_back(w.str());
    return out;
}
}  // namespace

TEST_SUITE("lyapunov") {
    TEST_CASE("chi at rational slopes") {
        // values from tests/oracle/oracle.py (mpmath, 40 digits)
        CHECK(static_cast<double>(chi_rational(P, SlopeFraction(1, 2)).chi) == doctest::Approx(0.4812118250596034475).epsilon(1e-15));
        CHECK(static_cast<double>(chi_rational(P, SlopeFraction(1, 3)).chi) == doctest::Approx(0.43898596564160556954).epsilon(1e-15));
        CHECK(static_cast<double>(chi_rational(P, SlopeFraction(2, 5)).chi) == doctest::Approx(0.45848633391223553756).epsilon(1e-15));
        CHECK(chi_rational(P, SlopeFraction(0, 1)).chi == 0);
        const SlopeValue v = chi_rational(P, SlopeFraction(1, 2));
        CHECK(v.cycle.str() == "01");
        CHECK(v.exact_radius == QuadraticNumber(Rational(3, 2), Rational(1, 2), 5));
    }

    TEST_CASE("chi along convergents") {
        CHECK(strs({}).empty());
        const auto c = convergents(parse_rational("0.381966"), 13);
        REQUIRE(c.size() >= 4);
        CHECK(c[0] == SlopeFraction(0, 1));
        CHECK(c[1] == SlopeFraction(1, 2));
        CHECK(c[2] == SlopeFraction(1, 3));
        CHECK(c[3] == SlopeFraction(2, 5));
        const ChiApproximation a = chi_irrational_approx(P, parse_rational("0.381966"), 100);
        CHECK(a.convergents.back().den() <= 100);
        CHECK(a.error_bound < 1e-3L);
        const ChiApproximation h = chi_irrational_approx(P, Rational(1, 2), 100);
        CHECK(h.value == chi_rational(P, SlopeFraction(1, 2)).chi);
        CHECK(h.error_bound == 0);
        const ChiApproximation t = chi_irrational_approx(P, parse_rational("0.381966"), 2);
        CHECK(t.convergents.back() == SlopeFraction(1, 2));
    }

    TEST_CASE("jsr bounds") {
        const JsrBounds j = jsr_bounds(P, 8);
        CHECK(static_cast<double>(j.lower) == doctest::Approx(1.6180339887498948482).epsilon(1e-15));
        CHECK(j.argmax_word.str() == "01");
        CHECK(static_cast<double>(j.upper) == doctest::Approx(1.6180340095116051965).epsilon(1e-14));
        CHECK(j.upper >= j.lower);
        const JsrBounds j2 = jsr_bounds(P, 2);
        CHECK(static_cast<double>(j2.lower) == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-15));
        const JsrBounds s = jsr_bounds({Mat2Q::scalar(2), Mat2Q::scalar(3)}, 3);
        CHECK(static_cast<double>(s.lower) == doctest::Approx(3.0).epsilon(1e-15));
        CHECK(static_cast<double>(s.upper) == doctest::Approx(3.3673861449281189443).epsilon(1e-14));
        CHECK_THROWS_AS(jsr_bounds(P, 0), std::invalid_argument);
        CHECK_THROWS_AS(jsr_bounds(P, 17), std::invalid_argument);
    }

    TEST_CASE("trace tables") {
        const TraceTable t = trace_argmax(P, 2, 4);
        CHECK(t.entries.size() == 6);
        CHECK(strs(t.maximizers) == std::vector<std::string>{"0101", "1010"});
        CHECK(t.max_trace == 7);
        CHECK(t.entries.front().word.str() == "0011");
        CHECK(t.entries.front().trace == 6);
        const TraceTable t5 = trace_argmax(P, 2, 5);
        CHECK(strs(t5.maximizers) == std::vector<std::string>{"00101", "01001", "01010", "10010", "10100"});
        CHECK(t5.max_trace == 10);
        CHECK(t5.entries.front().trace == 8);
        const TraceTable t0 = trace_argmax(P, 0, 3);
        CHECK(strs(t0.maximizers) == std::vector<std::string>{"000"});
        CHECK(t0.max_trace == 2);
        CHECK_THROWS_AS(trace_argmax(P, 3, 2), std::invalid_argument);
        CHECK_THROWS_AS(trace_argmax(P, 1, 25), std::invalid_argument);
    }

    TEST_CASE("trace identities, worked instance") {
        const JsIdentity j = js_identity_check(P.A, P.B, 1, 1, 0);
        CHECK(j.eta == 1);
        CHECK(j.t1 == 6);
        CHECK(j.delta == 1);
        CHECK(j.all());
        CHECK(j.W1 - j.W0 == Mat2Q{8, 1, 1, -5});
        const JsIdentity k = js_identity_check(P.A, P.B, 2, 1, 1);
        CHECK(k.eta == 6);
        CHECK(k.all());
        CHECK_THROWS_AS(js_identity_check(P.A, P.B, 0, 1, 0), std::invalid_argument);
        CHECK_THROWS_AS(js_identity_check(Rational(2) * P.A, P.B, 1, 1, 0), std::invalid_argument);
    }

    TEST_CASE("certificate and amplification for (0011)^inf") {
        const PeriodicWord s = PeriodicWord::of_cycle(Word("0011"));
        const Prop31Certificate c = prop31_certificate(P, s, all_words_up_to(6));
        CHECK(c.xi_hat == Rational(22, 19));
        CHECK(c.argmin_z.str() == "000000");
        CHECK(c.samples == 127);
        const char* ratios[] = {"198/169", "9301/5741", "436949/195025", "20527302/6625109", "964346245/225058681"};
        for (std::size_t n = 1; n <= 5; ++n) {
            const Amplification a = trace_amplify(P, s, n);
            CHECK(to_string(a.ratio) == ratios[n - 1]);
            CHECK(a.offset == 1);
            CHECK(a.stride == 8);
            CHECK(a.t.size() == a.t_prime.size());
            CHECK(a.t.ones() == a.t_prime.ones());
        }
        CHECK_THROWS_AS(trace_amplify(P, PeriodicWord::of_cycle(Word("01")), 1), std::invalid_argument);
    }

    TEST_CASE("trace against norm") {
        CHECK(in_h_n(Word("0110"), 2));
        CHECK_FALSE(in_h_n(Word("0010"), 2));
        CHECK_FALSE(in_h_n(Word("1011"), 2));
        CHECK(in_h_n(Word("01011010"), 2));
        CHECK_FALSE(in_h_n(Word("0"), 2));
        const TraceNormRatio r = trace_norm_ratio(P, 3, 8);
        CHECK(r.delta_hat > 0);
        CHECK(r.sampled + r.excluded == 510);
    }

    TEST_CASE("word enumeration") {
        const auto ws = all_words_up_to(3);
        CHECK(ws.size() == 15);
        CHECK(ws.front().empty());
        CHECK(ws.back().str() == "111");
    }
}
