#include "sturmian/optimizer.hpp"

#include <doctest.h>

using namespace sturmian;

namespace {
const MatrixPair P{make_parabolic(1), make_parabolic_transpose(1)};
}

TEST_SUITE("optimizer") {
    TEST_CASE("golden pair maximizes at 1/2") {
        const SolveResult r = maximize_slope(P, 100);
        CHECK(r.tau_hat == SlopeFraction(1, 2));
        CHECK(r.certified);
        CHECK(static_cast<double>(r.chi_at_tau) == doctest::Approx(0.4812118250596034475).epsilon(1e-15));
        CHECK(maximize_slope(P, 10000).tau_hat == SlopeFraction(1, 2));
        SlopeEvaluator f(P);
        CHECK(local_optimality_check(f, SlopeFraction(1, 2), 20));
        CHECK_FALSE(local_optimality_check(f, SlopeFraction(1, 3), 20));
    }

    TEST_CASE("scaling B moves the optimum") {
        const MatrixPair small{P.A, Rational(1, 100) * P.B};
        CHECK(maximize_slope(small, 100).tau_hat == SlopeFraction(1, 100));
        const MatrixPair big{P.A, Rational(100) * P.B};
        CHECK(maximize_slope(big, 100).tau_hat == SlopeFraction(99, 100));
    }

    TEST_CASE("solver rejects bad input") {
        CHECK_THROWS_AS(maximize_slope(P, 1), std::invalid_argument);
        CHECK_THROWS_AS(maximize_slope({make_hyperbolic(1, -2, 2), make_hyperbolic(2, -1, Rational(3, 2))}, 10),
                        std::invalid_argument);
    }

    TEST_CASE("farey pairs and concavity") {
        const auto fp = farey_pairs(5);
        CHECK(fp.size() == 9);
        for (const auto& [l, r] : fp) {
            CHECK(farey_neighbors(l, r));
            CHECK(concavity_probe(P, l, r));
        }
        SlopeEvaluator f(P);
        CHECK_THROWS_AS(concavity_probe(f, SlopeFraction(1, 3), SlopeFraction(2, 3)), std::invalid_argument);
    }

    TEST_CASE("grids") {
        const auto g = geometric_grid(0.05, 20, 100);
        REQUIRE(g.size() == 100);
        CHECK(g.front() == Rational(1, 20));
        CHECK(g.back() == 20);
        for (std::size_t k = 1; k < g.size(); ++k) CHECK(g[k - 1] < g[k]);
        CHECK(geometric_grid(2, 8, 1).front() == 2);
        CHECK_THROWS_AS(geometric_grid(0, 1, 3), std::invalid_argument);
    }

    TEST_CASE("sweep and plateaus") {
        const std::vector<Rational> grid{Rational(1, 10), Rational(1, 2), 1, 2, 10};
        const auto serial = sweep_family(P.A, P.B, grid, 50);
        const auto threaded = sweep_family(P.A, P.B, grid, 50, 3);
        REQUIRE(serial.size() == 5);
        for (std::size_t k = 0; k < serial.size(); ++k) {
            CHECK(serial[k].tau == threaded[k].tau);
            CHECK(serial[k].chi == threaded[k].chi);
        }
        CHECK(serial[2].tau == SlopeFraction(1, 2));
        CHECK(serial[0].tau.value() + serial[4].tau.value() == 1);
        CHECK_THROWS_AS(sweep_family(P.A, P.B, {Rational(-1)}, 50), std::invalid_argument);

        std::vector<SweepRecord> recs{{1, SlopeFraction(1, 3), 0, 1}, {2, SlopeFraction(1, 3), 0, 1},
                                      {3, SlopeFraction(1, 2), 0, 1}, {4, SlopeFraction(2, 3), 0, 1},
                                      {5, SlopeFraction(2, 3), 0, 1}, {6, SlopeFraction(2, 3), 0, 1}};
        const auto pl = locking_plateaus(recs);
        REQUIRE(pl.size() == 2);
        CHECK(pl[0].count == 2);
        CHECK(pl[1].tau == SlopeFraction(2, 3));
        CHECK(pl[1].t_first == 4);
        CHECK(pl[1].t_last == 6);
    }

    TEST_CASE("hunt") {
        const HuntResult h = hunt_bracket(P.A, P.B, Rational(2, 5), Rational(1, 2), 1, 200, Rational(1, 1000));
        if (!h.hit) {
            CHECK(h.tau_lo.value() < Rational(2, 5));
            CHECK(h.tau_hi.value() > Rational(2, 5));
            CHECK(h.t_hi - h.t_lo < Rational(1, 1000));
        } else {
            CHECK(h.tau_lo == SlopeFraction(2, 5));
        }
        const HuntResult at = hunt_bracket(P.A, P.B, Rational(1, 2), 1, 2, 200, Rational(1, 1000));
        CHECK(at.hit);
        CHECK(at.t_lo == 1);
        CHECK_THROWS_AS(hunt_bracket(P.A, P.B, Rational(1, 10), 1, 2, 200, Rational(1, 1000)), std::invalid_argument);
        CHECK_THROWS_AS(hunt_bracket(P.A, P.B, Rational(1, 3), 2, 1, 200, Rational(1, 1000)), std::invalid_argument);
    }
}
