#pragma once

#include "sturmian/mat2.hpp"
#include "sturmian/words.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace sturmian {

/// f(p/q) = ln ρ([christoffel cycle of p/q]) / q on the original (unscaled) matrices.
/// Stern–Brocot nodes keep their integer products so a mediant costs one multiplication.
class SlopeEvaluator {
public:
    explicit SlopeEvaluator(const MatrixPair& pair);

    long double operator()(const SlopeFraction& slope);
    /// Integer product of the Christoffel cycle (over the common denominators).
    const Mat2Z& product(const SlopeFraction& slope);
    /// Product for the mediant of Farey neighbours l < r: the cycle of l⊕r is cycle(l)·cycle(r).
    const Mat2Z& mediant_product(const SlopeFraction& l, const SlopeFraction& r);
    /// f at `slope` given the integer product of some word with the right letter counts and spectrum.
    long double value(const SlopeFraction& slope, const Mat2Z& m);

    std::size_t evaluations() const noexcept { return evaluations_; }
    const ScaledPair& scaled() const noexcept { return sp_; }

private:
    using Key = std::pair<std::uint64_t, std::uint64_t>;

    ScaledPair sp_;
    std::map<Key, Mat2Z> products_;
    std::map<Key, long double> values_;
    std::size_t evaluations_ = 0;
};

struct FareyBracket {
    SlopeFraction left, right;
    long double f_left = 0, f_right = 0;
};

struct SolveResult {
    SlopeFraction tau_hat;
    FareyBracket bracket;        // Farey neighbours around (or ending at) tau_hat
    long double chi_at_tau = 0;
    std::uint64_t max_den = 0;
    bool certified = false;      // tau_hat beats its neighbours in the Farey sequence of order max_den
    std::size_t iterations = 0;
    std::size_t evaluations = 0;
};

/// Stern–Brocot descent for the maximum of f over slopes with denominator ≤ max_den.
/// Throws std::invalid_argument unless the pair is balanced and max_den ≥ 2.
SolveResult maximize_slope(const MatrixPair& pair, std::uint64_t max_den);
/// Same, reusing an evaluator (no balance check).
SolveResult maximize_slope(SlopeEvaluator& f, std::uint64_t max_den);

/// Brute force: f(tau) ≥ f(p/q) for every p/q with q ≤ den_limit.
bool local_optimality_check(SlopeEvaluator& f, const SlopeFraction& tau, std::uint64_t den_limit);

struct ConcavityProbe {
    long double f_left = 0, f_right = 0, f_mediant = 0, chord = 0;
    bool holds = false;
};

/// f(mediant) > λ f(left) + (1 − λ) f(right) − 1e-10 with λ = q1 / (q1 + q2).
/// Throws std::invalid_argument unless left < right are Farey neighbours.
ConcavityProbe concavity_probe(SlopeEvaluator& f, const SlopeFraction& left, const SlopeFraction& right);
bool concavity_probe(const MatrixPair& pair, const SlopeFraction& left, const SlopeFraction& right);

/// Every Farey pair left < right in [0, 1] with q1 + q2 ≤ limit.
std::vector<std::pair<SlopeFraction, SlopeFraction>> farey_pairs(std::uint64_t limit);

struct SweepRecord {
    Rational t;
    SlopeFraction tau;
    long double chi = 0;
    long double jsr_lower = 0;  // exp(χ at τ̂), the rate of the optimal periodic word
};

/// τ̂ of (A, t·B) for each grid point. Balance is t-invariant and checked once.
/// Grid points are split across `workers` threads; output order follows the grid.
std::vector<SweepRecord> sweep_family(const Mat2Q& A, const Mat2Q& B, const std::vector<Rational>& t_grid,
                                      std::uint64_t max_den, unsigned workers = 1);

/// n points geometrically spaced over [lo, hi], each rounded to 6 significant digits.
std::vector<Rational> geometric_grid(double lo, double hi, std::size_t n);

struct Plateau {
    SlopeFraction tau;
    Rational t_first, t_last;
    std::size_t count = 0;
};

/// Maximal runs (length ≥ 2) of consecutive records sharing τ̂.
std::vector<Plateau> locking_plateaus(const std::vector<SweepRecord>& records);

struct HuntResult {
    Rational t_lo, t_hi;
    SlopeFraction tau_lo, tau_hi;
    Rational target;
    bool hit = false;  // some bisection point had τ̂ exactly equal to the target
    std::size_t iterations = 0;
};

/// Bisects t until t_hi − t_lo < tol while τ̂ straddles the target.
/// Throws std::invalid_argument when the endpoints do not straddle it.
HuntResult hunt_bracket(const Mat2Q& A, const Mat2Q& B, const Rational& target, const Rational& t_lo,
                        const Rational& t_hi, std::uint64_t max_den, const Rational& tol);

}  // namespace sturmian
