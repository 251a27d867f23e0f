#pragma once

#include "sturmian/mat2.hpp"
#include "sturmian/pairs.hpp"

#include <cstdint>
#include <random>

namespace sturmian {

struct GeneratedPair {
    MatrixPair pair;
    PairClass expected = PairClass::NotBalanced;
    char tag = '?';  // 'h', 'm', 'p' for balanced archetypes, 'x' for crossing, 'r' for unstructured
};

/// Seeded source of test pairs. Balanced pairs are normal forms with random rational
/// parameters, conjugated by a random T ∈ GL(2,ℚ) of entry height ≤ 20 and scaled by
/// random positive rationals. Same seed, same sequence.
class PairGenerator {
public:
    explicit PairGenerator(std::uint64_t seed) : rng_(seed) {}

    /// Uniformly one of (h), (m), (p).
    GeneratedPair balanced();
    GeneratedPair balanced(char tag);
    /// Two positive hyperbolics with linked fixed points, conjugated and scaled.
    GeneratedPair crossing();
    /// Integer entries in [-bound, bound], no structure.
    GeneratedPair unstructured(int bound = 9);
    /// Unimodular integer matrix with entries of height ≤ bound (product of random elementary moves).
    Mat2Q unimodular(int bound = 100);

    /// p/q with p ∈ [1, num_max], q ∈ [1, den_max].
    Rational positive_rational(int num_max, int den_max);
    /// Nonzero rational of height ≤ h.
    Rational signed_rational(int h);
    Mat2Q conjugator(int height = 20);

    std::mt19937_64& engine() noexcept { return rng_; }

private:
    int uniform(int lo, int hi);
    MatrixPair disguise(const Mat2Q& A, const Mat2Q& B);

    std::mt19937_64 rng_;
};

}  // namespace sturmian
