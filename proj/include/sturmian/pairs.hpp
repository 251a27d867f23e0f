#pragma once

#include "sturmian/mat2.hpp"

#include <optional>
#include <string>
#include <variant>

namespace sturmian {

enum class PairClass {
    CoParallel,     // (h)
    Mixed,          // (m)
    ParabolicPair,  // (p)
    Crossing,
    SharedFixedPoint,
    Elliptic,
    IdentityComponent,
    NotBalanced,
};

std::string to_string(PairClass c);
/// Inverse of to_string; throws std::invalid_argument.
PairClass pair_class_from_string(const std::string& name);
inline bool is_balanced_class(PairClass c) {
    return c == PairClass::CoParallel || c == PairClass::Mixed || c == PairClass::ParabolicPair;
}

/// Scalars a, b with aA, bB unimodular and of trace ≥ 2.
struct NormalizedPair {
    MatrixPair original;
    long double a = 1, b = 1;
    int sign_a = 1, sign_b = 1;
    std::optional<Rational> a_exact, b_exact;  // present when det is a rational square
    Mat2D A_float, B_float;
    std::optional<Mat2Q> A_exact, B_exact;
};

/// Throws std::invalid_argument unless both determinants are positive.
std::variant<NormalizedPair, PairClass> normalize_to_unimodular(const MatrixPair& pair);

/// Open arc of ℝP¹ traversed in the increasing direction from `from` to `to`.
struct Arc {
    ProjectivePoint from, to;
    bool contains(const ProjectivePoint& x) const { return cyclically_between(from, x, to); }
    bool closure_contains(const ProjectivePoint& x) const { return x == from || x == to || contains(x); }
};

struct ConeData {
    Arc plus, minus;
};

struct PairAnalysis {
    PairClass cls = PairClass::NotBalanced;
    std::optional<NormalizedPair> normalized;
    std::optional<FixedPoints> fixed_a, fixed_b;
    std::optional<ConeData> cones;           // balanced classes only
    std::optional<bool> mixed_dual_agrees;   // Mixed/NotBalanced hyperbolic+parabolic pairs
};

/// Exact classification from fixed-point cyclic order and Möbius direction tests.
PairAnalysis analyze(const MatrixPair& pair);
inline PairClass classify(const MatrixPair& pair) { return analyze(pair).cls; }

/// Checks that every word of length 1..max_len maps I⁺ into I⁺ and I⁻ into itself under
/// the inverse, strictly (closure into the open arc) when the word uses both letters.
/// Exact; evaluated at arc endpoints. Requires a balanced pair.
bool cone_invariance(const MatrixPair& pair, std::size_t max_len);

struct NormalForm {
    char tag = '?';              // 'h', 'm' or 'p'
    Mat2D T;                     // normal form = T⁻¹ (scaled pair) T, |det T| = 1
    Mat2D A, B;                  // conjugated unimodular matrices
    bool verified = false;
    std::string failure;         // which check failed when !verified
};

/// Floating conjugator into one of the normal forms (h)/(m)/(p), verified to 1e-9.
/// Throws std::invalid_argument when the pair is not balanced.
NormalForm normal_form_conjugator(const MatrixPair& pair);

struct BalancedPairReport {
    bool words_in_a = false;          // (i) every [w], |w| ≤ 8, in 𝔞; mixed words hyperbolic
    bool sub_pairs_balanced = false;  // (ii) (X, Y) balanced, X ∈ {A,B}, Y ∈ {AB,BA}
    bool ab_ba_crossing = false;      // (iii)
    bool trace_inequality = false;    // (iv) tr((AB)²) > tr(A²B²)
    Rational trace_abab, trace_aabb;
    bool all() const { return words_in_a && sub_pairs_balanced && ab_ba_crossing && trace_inequality; }
};

BalancedPairReport balanced_pair_checks(const MatrixPair& pair, std::size_t max_len = 8);

}  // namespace sturmian
