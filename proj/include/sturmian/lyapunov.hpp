#pragma once

#include "sturmian/mat2.hpp"
#include "sturmian/pairs.hpp"
#include "sturmian/words.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace sturmian {

/// χ at a rational slope: ln ρ([christoffel cycle]) / q.
struct SlopeValue {
    SlopeFraction slope;
    long double chi = 0;
    QuadraticNumber exact_radius;
    Word cycle;
};

SlopeValue chi_rational(const MatrixPair& pair, const SlopeFraction& slope);

struct ChiApproximation {
    long double value = 0;
    long double error_bound = 0;  // |f(last) − f(previous)| along the convergents
    std::vector<SlopeFraction> convergents;
    std::vector<long double> values;
};

/// Evaluates χ along the continued-fraction convergents of alpha with denominator ≤ max_q.
/// A rational alpha whose denominator fits is returned exactly (error bound 0).
ChiApproximation chi_irrational_approx(const MatrixPair& pair, const Rational& alpha, std::uint64_t max_q);

/// Continued-fraction convergents of alpha ∈ [0,1] with denominator ≤ max_q.
std::vector<SlopeFraction> convergents(const Rational& alpha, std::uint64_t max_q);

struct JsrBounds {
    long double lower = 0, upper = 0;
    std::size_t depth = 0;
    Word argmax_word;   // shortest, then lexicographically first, word attaining `lower`
    Word upper_word;    // length-depth word attaining `upper`
    long double c_hat = 0;  // max ‖[w]‖ / lower^|w| over the enumerated words
};

/// lower = max ρ([w])^{1/|w|} over 1 ≤ |w| ≤ depth; upper = max ‖[w]‖^{1/depth} over |w| = depth
/// (Hilbert–Schmidt norm). depth ∈ [1, 16].
JsrBounds jsr_bounds(const MatrixPair& pair, std::size_t depth);

struct TraceEntry {
    Word word;
    Rational trace;
    bool cyclic_balanced = false;
    bool maximizer = false;
};

struct TraceTable {
    std::size_t l = 0, n = 0;
    std::vector<TraceEntry> entries;  // lexicographic
    std::vector<Word> maximizers;     // lexicographic
    Rational max_trace;
};

/// Exact traces over all words of length n with l ones. Requires l ≤ n ≤ 24.
TraceTable trace_argmax(const MatrixPair& pair, std::size_t l, std::size_t n);

struct JsIdentity {
    Rational eta, t1, t2, delta;
    Mat2Q X, Xt, Y, Yt, W0, W1, W2;
    bool w1_identity = false;  // W1 − W0 = η X̃ + t1 (X̃ − X)
    bool w2_identity = false;  // W2 − W0 = η X + t2 (X − X̃)
    bool y_identity = false;   // Ỹ − Y = δ (X − X̃)
    bool all() const { return w1_identity && w2_identity && y_identity; }
};

/// Requires (U, V) balanced and unimodular with positive traces, p, q ≥ 1, m ≥ 0.
JsIdentity js_identity_check(const Mat2Q& U, const Mat2Q& V, int p, int q, int m);

struct Prop31Certificate {
    Prop31Words words;
    Rational xi_hat;   // min over samples of max(tr[w1 z], tr[w2 z]) / tr[w0 z]
    Word argmin_z;
    std::size_t samples = 0;
};

/// Throws std::invalid_argument for a balanced s or an unbalanced pair, and
/// std::logic_error if some sample has max(tr[w1 z], tr[w2 z]) ≤ tr[w0 z].
Prop31Certificate prop31_certificate(const MatrixPair& pair, const PeriodicWord& s, const std::vector<Word>& z_samples);

/// Every word of length ≤ max_len, shortest first then lexicographic (ε included).
std::vector<Word> all_words_up_to(std::size_t max_len);

struct Amplification {
    Prop31Words words;
    Word t, t_prime;
    std::vector<int> choices;    // i_1 … i_n ∈ {1, 2}
    std::size_t offset = 0;      // position of the first w0 in s
    std::size_t stride = 0;      // distance between consecutive w0 blocks
    Rational trace_t, trace_t_prime, ratio;
};

/// t = w0 x1 w0 … x_n w0 taken from s, and t' from the greedy substitution w0 → w1/w2.
Amplification trace_amplify(const MatrixPair& pair, const PeriodicWord& s, std::size_t n);

/// x ∈ 𝓗_N: |x| ≥ N and x neither starts nor ends with 0^N or 1^N.
bool in_h_n(const Word& x, std::size_t N);

struct TraceNormRatio {
    long double delta_hat = 0;
    Word argmin;
    std::size_t sampled = 0, excluded = 0;
};

/// δ̂ = min tr[x]/‖[x]‖ over 1 ≤ |x| ≤ sample_len; words outside 𝓗_N are skipped unless the
/// pair is co-parallel. Traces are sign-corrected by the unimodular scalars.
TraceNormRatio trace_norm_ratio(const MatrixPair& pair, std::size_t N, std::size_t sample_len);

}  // namespace sturmian
