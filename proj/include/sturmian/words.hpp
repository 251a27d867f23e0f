#pragma once

#include "sturmian/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sturmian {

/// Finite word over {0,1}. Serialized as an ASCII string of '0'/'1'.
class Word {
public:
    Word() = default;
    /// Throws std::invalid_argument on any character other than '0'/'1'.
    explicit Word(std::string_view letters);

    static Word repeat(int letter, std::size_t n);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    int operator[](std::size_t i) const { return letters_[i] - '0'; }
    std::size_t ones() const noexcept;
    const std::string& str() const noexcept { return letters_; }

    Word slice(std::size_t pos, std::size_t len) const { return Word(letters_.substr(pos, len), Trusted{}); }
    Word reversed() const;
    Word rotated(std::size_t shift) const;
    Word pow(std::size_t k) const;
    bool contains(const Word& factor) const { return letters_.find(factor.letters_) != std::string::npos; }
    /// Position of the first occurrence of `factor`, or npos.
    std::size_t find(const Word& factor, std::size_t from = 0) const { return letters_.find(factor.letters_, from); }

    void push_back(int letter) { letters_.push_back(letter ? '1' : '0'); }
    Word& operator+=(const Word& other) {
        letters_ += other.letters_;
        return *this;
    }
    friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

    auto operator<=>(const Word&) const = default;

    static constexpr std::size_t npos = std::string::npos;

private:
    struct Trusted {};
    Word(std::string letters, Trusted) : letters_(std::move(letters)) {}
    std::string letters_;
};

/// Eventually periodic infinite word preperiod · cycle · cycle · ...
struct PeriodicWord {
    Word preperiod;
    Word cycle;  // non-empty

    PeriodicWord(Word pre, Word cyc);
    /// Purely periodic word cycle^∞.
    static PeriodicWord of_cycle(Word cyc) { return PeriodicWord(Word(), std::move(cyc)); }

    int letter(std::size_t i) const;
    Word prefix(std::size_t n) const;
    /// Window length used when a horizon is not supplied: |pre| + 4|cycle|.
    std::size_t default_horizon() const { return preperiod.size() + 4 * cycle.size(); }
};

/// Reduced slope p/q with 0 ≤ p ≤ q, q > 0. Serialized as "p/q".
class SlopeFraction {
public:
    SlopeFraction() : num_(0), den_(1) {}
    /// Reduces to lowest terms; throws std::invalid_argument unless 0 ≤ num ≤ den and den > 0.
    SlopeFraction(std::uint64_t num, std::uint64_t den);
    static SlopeFraction parse(std::string_view text);

    std::uint64_t num() const noexcept { return num_; }
    std::uint64_t den() const noexcept { return den_; }
    Rational value() const { return Rational(static_cast<unsigned long>(num_), static_cast<unsigned long>(den_)); }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    friend bool operator==(const SlopeFraction&, const SlopeFraction&) = default;
    friend std::strong_ordering operator<=>(const SlopeFraction& a, const SlopeFraction& b) {
        // cross-multiplication fits: both denominators stay well below 2^32 in practice
        const unsigned __int128 l = static_cast<unsigned __int128>(a.num_) * b.den_;
        const unsigned __int128 r = static_cast<unsigned __int128>(b.num_) * a.den_;
        return l <=> r;
    }

private:
    std::uint64_t num_;
    std::uint64_t den_;
};

SlopeFraction mediant(const SlopeFraction& a, const SlopeFraction& b);
/// |p1 q2 − p2 q1| = 1.
bool farey_neighbors(const SlopeFraction& a, const SlopeFraction& b);

// ---- balance -------------------------------------------------------------

bool is_balanced(const Word& w);
/// Scans every factor inside the first `horizon` letters.
/// Requires horizon ≥ 2|cycle| + |preperiod|; throws std::invalid_argument otherwise.
bool is_balanced(const PeriodicWord& x, std::size_t horizon);
inline bool is_balanced(const PeriodicWord& x) { return is_balanced(x, x.default_horizon()); }

/// Shortest w (lexicographically least among the shortest) with 0w0 and 1w1 both factors;
/// nullopt exactly when the word is balanced.
std::optional<Word> unbalance_witness(const Word& w);
std::optional<Word> unbalance_witness(const PeriodicWord& x);

/// First n letters of s_alpha, i_k = ⌊kα⌋ − ⌊(k−1)α⌋, in exact integer arithmetic.
Word mechanical_word(const SlopeFraction& alpha, std::size_t n);
Word mechanical_word(const Rational& alpha, std::size_t n);

/// Lower Christoffel word of slope p/q (length q).
Word christoffel_cycle(const SlopeFraction& slope);

/// Whether x^∞ is balanced. Only factors of length ≤ |x| need checking.
bool cyclic_is_balanced(const Word& x);

/// max over factors f of |ones(f) − |f|·α|.
Rational sturmian_deviation(const Word& w, const SlopeFraction& alpha);

// ---- alphabet reduction ---------------------------------------------------

/// One step of the {a,b} → {a, ba} rewriting, recorded for inspection.
struct ReductionStep {
    Word u, v;        // alphabet before the step
    Word witness;     // binary expansion of the witness w
    bool swapped;     // true when a = v, b = u (uu was the absent square)
};

struct AlphabetReduction {
    Word u, v;                  // final alphabet
    Word rotation;              // rotation x̃ of the cycle that parses over {u, v}
    std::vector<bool> tokens;   // x̃ as a cyclic word over {u, v}; true = v
    Word witness;               // final witness (binary)
    std::size_t iterations = 0;
    std::vector<ReductionStep> steps;
};

/// Rewrites the cycle of a purely periodic, unbalanced word until both uu and vv occur
/// cyclically. Throws std::invalid_argument for a preperiod or a balanced word.
AlphabetReduction alphabet_reduce(const PeriodicWord& s);

struct Prop31Words {
    Word w0, w1, w2;
    Word u, v;     // roles in w0 = u v^{q+1} (uv)^m u^{p+1} v
    int p = 0, q = 0, m = 0;
    bool mirrored = false;  // found via the v u^{p+1} (vu)^m v^{q+1} u pattern; u,v then swapped
    AlphabetReduction reduction;
};

/// Builds w0 (a factor of s) and the competitor words w1, w2.
/// Throws std::invalid_argument for balanced input.
Prop31Words prop31_words(const PeriodicWord& s);

}  // namespace sturmian
