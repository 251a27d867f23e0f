#include "sturmian/words.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sturmian {

Word::Word(std::string_view letters) : letters_(letters) {
    for (char ch : letters_)
        if (ch != '0' && ch != '1') throw std::invalid_argument("word letters must be 0 or 1: '" + letters_ + "'");
}

Word Word::repeat(int letter, std::size_t n) { return Word(std::string(n, letter ? '1' : '0'), Trusted{}); }

std::size_t Word::ones() const noexcept {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), '1'));
}

Word Word::reversed() const { return Word(std::string(letters_.rbegin(), letters_.rend()), Trusted{}); }

Word Word::rotated(std::size_t shift) const {
    if (letters_.empty()) return *this;
    shift %= letters_.size();
    return Word(letters_.substr(shift) + letters_.substr(0, shift), Trusted{});
}

Word Word::pow(std::size_t k) const {
    std::string out;
    out.reserve(letters_.size() * k);
    for (std::size_t i = 0; i < k; ++i) out += letters_;
    return Word(std::move(out), Trusted{});
}

PeriodicWord::PeriodicWord(Word pre, Word cyc) : preperiod(std::move(pre)), cycle(std::move(cyc)) {
    if (cycle.empty()) throw std::invalid_argument("periodic word needs a non-empty cycle");
}

int PeriodicWord::letter(std::size_t i) const {
    if (i < preperiod.size()) return preperiod[i];
    return cycle[(i - preperiod.size()) % cycle.size()];
}

Word PeriodicWord::prefix(std::size_t n) const {
    Word out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(letter(i));
    return out;
}

SlopeFraction::SlopeFraction(std::uint64_t num, std::uint64_t den) {
    if (den == 0 || num > den) throw std::invalid_argument("slope must satisfy 0 <= p <= q, q > 0");
    const std::uint64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

SlopeFraction SlopeFraction::parse(std::string_view text) {
    const auto slash = text.find('/');
    auto to_u64 = [&](std::string_view s) {
        if (s.empty() || s.size() > 19 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw std::invalid_argument("malformed slope: '" + std::string(text) + "'");
        return std::stoull(std::string(s));
    };
    if (slash == std::string_view::npos) return SlopeFraction(to_u64(text), 1);
    return SlopeFraction(to_u64(text.substr(0, slash)), to_u64(text.substr(slash + 1)));
}

std::string SlopeFraction::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

SlopeFraction mediant(const SlopeFraction& a, const SlopeFraction& b) {
    return SlopeFraction(a.num() + b.num(), a.den() + b.den());
}

bool farey_neighbors(const SlopeFraction& a, const SlopeFraction& b) {
    const __int128 d = static_cast<__int128>(a.num()) * b.den() - static_cast<__int128>(b.num()) * a.den();
    return d == 1 || d == -1;
}

namespace {

// Min/max 1-count over every factor of each length, from prefix sums of `letters`.
bool window_balanced(const std::string& letters, std::size_t max_len) {
    const std::size_t n = letters.size();
    std::vector<std::size_t> prefix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + (letters[i] == '1');
    max_len = std::min(max_len, n);
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t lo = len, hi = 0;
        for (std::size_t i = 0; i + len <= n; ++i) {
            const std::size_t c = prefix[i + len] - prefix[i];
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
        if (hi - lo > 1) return false;
    }
    return true;
}

}  // namespace

bool is_balanced(const Word& w) { return window_balanced(w.str(), w.size()); }

bool is_balanced(const PeriodicWord& x, std::size_t horizon) {
    if (horizon < 2 * x.cycle.size() + x.preperiod.size())
        throw std::invalid_argument("balance horizon must be at least 2|cycle| + |preperiod|");
    return window_balanced(x.prefix(horizon).str(), horizon);
}

std::optional<Word> unbalance_witness(const Word& w) {
    const std::string& s = w.str();
    const std::size_t n = s.size();
    for (std::size_t k = 0; k + 2 <= n; ++k) {
        std::set<std::string> zero_framed;
        for (std::size_t i = 0; i + k + 2 <= n; ++i)
            if (s[i] == '0' && s[i + k + 1] == '0') zero_framed.insert(s.substr(i + 1, k));
        std::optional<std::string> best;
        for (std::size_t i = 0; i + k + 2 <= n; ++i) {
            if (s[i] != '1' || s[i + k + 1] != '1') continue;
            std::string mid = s.substr(i + 1, k);
            if (zero_framed.count(mid) && (!best || mid < *best)) best = std::move(mid);
        }
        if (best) return Word(*best);
    }
    return std::nullopt;
}

std::optional<Word> unbalance_witness(const PeriodicWord& x) { return unbalance_witness(x.prefix(x.default_horizon())); }

Word mechanical_word(const SlopeFraction& alpha, std::size_t n) {
    Word out;
    const unsigned __int128 p = alpha.num(), q = alpha.den();
    unsigned __int128 prev = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        const unsigned __int128 cur = (static_cast<unsigned __int128>(k) * p) / q;
        out.push_back(static_cast<int>(cur - prev));
        prev = cur;
    }
    return out;
}

Word mechanical_word(const Rational& alpha, std::size_t n) {
    if (sgn(alpha) < 0 || alpha > 1) throw std::invalid_argument("slope must lie in [0, 1]");
    Word out;
    Integer prev = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        Integer cur = floor_of(alpha * static_cast<unsigned long>(k));
        out.push_back(static_cast<int>(Integer(cur - prev).get_si()));
        prev = cur;
    }
    return out;
}

Word christoffel_cycle(const SlopeFraction& slope) { return mechanical_word(slope, slope.den()); }

bool cyclic_is_balanced(const Word& x) {
    if (x.empty()) throw std::invalid_argument("cyclic balance needs a non-empty word");
    // A factor of x^∞ of length k|x| + r carries k·|x|_1 plus a length-r cyclic factor,
    // so lengths up to |x| inside a 2|x| window decide the question.
    return window_balanced(x.pow(2).str(), x.size());
}

Rational sturmian_deviation(const Word& w, const SlopeFraction& alpha) {
    // |ones·q − len·p| / q in integers
    const auto p = static_cast<__int128>(alpha.num()), q = static_cast<__int128>(alpha.den());
    __int128 best = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        __int128 ones = 0;
        for (std::size_t j = i; j < w.size(); ++j) {
            ones += w[j];
            __int128 dev = ones * q - static_cast<__int128>(j - i + 1) * p;
            if (dev < 0) dev = -dev;
            if (dev > best) best = dev;
        }
    }
    Rational out(Integer(std::to_string(static_cast<long long>(best))), Integer(std::to_string(static_cast<long long>(q))));
    out.canonicalize();
    return out;
}

// ---- alphabet reduction ---------------------------------------------------

namespace {

using Tokens = std::vector<bool>;  // false = u, true = v

bool has_cyclic_square(const Tokens& z, bool symbol) {
    const std::size_t n = z.size();
    for (std::size_t i = 0; i < n; ++i)
        if (z[i] == symbol && z[(i + 1) % n] == symbol) return true;
    return false;
}

Word expand(const Tokens& tokens, const Word& u, const Word& v) {
    Word out;
    for (bool t : tokens) out += t ? v : u;
    return out;
}

// Parses a token string over {a, b} into tokens over {a, ba} (a → false, ba → true).
// Every b must be immediately followed by an a inside the string.
Tokens retokenize(const Tokens& z, bool a) {
    Tokens out;
    for (std::size_t i = 0; i < z.size();) {
        if (z[i] == a) {
            out.push_back(false);
            ++i;
        } else {
            if (i + 1 >= z.size() || z[i + 1] != a) throw std::logic_error("alphabet reduction: b not followed by a");
            out.push_back(true);
            i += 2;
        }
    }
    return out;
}

}  // namespace

AlphabetReduction alphabet_reduce(const PeriodicWord& s) {
    if (!s.preperiod.empty()) throw std::invalid_argument("alphabet reduction needs a purely periodic word");
    if (cyclic_is_balanced(s.cycle)) throw std::invalid_argument("alphabet reduction needs an unbalanced word");

    // Some rotation of the cycle is already unbalanced as a finite word.
    Word start;
    std::optional<Word> witness;
    for (std::size_t r = 0; r < s.cycle.size() && !witness; ++r) {
        start = s.cycle.rotated(r);
        witness = unbalance_witness(start);
    }
    if (!witness) throw std::logic_error("alphabet reduction: no unbalanced rotation found");

    AlphabetReduction out;
    out.u = Word("0");
    out.v = Word("1");
    Tokens z, w;
    for (std::size_t i = 0; i < start.size(); ++i) z.push_back(start[i] == 1);
    for (std::size_t i = 0; i < witness->size(); ++i) w.push_back((*witness)[i] == 1);

    for (;;) {
        const bool has_vv = has_cyclic_square(z, true);
        const bool has_uu = has_cyclic_square(z, false);
        if (has_vv && has_uu) break;
        const bool a = has_vv;  // a = u unless vv occurs (then uu is the absent square)
        const Word& a_word = a ? out.v : out.u;
        const Word& b_word = a ? out.u : out.v;
        out.steps.push_back({out.u, out.v, expand(w, out.u, out.v), a});

        if (w.empty() || w.front() != a) throw std::logic_error("alphabet reduction: witness does not start with a");
        if (z.front() == a) std::rotate(z.begin(), z.begin() + 1, z.end());
        Tokens w_rest(w.begin() + 1, w.end());
        Tokens next_z = retokenize(z, a);
        Tokens next_w = retokenize(w_rest, a);
        Word next_u = a_word;
        Word next_v = b_word + a_word;
        out.u = std::move(next_u);
        out.v = std::move(next_v);
        z = std::move(next_z);
        w = std::move(next_w);
        ++out.iterations;
    }
    out.tokens = z;
    out.rotation = expand(z, out.u, out.v);
    out.witness = expand(w, out.u, out.v);
    return out;
}

namespace {

struct PatternMatch {
    std::size_t start;
    int p, q, m;
    std::size_t binary_length;
};

// Finds a occurrence of  a b^{q+1} (ab)^m a^{p+1} b  in the cyclic token word z^∞
// of least binary length (earliest start on ties).
std::optional<PatternMatch> find_pattern(const Tokens& z, bool a, std::size_t len_a, std::size_t len_b) {
    const std::size_t n = z.size();
    const bool b = !a;
    auto at = [&](std::size_t i) { return z[i % n]; };
    auto run = [&](std::size_t i, bool sym) {
        std::size_t r = 0;
        while (r <= n && at(i + r) == sym) ++r;
        return r;
    };
    std::optional<PatternMatch> best;
    for (std::size_t start = 0; start < n; ++start) {
        if (at(start) != a) continue;
        std::size_t i = start + 1;
        const std::size_t rb = run(i, b);
        if (rb < 2 || rb > n) continue;
        i += rb;
        int m = 0;
        bool matched = false;
        int p = 0;
        while (i < start + 3 * n + 3) {
            const std::size_t ra = run(i, a);
            if (ra == 0 || ra > n) break;
            if (ra >= 2) {
                p = static_cast<int>(ra) - 1;
                matched = true;
                break;
            }
            // single a: must be followed by a single b to extend (ab)^m
            if (run(i + 1, b) != 1) break;
            ++m;
            i += 2;
        }
        if (!matched) continue;
        const int q = static_cast<int>(rb) - 1;
        const std::size_t count_a = 1 + static_cast<std::size_t>(m) + static_cast<std::size_t>(p) + 1;
        const std::size_t count_b = static_cast<std::size_t>(q) + 1 + static_cast<std::size_t>(m) + 1;
        const std::size_t length = count_a * len_a + count_b * len_b;
        if (!best || length < best->binary_length) best = PatternMatch{start, p, q, m, length};
    }
    return best;
}

}  // namespace

Prop31Words prop31_words(const PeriodicWord& s) {
    Prop31Words out;
    out.reduction = alphabet_reduce(s);
    const auto& red = out.reduction;

    auto match = find_pattern(red.tokens, false, red.u.size(), red.v.size());
    Word u = red.u, v = red.v;
    if (!match) {
        match = find_pattern(red.tokens, true, red.v.size(), red.u.size());
        if (!match) throw std::logic_error("prop31_words: no w0 pattern in a reduced recurrent word");
        out.mirrored = true;
        std::swap(u, v);
    }
    const int p = match->p, q = match->q, m = match->m;
    const Word uv = u + v, vu = v + u;
    out.w0 = u + v.pow(q + 1) + uv.pow(m) + u.pow(p + 1) + v;
    out.w1 = v + u + v.pow(q) + uv.pow(m) + u.pow(p) + v + u;
    out.w2 = u + v + u.pow(p) + vu.pow(m) + v.pow(q) + u + v;
    out.u = u;
    out.v = v;
    out.p = p;
    out.q = q;
    out.m = m;
    return out;
}

}  // namespace sturmian
