#include "sturmian/lyapunov.hpp"

#include "sturmian/bigfloat.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace sturmian {

namespace {

NormalizedPair require_balanced(const MatrixPair& pair, const char* what) {
    const PairAnalysis an = analyze(pair);
    if (!is_balanced_class(an.cls))
        throw std::invalid_argument(std::string(what) + " needs a balanced pair, got " + to_string(an.cls));
    return *an.normalized;
}

std::size_t count_zeros(const Word& w) { return w.size() - w.ones(); }

// sign of the unimodular rescaling of a word with these letter counts
int word_sign(const NormalizedPair& n, std::size_t zeros, std::size_t ones) {
    const bool neg = (n.sign_a < 0 && zeros % 2) != (n.sign_b < 0 && ones % 2);
    return neg ? -1 : 1;
}

long double log_hs_norm(const ScaledPair& sp, const Mat2Z& m, std::size_t zeros, std::size_t ones) {
    const Integer hs = m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d;
    return BigFloat(hs).log().to_long_double() / 2 - sp.log_scale(zeros, ones);
}

Rational ratio_of(const Integer& num, const Integer& den) {
    if (den == 0) throw std::logic_error("zero trace in a ratio");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

// ---- χ ------------------------------------------------------------------------------------

SlopeValue chi_rational(const MatrixPair& pair, const SlopeFraction& slope) {
    SlopeValue out;
    out.slope = slope;
    out.cycle = christoffel_cycle(slope);
    const ScaledPair sp(pair);
    const Mat2Z m = sp.product(out.cycle);
    const std::size_t ones = out.cycle.ones(), zeros = out.cycle.size() - ones;
    out.exact_radius = spectral_radius(sp.to_rational(m, zeros, ones));
    out.chi = sp.log_spectral_radius(m, zeros, ones) / static_cast<long double>(slope.den());
    return out;
}

std::vector<SlopeFraction> convergents(const Rational& alpha, std::uint64_t max_q) {
    if (alpha < 0 || alpha > 1) throw std::invalid_argument("slope must lie in [0, 1]");
    std::vector<SlopeFraction> out;
    Integer h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
    Rational x = alpha;
    while (true) {
        const Integer a = floor_of(x);
        const Integer h = a * h_prev + h_prev2, k = a * k_prev + k_prev2;
        if (k > max_q) break;
        out.emplace_back(h.get_ui(), k.get_ui());
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
        const Rational frac = x - Rational(a);
        if (frac == 0) break;
        x = 1 / frac;
    }
    return out;
}

ChiApproximation chi_irrational_approx(const MatrixPair& pair, const Rational& alpha, std::uint64_t max_q) {
    ChiApproximation out;
    out.convergents = convergents(alpha, max_q);
    for (const auto& c : out.convergents) out.values.push_back(chi_rational(pair, c).chi);
    out.value = out.values.back();
    if (out.convergents.back().value() == alpha) {
        out.error_bound = 0;
    } else if (out.values.size() >= 2) {
        out.error_bound = std::fabs(out.values.back() - out.values[out.values.size() - 2]);
    } else {
        out.error_bound = std::fabs(out.value) + 1;
    }
    return out;
}

// ---- JSR ------------------------------------------------------------------------------------

JsrBounds jsr_bounds(const MatrixPair& pair, std::size_t depth) {
    if (depth < 1 || depth > 16) throw std::invalid_argument("jsr depth must be in [1, 16]");
    const ScaledPair sp(pair);
    struct Node {
        Word w;
        Mat2Z m;
        std::size_t zeros, ones;
    };
    JsrBounds out;
    out.depth = depth;
    long double best_lower = -std::numeric_limits<long double>::infinity();
    std::vector<long double> max_log_norm(depth + 1, -std::numeric_limits<long double>::infinity());
    long double best_upper = -std::numeric_limits<long double>::infinity();

    std::vector<Node> level{{Word(), Mat2Z{}, 0, 0}};
    for (std::size_t len = 1; len <= depth; ++len) {
        std::vector<Node> next;
        next.reserve(level.size() * 2);
        for (const Node& node : level) {
            for (int letter : {0, 1}) {
                Node child{node.w, node.m * sp.generator(letter), node.zeros + (letter == 0), node.ones + (letter == 1)};
                child.w.push_back(letter);
                const long double lr = sp.log_spectral_radius(child.m, child.zeros, child.ones) / len;
                // ties (e.g. powers of the same cycle) keep the earlier, shorter word
                if (out.argmax_word.empty() || lr > best_lower + 1e-15L * std::max(1.0L, std::fabs(best_lower))) {
                    best_lower = lr;
                    out.argmax_word = child.w;
                }
                const long double ln = log_hs_norm(sp, child.m, child.zeros, child.ones);
                if (ln > max_log_norm[len]) max_log_norm[len] = ln;
                if (len == depth && ln > best_upper) {
                    best_upper = ln;
                    out.upper_word = child.w;
                }
                next.push_back(std::move(child));
            }
        }
        level = std::move(next);
    }
    out.lower = std::exp(best_lower);
    out.upper = std::exp(best_upper / depth);
    long double c = -std::numeric_limits<long double>::infinity();
    for (std::size_t len = 1; len <= depth; ++len) c = std::max(c, max_log_norm[len] - len * best_lower);
    out.c_hat = std::exp(c);
    return out;
}

// ---- trace maximization ----------------------------------------------------------------------

TraceTable trace_argmax(const MatrixPair& pair, std::size_t l, std::size_t n) {
    if (l > n) throw std::invalid_argument("trace_argmax needs l ≤ n");
    if (n > 24) throw std::invalid_argument("trace_argmax enumerates at most n = 24");
    const ScaledPair sp(pair);
    const Rational scale = sp.scale(n - l, l);
    TraceTable table;
    table.l = l;
    table.n = n;
    std::vector<Integer> raw;
    Word w;
    std::function<void(const Mat2Z&, std::size_t)> walk = [&](const Mat2Z& m, std::size_t ones) {
        const std::size_t len = w.size();
        if (len == n) {
            table.entries.push_back({w, Rational(0), n == 0 || cyclic_is_balanced(w), false});
            raw.push_back(m.trace());
            return;
        }
        const std::size_t remaining = n - len;
        if (remaining > l - ones) {
            w.push_back(0);
            walk(m * sp.generator(0), ones);
            w = w.slice(0, len);
        }
        if (ones < l) {
            w.push_back(1);
            walk(m * sp.generator(1), ones + 1);
            w = w.slice(0, len);
        }
    };
    walk(Mat2Z{}, 0);

    Integer best = raw.front();
    for (const auto& t : raw)
        if (t > best) best = t;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        table.entries[i].trace = scale * Rational(raw[i]);
        if (raw[i] == best) {
            table.entries[i].maximizer = true;
            table.maximizers.push_back(table.entries[i].word);
        }
    }
    table.max_trace = scale * Rational(best);
    return table;
}

// ---- identities ---------------------------------------------------------------------------------

JsIdentity js_identity_check(const Mat2Q& U, const Mat2Q& V, int p, int q, int m) {
    if (p < 1 || q < 1 || m < 0) throw std::invalid_argument("need p, q ≥ 1 and m ≥ 0");
    if (U.det() != 1 || V.det() != 1) throw std::invalid_argument("U and V must be unimodular");
    if (sgn(U.trace()) <= 0 || sgn(V.trace()) <= 0) throw std::invalid_argument("U and V need positive traces");
    const PairClass cls = classify(MatrixPair{U, V});
    if (!is_balanced_class(cls)) throw std::invalid_argument("(U, V) is not balanced: " + to_string(cls));

    const auto up = static_cast<unsigned>(p), uq = static_cast<unsigned>(q), um = static_cast<unsigned>(m);
    JsIdentity r;
    r.X = U * V;
    r.Xt = V * U;
    r.Y = V.pow(uq) * r.X.pow(um) * U.pow(up);
    r.Yt = U.pow(up) * r.Xt.pow(um) * V.pow(uq);
    r.W0 = r.X * r.Y * r.X;
    r.W1 = r.Xt * r.Y * r.Xt;
    r.W2 = r.X * r.Yt * r.X;
    r.eta = (r.X * (r.Yt - r.Y)).trace();
    r.t1 = (r.X * r.Y).trace();
    r.delta = gamma(r.X, um + 1) * gamma(U, up) * gamma(V, uq) - gamma(r.X, um) * gamma(U, up - 1) * gamma(V, uq - 1);
    r.t2 = r.delta;
    r.w1_identity = r.W1 - r.W0 == r.eta * r.Xt + r.t1 * (r.Xt - r.X);
    r.w2_identity = r.W2 - r.W0 == r.eta * r.X + r.t2 * (r.X - r.Xt);
    r.y_identity = r.Yt - r.Y == r.delta * (r.X - r.Xt);
    return r;
}

std::vector<Word> all_words_up_to(std::size_t max_len) {
    std::vector<Word> out{Word()};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (int letter : {0, 1}) {
                Word w = out[i];
                w.push_back(letter);
                out.push_back(std::move(w));
            }
        begin = end;
    }
    return out;
}

Prop31Certificate prop31_certificate(const MatrixPair& pair, const PeriodicWord& s, const std::vector<Word>& z_samples) {
    require_balanced(pair, "prop31_certificate");
    Prop31Certificate out;
    out.words = prop31_words(s);
    const ScaledPair sp(pair);
    const Mat2Z W0 = sp.product(out.words.w0), W1 = sp.product(out.words.w1), W2 = sp.product(out.words.w2);
    bool first = true;
    for (const Word& z : z_samples) {
        const Mat2Z Z = sp.product(z);
        const Integer t0 = (W0 * Z).trace(), t1 = (W1 * Z).trace(), t2 = (W2 * Z).trace();
        const Rational ratio = ratio_of(t1 > t2 ? t1 : t2, t0);
        if (ratio <= 1)
            throw std::logic_error("trace inequality violated at z = '" + z.str() + "'");
        if (first || ratio < out.xi_hat) {
            out.xi_hat = ratio;
            out.argmin_z = z;
            first = false;
        }
        ++out.samples;
    }
    if (first) throw std::invalid_argument("prop31_certificate needs at least one sample");
    return out;
}

Amplification trace_amplify(const MatrixPair& pair, const PeriodicWord& s, std::size_t n) {
    if (n < 1) throw std::invalid_argument("trace_amplify needs n ≥ 1");
    if (!s.preperiod.empty()) throw std::invalid_argument("trace_amplify needs a purely periodic word");
    require_balanced(pair, "trace_amplify");
    Amplification out;
    out.words = prop31_words(s);
    const Word& w0 = out.words.w0;
    const std::size_t period = s.cycle.size();
    out.offset = s.prefix(period + w0.size()).find(w0);
    if (out.offset == Word::npos) throw std::logic_error("w0 is not a factor of s");
    out.stride = period * ((w0.size() + period - 1) / period);
    const std::size_t total = out.offset + n * out.stride + w0.size();
    out.t = s.prefix(total).slice(out.offset, total - out.offset);
    const Word x = out.t.slice(w0.size(), out.stride - w0.size());

    const ScaledPair sp(pair);
    const Mat2Z X = sp.product(out.words.u + out.words.v), Xt = sp.product(out.words.v + out.words.u);
    Word prefix;  // u_k
    for (std::size_t k = 0; k < n; ++k) {
        Word suffix = x;  // v_k = x (w0 x)^{n-k-1} w0
        for (std::size_t j = k + 1; j < n; ++j) suffix += w0 + x;
        suffix += w0;
        const Mat2Z Z = sp.product(suffix + prefix);
        const int choice = (Xt * Z).trace() >= (X * Z).trace() ? 1 : 2;
        out.choices.push_back(choice);
        prefix += (choice == 1 ? out.words.w1 : out.words.w2) + x;
    }
    out.t_prime = prefix + w0;
    out.trace_t = sp.to_rational(sp.product(out.t), count_zeros(out.t), out.t.ones()).trace();
    out.trace_t_prime = sp.to_rational(sp.product(out.t_prime), count_zeros(out.t_prime), out.t_prime.ones()).trace();
    out.ratio = out.trace_t_prime / out.trace_t;
    return out;
}

// ---- trace vs norm -----------------------------------------------------------------------------------

bool in_h_n(const Word& x, std::size_t N) {
    if (x.size() < N) return false;
    for (int letter : {0, 1}) {
        const Word run = Word::repeat(letter, N);
        if (x.slice(0, N) == run || x.slice(x.size() - N, N) == run) return false;
    }
    return true;
}

TraceNormRatio trace_norm_ratio(const MatrixPair& pair, std::size_t N, std::size_t sample_len) {
    const PairAnalysis an = analyze(pair);
    if (!is_balanced_class(an.cls)) throw std::invalid_argument("trace_norm_ratio needs a balanced pair");
    const NormalizedPair& norm = *an.normalized;
    const bool restrict = an.cls != PairClass::CoParallel;
    const ScaledPair sp(pair);
    TraceNormRatio out;
    bool first = true;
    Word w;
    std::function<void(const Mat2Z&, std::size_t)> walk = [&](const Mat2Z& m, std::size_t ones) {
        const std::size_t len = w.size();
        if (len > 0) {
            if (restrict && !in_h_n(w, N)) {
                ++out.excluded;
            } else {
                const Integer hs = m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d;
                const long double r = (BigFloat(m.trace()) / BigFloat(hs).sqrt()).to_long_double() *
                                      word_sign(norm, len - ones, ones);
                if (first || r < out.delta_hat) {
                    out.delta_hat = r;
                    out.argmin = w;
                    first = false;
                }
                ++out.sampled;
            }
        }
        if (len == sample_len) return;
        for (int letter : {0, 1}) {
            w.push_back(letter);
            walk(m * sp.generator(letter), ones + letter);
            w = w.slice(0, len);
        }
    };
    walk(Mat2Z{}, 0);
    if (first) throw std::invalid_argument("no word of the requested lengths lies in H_N");
    if (!(out.delta_hat > 0)) throw std::logic_error("trace/norm ratio is not positive");
    return out;
}

}  // namespace sturmian
