#include "sturmian/verify.hpp"

#include "sturmian/random_pairs.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace sturmian {

MatrixPair golden_pair() { return {make_parabolic(1), make_parabolic_transpose(1)}; }

Json to_json(const SuiteReport& r) {
    return {{"name", r.name},         {"passed", r.passed()},   {"checks", r.checks},
            {"failures", r.failures}, {"messages", r.messages}, {"details", r.details}};
}

namespace {

SuiteReport named(std::string name) {
    SuiteReport r;
    r.name = std::move(name);
    return r;
}

std::string pair_str(const MatrixPair& p) { return "(" + p.A.str() + ", " + p.B.str() + ")"; }

// Runs body and turns an escaping exception into a recorded failure.
template <class Body>
void guarded(SuiteReport& r, const std::string& what, Body&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        r.check(false, [&] { return what + ": " + e.what(); });
    }
}

Json tag_counts(const std::map<char, std::size_t>& counts) {
    Json out = Json::object();
    for (const auto& [tag, n] : counts) out[std::string(1, tag)] = n;
    return out;
}

std::vector<Word> words_of_length(std::size_t n) {
    std::vector<Word> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        Word w;
        for (std::size_t i = 0; i < n; ++i) w.push_back(static_cast<int>((bits >> (n - 1 - i)) & 1));
        out.push_back(std::move(w));
    }
    return out;
}

// 0w0 and 1w1 both occur in x
bool witnesses(const Word& x, const Word& w) {
    return x.contains(Word("0") + w + Word("0")) && x.contains(Word("1") + w + Word("1"));
}

}  // namespace

// ---- trace maximizers ------------------------------------------------------------------------

SuiteReport suite_trace_oracle(std::uint64_t seed, std::size_t pairs, std::size_t max_n) {
    SuiteReport r = named("trace-oracle");
    PairGenerator gen(seed);
    std::map<char, std::size_t> tags;
    for (std::size_t i = 0; i < pairs; ++i) {
        const GeneratedPair g = gen.balanced();
        ++tags[g.tag];
        guarded(r, pair_str(g.pair), [&] {
            for (std::size_t n = 1; n <= max_n; ++n)
                for (std::size_t l = 0; l <= n; ++l) {
                    const TraceTable t = trace_argmax(g.pair, l, n);
                    std::vector<Word> expected;
                    for (const TraceEntry& e : t.entries)
                        if (e.cyclic_balanced) expected.push_back(e.word);
                    r.check(t.maximizers == expected, [&] {
                        return "pair " + std::to_string(i) + " (" + g.tag + "), l=" + std::to_string(l) +
                               ", n=" + std::to_string(n) + ": maximizers differ from the balanced words";
                    });
                }
        });
    }
    r.details = {{"pairs", pairs}, {"max_n", max_n}, {"archetypes", tag_counts(tags)}};
    return r;
}

SuiteReport suite_trace_identities(std::uint64_t seed, std::size_t pairs, int max_pq, int max_m) {
    SuiteReport r = named("trace-identities");
    auto run = [&](const Mat2Q& U, const Mat2Q& V, const std::string& label) {
        for (int p = 1; p <= max_pq; ++p)
            for (int q = 1; q <= max_pq; ++q)
                for (int m = 0; m <= max_m; ++m) {
                    const JsIdentity j = js_identity_check(U, V, p, q, m);
                    const bool ok = sgn(j.eta) > 0 && j.t1 > 2 && sgn(j.delta) > 0 && j.all();
                    r.check(ok, [&] {
                        return label + " p=" + std::to_string(p) + " q=" + std::to_string(q) + " m=" + std::to_string(m) +
                               ": eta=" + to_string(j.eta) + " t1=" + to_string(j.t1) + " delta=" + to_string(j.delta) +
                               " identities=" + std::to_string(j.w1_identity) + std::to_string(j.w2_identity) +
                               std::to_string(j.y_identity);
                    });
                }
    };

    const MatrixPair P = golden_pair();
    guarded(r, "golden pair", [&] {
        const JsIdentity j = js_identity_check(P.A, P.B, 1, 1, 0);
        r.check(j.eta == 1 && j.t1 == 6 && j.delta == 1 && j.all(), [&] {
            return "worked instance: eta=" + to_string(j.eta) + " t1=" + to_string(j.t1) + " delta=" + to_string(j.delta);
        });
        run(P.A, P.B, "golden");
    });

    PairGenerator gen(seed);
    std::map<char, std::size_t> tags;
    for (std::size_t i = 0; i < pairs; ++i) {
        const GeneratedPair g = gen.balanced();
        ++tags[g.tag];
        const std::string label = "pair " + std::to_string(i) + " (" + g.tag + ")";
        guarded(r, label, [&] {
            const auto n = std::get<NormalizedPair>(normalize_to_unimodular(g.pair));
            r.check(n.A_exact && n.B_exact, [&] { return label + ": determinants are not rational squares"; });
            if (n.A_exact && n.B_exact) run(*n.A_exact, *n.B_exact, label);
        });
    }
    r.details = {{"pairs", pairs}, {"max_pq", max_pq}, {"max_m", max_m}, {"archetypes", tag_counts(tags)}};
    return r;
}

SuiteReport suite_crossing(std::uint64_t seed, std::size_t pairs) {
    SuiteReport r = named("crossing");
    guarded(r, "golden pair", [&] {
        const BalancedPairReport b = balanced_pair_checks(golden_pair());
        r.check(b.all() && b.trace_abab == 7 && b.trace_aabb == 6, [&] {
            return "golden pair: tr((AB)^2)=" + to_string(b.trace_abab) + ", tr(A^2B^2)=" + to_string(b.trace_aabb);
        });
    });
    PairGenerator gen(seed);
    for (std::size_t i = 0; i < pairs; ++i) {
        const GeneratedPair g = gen.balanced();
        guarded(r, "balanced pair " + std::to_string(i), [&] {
            const BalancedPairReport b = balanced_pair_checks(g.pair);
            r.check(b.all(), [&] {
                return "balanced pair " + std::to_string(i) + " (" + g.tag + "): words_in_a=" +
                       std::to_string(b.words_in_a) + " sub_pairs=" + std::to_string(b.sub_pairs_balanced) +
                       " ab_ba_crossing=" + std::to_string(b.ab_ba_crossing) +
                       " trace_inequality=" + std::to_string(b.trace_inequality);
            });
        });
    }
    // the class of (AB, BA) for a crossing pair is recorded, not asserted
    std::map<std::string, std::size_t> product_classes;
    for (std::size_t i = 0; i < pairs; ++i) {
        const GeneratedPair g = gen.crossing();
        guarded(r, "crossing pair " + std::to_string(i), [&] {
            const PairClass c0 = classify(g.pair);
            r.check(c0 == PairClass::Crossing,
                    [&] { return "crossing pair " + std::to_string(i) + " classified " + to_string(c0); });
            ++product_classes[to_string(classify({g.pair.A * g.pair.B, g.pair.B * g.pair.A}))];
        });
    }
    r.details = {{"balanced_pairs", pairs}, {"crossing_pairs", pairs}, {"crossing_product_classes", product_classes}};
    return r;
}

// ---- slope function ----------------------------------------------------------------------------

SuiteReport suite_concavity(std::uint64_t seed, std::size_t pairs, std::uint64_t limit) {
    SuiteReport r = named("concavity");
    PairGenerator gen(seed);
    const auto brackets = farey_pairs(limit);
    long double min_margin = INFINITY;
    for (std::size_t i = 0; i < pairs; ++i) {
        const GeneratedPair g = gen.balanced();
        guarded(r, "pair " + std::to_string(i), [&] {
            SlopeEvaluator f(g.pair);
            for (const auto& [lo, hi] : brackets) {
                const ConcavityProbe c = concavity_probe(f, lo, hi);
                min_margin = std::min(min_margin, c.f_mediant - c.chord);
                r.check(c.holds, [&] {
                    return "pair " + std::to_string(i) + " (" + g.tag + "): bracket " + lo.str() + ", " + hi.str() +
                           " mediant " + format_double(static_cast<double>(c.f_mediant)) + " < chord " +
                           format_double(static_cast<double>(c.chord));
                });
            }
        });
    }
    r.details = {{"pairs", pairs}, {"limit", limit}, {"brackets", brackets.size()}, {"min_margin", float_json(min_margin)}};
    return r;
}

SuiteReport suite_solver(std::uint64_t seed, std::size_t pairs) {
    SuiteReport r = named("solver");
    PairGenerator gen(seed);
    std::vector<MatrixPair> sample{golden_pair()};
    for (std::size_t i = 0; i < pairs; ++i) sample.push_back(gen.balanced().pair);
    for (std::size_t i = 0; i < sample.size(); ++i) {
        guarded(r, "pair " + std::to_string(i), [&] {
            SlopeEvaluator f(sample[i]);
            for (const std::uint64_t max_den : {30u, 200u}) {
                const SolveResult s = maximize_slope(f, max_den);
                const std::uint64_t limit = std::min<std::uint64_t>(s.tau_hat.den() + 5, max_den);
                r.check(s.certified && local_optimality_check(f, s.tau_hat, limit), [&] {
                    return "pair " + std::to_string(i) + ": tau=" + s.tau_hat.str() + " beaten below denominator " +
                           std::to_string(limit);
                });
            }
            // exhaustive at a small order
            const SolveResult s = maximize_slope(f, 30);
            r.check(local_optimality_check(f, s.tau_hat, 30),
                    [&] { return "pair " + std::to_string(i) + ": not the maximum over denominators <= 30"; });

            // f(1/(n+1)) → f(0/1): the gap shrinks, up to 1e-3, over n = 10..50
            const long double f0 = f(SlopeFraction(0, 1));
            long double prev = INFINITY;
            bool settles = true;
            for (std::uint64_t n = 10; n <= 50; ++n) {
                const long double gap = std::fabs(f(SlopeFraction(1, n + 1)) - f0);
                settles = settles && gap <= prev + 1e-3L;
                prev = gap;
            }
            r.check(settles, [&] { return "pair " + std::to_string(i) + ": f(1/(n+1)) does not settle towards f(0)"; });
        });
    }
    guarded(r, "small t", [&] {
        const MatrixPair P = golden_pair();
        SlopeEvaluator f({P.A, Rational(1, 100) * P.B});
        const SolveResult s = maximize_slope(f, 100);
        bool decreasing = true;
        for (std::uint64_t q = 11; q <= 20; ++q) decreasing = decreasing && f(SlopeFraction(1, q)) > f(SlopeFraction(1, q - 1)) - 1e-15L;
        // past the bracket towards 1/10 the function keeps falling
        r.check(s.tau_hat <= SlopeFraction(1, 10), [&] { return "(P1, P1t/100): tau=" + s.tau_hat.str() + " > 1/10"; });
        r.check(f(SlopeFraction(1, 10)) < f(s.tau_hat), [&] { return "(P1, P1t/100): f(1/10) not below f(tau)"; });
        r.details["small_t_tau"] = s.tau_hat.str();
        r.details["small_t_f_increasing_towards_0"] = decreasing;
    });
    r.details["pairs"] = sample.size();
    return r;
}

SuiteReport suite_jsr(std::uint64_t seed, std::size_t pairs) {
    SuiteReport r = named("jsr");
    PairGenerator gen(seed);
    std::vector<MatrixPair> sample{golden_pair()};
    for (std::size_t i = 0; i < pairs; ++i) sample.push_back(gen.balanced().pair);
    const std::size_t depth = 10;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        guarded(r, "pair " + std::to_string(i), [&] {
            const JsrBounds j = jsr_bounds(sample[i], depth);
            const SolveResult s = maximize_slope(sample[i], depth);
            const long double sturmian = std::exp(chi_rational(sample[i], s.tau_hat).chi);
            const long double slack = 1e-9L * std::max(1.0L, sturmian);
            r.check(j.lower >= sturmian - slack, [&] {
                return "pair " + std::to_string(i) + ": lower " + format_double(static_cast<double>(j.lower)) +
                       " < exp(chi(tau)) " + format_double(static_cast<double>(sturmian));
            });
            // Sturmian words already realize the best periodic rate among short words
            r.check(j.lower <= sturmian + slack, [&] {
                return "pair " + std::to_string(i) + ": word " + j.argmax_word.str() + " beats the Sturmian slope " +
                       s.tau_hat.str();
            });
            r.check(j.upper >= j.lower, [&] { return "pair " + std::to_string(i) + ": upper < lower"; });
        });
    }
    r.details = {{"pairs", sample.size()}, {"depth", depth}};
    return r;
}

SuiteReport suite_sweep(unsigned workers) {
    SuiteReport r = named("sweep");
    const MatrixPair P = golden_pair();
    const std::uint64_t max_den = 1000;
    guarded(r, "sweep", [&] {
        const auto start = std::chrono::steady_clock::now();
        const std::vector<Rational> grid = geometric_grid(0.05, 20, 100);
        const std::vector<SweepRecord> recs = sweep_family(P.A, P.B, grid, max_den, workers);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        const Rational resolution(1, static_cast<unsigned long>(max_den));
        for (std::size_t k = 1; k < recs.size(); ++k)
            r.check(recs[k].tau.value() >= recs[k - 1].tau.value() - resolution, [&] {
                return "tau drops from " + recs[k - 1].tau.str() + " to " + recs[k].tau.str() + " at t=" + to_string(recs[k].t);
            });

        const SolveResult at_one = maximize_slope(P, max_den);
        r.check(at_one.tau_hat == SlopeFraction(1, 2), [&] { return "tau(1) = " + at_one.tau_hat.str(); });

        std::vector<Rational> inverse;
        for (const Rational& t : grid) inverse.push_back(1 / t);
        const std::vector<SweepRecord> inv = sweep_family(P.A, P.B, inverse, max_den, workers);
        for (std::size_t k = 0; k < recs.size(); ++k) {
            const double sum = recs[k].tau.to_double() + inv[k].tau.to_double();
            r.check(std::fabs(sum - 1) <= 1e-9, [&] {
                return "tau(t) + tau(1/t) = " + format_double(sum) + " at t=" + to_string(recs[k].t);
            });
        }

        auto max_jump = [&](std::size_t n) {
            const auto rs = sweep_family(P.A, P.B, geometric_grid(0.05, 20, n), max_den, workers);
            double jump = 0;
            for (std::size_t k = 1; k < rs.size(); ++k)
                jump = std::max(jump, std::fabs(rs[k].tau.to_double() - rs[k - 1].tau.to_double()));
            return jump;
        };
        const double coarse = max_jump(200), fine = max_jump(400);
        r.check(fine <= coarse, [&] { return "refining the grid does not shrink the largest jump"; });
        r.check(seconds < 120, [&] { return "100-point sweep took " + format_double(seconds) + " s"; });

        r.details = {{"points", recs.size()},
                     {"tau_first", recs.front().tau.str()},
                     {"tau_last", recs.back().tau.str()},
                     {"plateaus", locking_plateaus(recs).size()},
                     {"max_jump_200", coarse},
                     {"max_jump_400", fine}};
    });
    return r;
}

// ---- classification ------------------------------------------------------------------------------

SuiteReport suite_roundtrip(std::uint64_t seed, std::size_t trials) {
    SuiteReport r = named("classifier-roundtrip");
    PairGenerator gen(seed);
    std::map<char, std::size_t> tags;
    std::size_t normal_forms = 0, normal_forms_verified = 0;
    for (std::size_t i = 0; i < trials; ++i) {
        const GeneratedPair g = gen.balanced();
        ++tags[g.tag];
        guarded(r, "trial " + std::to_string(i), [&] {
            const PairAnalysis a = analyze(g.pair);
            r.check(a.cls == g.expected, [&] {
                return "trial " + std::to_string(i) + ": expected " + to_string(g.expected) + ", got " + to_string(a.cls) +
                       " for " + pair_str(g.pair);
            });
            if (a.mixed_dual_agrees)
                r.check(*a.mixed_dual_agrees, [&] { return "trial " + std::to_string(i) + ": mixed direction tests disagree"; });
            if (i % 10 == 0) {
                ++normal_forms;
                const NormalForm nf = normal_form_conjugator(g.pair);
                if (nf.verified && nf.tag == g.tag) ++normal_forms_verified;
            }
        });
    }
    for (std::size_t i = 0; i < trials / 10; ++i) {
        const GeneratedPair g = gen.crossing();
        ++tags['x'];
        guarded(r, "crossing " + std::to_string(i), [&] {
            const PairClass c = classify(g.pair);
            r.check(c == PairClass::Crossing, [&] { return "crossing " + std::to_string(i) + ": got " + to_string(c); });
        });
    }
    r.details = {{"trials", trials},
                 {"archetypes", tag_counts(tags)},
                 {"normal_forms_sampled", normal_forms},
                 {"normal_forms_verified", normal_forms_verified}};
    return r;
}

SuiteReport suite_cones(std::uint64_t seed, std::size_t pairs) {
    SuiteReport r = named("cones");
    PairGenerator gen(seed);
    std::vector<GeneratedPair> sample{{golden_pair(), PairClass::ParabolicPair, 'p'}};
    for (std::size_t i = 0; i < pairs; ++i) sample.push_back(gen.balanced());
    for (std::size_t i = 0; i < sample.size(); ++i)
        guarded(r, "pair " + std::to_string(i), [&] {
            r.check(cone_invariance(sample[i].pair, 6), [&] {
                return "pair " + std::to_string(i) + " (" + sample[i].tag + "): a word moves the cone out of itself";
            });
        });
    r.details = {{"pairs", sample.size()}, {"max_len", 6}};
    return r;
}

// ---- words -----------------------------------------------------------------------------------------

SuiteReport suite_words() {
    SuiteReport r = named("words");
    std::size_t slopes = 0;
    for (std::uint64_t q = 1; q <= 64; ++q)
        for (std::uint64_t p = 0; p <= q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            ++slopes;
            const SlopeFraction a(p, q);
            // balance is hereditary, so one check covers every factor of every shorter prefix
            r.check(is_balanced(mechanical_word(a, 64)), [&] { return "mechanical word " + a.str() + " unbalanced"; });
            r.check(sturmian_deviation(mechanical_word(a, 256), a) < 1,
                    [&] { return "deviation of the mechanical word " + a.str() + " reaches 1"; });
            const Word c = christoffel_cycle(a);
            bool rotations = true;
            for (std::size_t k = 0; k < c.size(); ++k) rotations = rotations && cyclic_is_balanced(c.rotated(k));
            r.check(rotations, [&] { return "a rotation of the Christoffel cycle of " + a.str() + " is not cyclically balanced"; });
        }

    std::size_t unbalanced = 0;
    for (std::size_t n = 0; n <= 14; ++n)
        for (const Word& x : words_of_length(n)) {
            const auto w = unbalance_witness(x);
            const bool bal = is_balanced(x);
            if (!bal) ++unbalanced;
            r.check(bal != w.has_value() && (!w || witnesses(x, *w)),
                    [&] { return "witness mismatch on '" + x.str() + "'"; });
        }

    std::size_t periodic = 0;
    for (std::size_t n = 1; n <= 12; ++n)
        for (const Word& x : words_of_length(n)) {
            if (cyclic_is_balanced(x)) continue;
            ++periodic;
            guarded(r, "cycle '" + x.str() + "'", [&] {
                const Prop31Words w = prop31_words(PeriodicWord::of_cycle(x));
                const bool lengths = w.w0.size() == w.w1.size() && w.w0.size() == w.w2.size();
                const bool ones = w.w0.ones() == w.w1.ones() && w.w0.ones() == w.w2.ones();
                const Word window = PeriodicWord::of_cycle(x).prefix(x.size() + w.w0.size());
                r.check(lengths && ones && window.contains(w.w0), [&] {
                    return "cycle '" + x.str() + "': w0=" + w.w0.str() + " w1=" + w.w1.str() + " w2=" + w.w2.str();
                });
            });
        }
    r.details = {{"slopes", slopes}, {"unbalanced_words", unbalanced}, {"unbalanced_cycles", periodic}};
    return r;
}

SuiteReport suite_amplification(std::size_t max_n) {
    SuiteReport r = named("amplification");
    const MatrixPair P = golden_pair();
    const PeriodicWord s = PeriodicWord::of_cycle(Word("0011"));
    Json ratios = Json::array();
    guarded(r, "trace_amplify", [&] {
        Rational prev = 0;
        long double base = INFINITY;
        for (std::size_t n = 1; n <= max_n; ++n) {
            const Amplification a = trace_amplify(P, s, n);
            ratios.push_back(to_json(a.ratio));
            r.check(a.ratio > 1, [&] { return "n=" + std::to_string(n) + ": ratio " + to_string(a.ratio) + " <= 1"; });
            r.check(a.t.size() == a.t_prime.size() && a.t.ones() == a.t_prime.ones(),
                    [&] { return "n=" + std::to_string(n) + ": t and t' differ in length or weight"; });
            if (n > 1) base = std::min(base, to_long_double(a.ratio / prev));
            prev = a.ratio;
        }
        if (max_n > 1) {
            r.check(base > 1, [&] { return "ratios do not grow geometrically"; });
            r.details["growth_base"] = float_json(base);
        }
    });
    r.details["ratios"] = ratios;
    guarded(r, "prop31_certificate", [&] {
        const Prop31Certificate c = prop31_certificate(P, s, all_words_up_to(6));
        r.check(c.xi_hat > 1, [&] { return "xi_hat = " + to_string(c.xi_hat); });
        r.details["xi_hat"] = to_json(c.xi_hat);
        r.details["xi_argmin"] = c.argmin_z.str();
        r.details["samples"] = c.samples;
    });
    return r;
}

// ---- matrices -----------------------------------------------------------------------------------

SuiteReport suite_matrix_identities(std::uint64_t seed) {
    SuiteReport r = named("matrix-identities");
    PairGenerator gen(seed);
    const Mat2Q I = Mat2Q::identity();
    for (int i = 0; i < 200; ++i) {
        const Mat2Q X = gen.unimodular(100), Y = gen.unimodular(100);
        r.check(X + X.inverse() == X.trace() * I, [&] { return "X + X^-1 != tr(X) I for " + X.str(); });
        r.check(X * Y * X == (X * Y).trace() * X - Y.inverse(), [&] { return "XYX identity fails for " + X.str() + ", " + Y.str(); });
        Mat2Q power = I;
        for (unsigned k = 1; k <= 20; ++k) {
            power = power * X;
            if (power != gamma(X, k) * X - gamma(X, k - 1) * I) {
                r.check(false, [&] { return "power identity fails at k=" + std::to_string(k) + " for " + X.str(); });
                break;
            }
        }
        if (i < 20) {
            for (unsigned p = 1; p <= 8; ++p)
                for (unsigned q = 1; q <= 8; ++q) {
                    const Mat2Q lhs = X.pow(p) * Y.pow(q) - Y.pow(q) * X.pow(p);
                    const Mat2Q rhs = (gamma(X, p) * gamma(Y, q)) * (X * Y - Y * X);
                    r.check(lhs == rhs, [&] { return "commutator identity fails at p=" + std::to_string(p) + ", q=" + std::to_string(q); });
                }
        }
    }
    // Vieta on positive hyperbolics
    std::size_t vieta = 0;
    while (vieta < 200) {
        const Mat2Q X = gen.unimodular(100);
        if (X.trace() <= 2 || X.c == 0) continue;
        ++vieta;
        const FixedPoints fp = fixed_points(X);
        const auto& h = std::get<HyperbolicFixedPoints>(fp);
        if (h.attracting.is_infinite() || h.repelling.is_infinite()) continue;
        r.check(h.attracting.value() * h.repelling.value() == QuadraticNumber(-X.b / X.c),
                [&] { return "s*u != -b/c for " + X.str(); });
    }
    for (int i = 0; i < 500; ++i) {
        const Mat2Q X = gen.unstructured(50).pair.A;
        const long double tr = to_long_double(X.trace()), hs = to_long_double(hs_norm_sq(X));
        const long double bound = std::sqrt(2.0L) * std::sqrt(hs);
        r.check(tr <= bound + 1e-12L * std::max(1.0L, bound), [&] { return "tr > sqrt(2)|X| for " + X.str(); });
    }
    r.details = {{"unimodular_samples", 200}, {"vieta_samples", vieta}};
    return r;
}

SuiteReport suite_mirror(std::uint64_t seed) {
    SuiteReport r = named("mirror");
    PairGenerator gen(seed);
    std::vector<MatrixPair> sample;
    for (int i = 0; i < 5; ++i) sample.push_back(gen.unstructured(9).pair);
    for (int i = 0; i < 5; ++i) sample.push_back(gen.balanced().pair);
    for (std::size_t i = 0; i < sample.size(); ++i)
        guarded(r, "pair " + std::to_string(i), [&] {
            for (std::size_t n = 1; n <= 12; ++n)
                for (std::size_t l = 0; l <= n; ++l) {
                    const TraceTable t = trace_argmax(sample[i], l, n);
                    std::map<Word, Rational> traces;
                    for (const TraceEntry& e : t.entries) traces.emplace(e.word, e.trace);
                    bool ok = true;
                    for (const TraceEntry& e : t.entries) ok = ok && traces.at(e.word.reversed()) == e.trace;
                    r.check(ok, [&] {
                        return "pair " + std::to_string(i) + ", l=" + std::to_string(l) + ", n=" + std::to_string(n) +
                               ": tr[w] != tr[reverse w]";
                    });
                }
        });
    r.details = {{"pairs", sample.size()}, {"max_len", 12}};
    return r;
}

// ---- serialization ----------------------------------------------------------------------------

SuiteReport suite_serialization(std::uint64_t seed) {
    SuiteReport r = named("serialization");
    auto stable = [&](const Json& doc, const std::string& what) {
        const std::string once = dump_canonical(doc);
        const std::string twice = dump_canonical(Json::parse(once));
        r.check(once == twice, [&] { return what + " is not stable under reparse"; });
    };
    guarded(r, "documents", [&] {
        const MatrixPair P = golden_pair();
        stable(to_json(analyze(P)), "classification");
        stable(to_json(trace_argmax(P, 2, 5)), "trace table");
        stable(to_json(jsr_bounds(P, 8)), "jsr bounds");
        const SolveResult s = maximize_slope(P, 10000);
        stable(to_json(s), "solve result");
        const std::string text = dump_canonical(to_json(s));
        r.check(text.find("\"chi\": 0.48121182505960347") != std::string::npos &&
                    text.find("\"tau\": \"1/2\"") != std::string::npos,
                [&] { return "solve result renders as " + text; });
        stable(to_json(chi_rational(P, SlopeFraction(2, 5))), "slope value");
        const PairInput back = parse_pair(Json::parse(dump_canonical(to_json(P))));
        r.check(back.pair.A == P.A && back.pair.B == P.B && back.warnings.empty(), [&] { return "pair does not round-trip"; });
        r.check(sweep_csv({}) == "t,tau_num,tau_den,chi,jsr_lower\n", [&] { return "empty sweep CSV has rows"; });
    });
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mant(-1, 1);
    std::uniform_int_distribution<int> ex(-300, 300);
    Json floats = Json::array({0.0, -0.0, 1.0, -1.5, 1e-300, 1.7976931348623157e308, 0.1});
    for (int i = 0; i < 200; ++i) floats.push_back(std::ldexp(mant(rng), ex(rng)));
    stable(floats, "random floats");
    return r;
}

// ---- registry ---------------------------------------------------------------------------------

std::vector<std::string> suite_names() {
    return {"trace-oracle", "trace-identities", "crossing",          "concavity", "classifier-roundtrip",
            "cones",        "words",            "amplification",     "matrix-identities", "mirror",
            "jsr",          "solver",           "sweep",             "serialization"};
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed, unsigned workers) {
    if (name == "trace-oracle") return suite_trace_oracle(seed);
    if (name == "trace-identities") return suite_trace_identities(seed);
    if (name == "crossing") return suite_crossing(seed);
    if (name == "concavity") return suite_concavity(seed);
    if (name == "classifier-roundtrip") return suite_roundtrip(seed);
    if (name == "cones") return suite_cones(seed);
    if (name == "words") return suite_words();
    if (name == "amplification") return suite_amplification();
    if (name == "matrix-identities") return suite_matrix_identities(seed);
    if (name == "mirror") return suite_mirror(seed);
    if (name == "jsr") return suite_jsr(seed);
    if (name == "solver") return suite_solver(seed);
    if (name == "sweep") return suite_sweep(workers);
    if (name == "serialization") return suite_serialization(seed);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace sturmian
