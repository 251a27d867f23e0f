#include "sturmian/optimizer.hpp"

#include "sturmian/pairs.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <cstdio>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace sturmian {

SlopeEvaluator::SlopeEvaluator(const MatrixPair& pair) : sp_(pair) {
    products_.emplace(Key{0, 1}, sp_.generator(0));
    products_.emplace(Key{1, 1}, sp_.generator(1));
}

const Mat2Z& SlopeEvaluator::product(const SlopeFraction& slope) {
    const Key key{slope.num(), slope.den()};
    auto it = products_.find(key);
    if (it == products_.end()) it = products_.emplace(key, sp_.product(christoffel_cycle(slope))).first;
    return it->second;
}

const Mat2Z& SlopeEvaluator::mediant_product(const SlopeFraction& l, const SlopeFraction& r) {
    const SlopeFraction m = mediant(l, r);
    const Key key{m.num(), m.den()};
    auto it = products_.find(key);
    if (it == products_.end()) it = products_.emplace(key, product(l) * product(r)).first;
    return it->second;
}

long double SlopeEvaluator::value(const SlopeFraction& slope, const Mat2Z& m) {
    const Key key{slope.num(), slope.den()};
    if (auto it = values_.find(key); it != values_.end()) return it->second;
    ++evaluations_;
    const std::uint64_t ones = slope.num(), zeros = slope.den() - slope.num();
    const long double v = sp_.log_spectral_radius(m, zeros, ones) / static_cast<long double>(slope.den());
    values_.emplace(key, v);
    return v;
}

long double SlopeEvaluator::operator()(const SlopeFraction& slope) {
    const Key key{slope.num(), slope.den()};
    if (auto it = values_.find(key); it != values_.end()) return it->second;
    return value(slope, product(slope));
}

// ---- solver --------------------------------------------------------------------------------

namespace {

SlopeFraction combine(const SlopeFraction& base, const SlopeFraction& step, std::uint64_t k) {
    return SlopeFraction(base.num() + k * step.num(), base.den() + k * step.den());
}

}  // namespace

SolveResult maximize_slope(SlopeEvaluator& f, std::uint64_t max_den) {
    if (max_den < 2) throw std::invalid_argument("max_den must be at least 2");
    SolveResult out;
    out.max_den = max_den;
    SlopeFraction L(0, 1), R(1, 1);
    long double fL = f(L), fR = f(R);
    while (true) {
        ++out.iterations;
        const SlopeFraction M = mediant(L, R);
        if (M.den() > max_den) {
            // L and R are adjacent in the Farey sequence of order max_den
            const bool left = fL >= fR;
            out.tau_hat = left ? L : R;
            out.chi_at_tau = left ? fL : fR;
            out.certified = true;
            break;
        }
        const Mat2Z& PM = f.mediant_product(L, R);
        const long double fM = f.value(M, PM);

        // neighbours of M in the Farey sequence of order max_den
        const std::uint64_t kl = (max_den - L.den()) / M.den();
        const SlopeFraction ln = kl ? combine(L, M, kl) : L;
        const long double f_ln = kl ? f.value(ln, f.product(L) * PM.pow(static_cast<unsigned>(kl))) : fL;
        if (f_ln > fM) {
            R = M;
            fR = fM;
            continue;
        }
        const std::uint64_t kr = (max_den - R.den()) / M.den();
        const SlopeFraction rn = kr ? combine(R, M, kr) : R;
        const long double f_rn = kr ? f.value(rn, PM.pow(static_cast<unsigned>(kr)) * f.product(R)) : fR;
        if (f_rn > fM) {
            L = M;
            fL = fM;
            continue;
        }
        out.tau_hat = M;
        out.chi_at_tau = fM;
        out.certified = true;
        break;
    }
    out.bracket = FareyBracket{L, R, fL, fR};
    out.evaluations = f.evaluations();
    return out;
}

SolveResult maximize_slope(const MatrixPair& pair, std::uint64_t max_den) {
    const PairClass cls = classify(pair);
    if (!is_balanced_class(cls)) throw std::invalid_argument("maximize_slope needs a balanced pair, got " + to_string(cls));
    SlopeEvaluator f(pair);
    return maximize_slope(f, max_den);
}

bool local_optimality_check(SlopeEvaluator& f, const SlopeFraction& tau, std::uint64_t den_limit) {
    const long double best = f(tau);
    const long double slack = 1e-15L * std::max(1.0L, std::fabs(best));
    for (std::uint64_t q = 1; q <= den_limit; ++q)
        for (std::uint64_t p = 0; p <= q; ++p)
            if (std::gcd(p, q) == 1 && f(SlopeFraction(p, q)) > best + slack) return false;
    return true;
}

// ---- concavity --------------------------------------------------------------------------------

ConcavityProbe concavity_probe(SlopeEvaluator& f, const SlopeFraction& left, const SlopeFraction& right) {
    if (!(left < right) || !farey_neighbors(left, right))
        throw std::invalid_argument("concavity probe needs Farey neighbours left < right");
    ConcavityProbe out;
    out.f_left = f(left);
    out.f_right = f(right);
    out.f_mediant = f.value(mediant(left, right), f.mediant_product(left, right));
    const long double q1 = static_cast<long double>(left.den()), q2 = static_cast<long double>(right.den());
    const long double lambda = q1 / (q1 + q2);
    out.chord = lambda * out.f_left + (1 - lambda) * out.f_right;
    out.holds = out.f_mediant > out.chord - 1e-10L;
    return out;
}

bool concavity_probe(const MatrixPair& pair, const SlopeFraction& left, const SlopeFraction& right) {
    SlopeEvaluator f(pair);
    return concavity_probe(f, left, right).holds;
}

std::vector<std::pair<SlopeFraction, SlopeFraction>> farey_pairs(std::uint64_t limit) {
    std::vector<std::pair<SlopeFraction, SlopeFraction>> out;
    std::function<void(const SlopeFraction&, const SlopeFraction&)> walk = [&](const SlopeFraction& l,
                                                                               const SlopeFraction& r) {
        if (l.den() + r.den() > limit) return;
        out.emplace_back(l, r);
        const SlopeFraction m = mediant(l, r);
        walk(l, m);
        walk(m, r);
    };
    walk(SlopeFraction(0, 1), SlopeFraction(1, 1));
    return out;
}

// ---- families ------------------------------------------------------------------------------------

namespace {

void require_balanced_family(const Mat2Q& A, const Mat2Q& B) {
    const PairClass cls = classify(MatrixPair{A, B});
    if (!is_balanced_class(cls)) throw std::invalid_argument("family (A, tB) is not balanced: " + to_string(cls));
}

SolveResult solve_at(const Mat2Q& A, const Mat2Q& B, const Rational& t, std::uint64_t max_den) {
    if (sgn(t) <= 0) throw std::invalid_argument("family parameter t must be positive");
    SlopeEvaluator f(MatrixPair{A, t * B});
    return maximize_slope(f, max_den);
}

}  // namespace

std::vector<SweepRecord> sweep_family(const Mat2Q& A, const Mat2Q& B, const std::vector<Rational>& t_grid,
                                      std::uint64_t max_den, unsigned workers) {
    require_balanced_family(A, B);
    for (const Rational& t : t_grid)
        if (sgn(t) <= 0) throw std::invalid_argument("family parameter t must be positive");
    std::vector<SweepRecord> out(t_grid.size());
    auto run = [&](std::size_t i) {
        const SolveResult r = solve_at(A, B, t_grid[i], max_den);
        out[i] = {t_grid[i], r.tau_hat, r.chi_at_tau, std::exp(r.chi_at_tau)};
    };
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(t_grid.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < t_grid.size(); ++i) run(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i; (i = next.fetch_add(1)) < t_grid.size();) run(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

std::vector<Rational> geometric_grid(double lo, double hi, std::size_t n) {
    if (!(lo > 0) || !(hi >= lo) || n == 0) throw std::invalid_argument("geometric grid needs 0 < lo ≤ hi and n ≥ 1");
    std::vector<Rational> out;
    for (std::size_t k = 0; k < n; ++k) {
        const double x = n == 1 ? lo : lo * std::pow(hi / lo, static_cast<double>(k) / static_cast<double>(n - 1));
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6g", x);
        out.push_back(parse_rational(buf));
    }
    return out;
}

std::vector<Plateau> locking_plateaus(const std::vector<SweepRecord>& records) {
    std::vector<Plateau> out;
    std::size_t i = 0;
    while (i < records.size()) {
        std::size_t j = i;
        while (j + 1 < records.size() && records[j + 1].tau == records[i].tau) ++j;
        if (j > i) out.push_back({records[i].tau, records[i].t, records[j].t, j - i + 1});
        i = j + 1;
    }
    return out;
}

HuntResult hunt_bracket(const Mat2Q& A, const Mat2Q& B, const Rational& target, const Rational& t_lo,
                        const Rational& t_hi, std::uint64_t max_den, const Rational& tol) {
    if (t_lo > t_hi) throw std::invalid_argument("hunt needs t_lo ≤ t_hi");
    if (sgn(tol) <= 0) throw std::invalid_argument("hunt tolerance must be positive");
    require_balanced_family(A, B);
    HuntResult out;
    out.target = target;
    out.t_lo = t_lo;
    out.t_hi = t_hi;
    out.tau_lo = solve_at(A, B, t_lo, max_den).tau_hat;
    out.tau_hi = t_lo == t_hi ? out.tau_lo : solve_at(A, B, t_hi, max_den).tau_hat;
    const int side_lo = sgn(out.tau_lo.value() - target), side_hi = sgn(out.tau_hi.value() - target);
    if (side_lo == 0 || side_hi == 0) {
        out.hit = true;
        const Rational t = side_lo == 0 ? t_lo : t_hi;
        const SlopeFraction tau = side_lo == 0 ? out.tau_lo : out.tau_hi;
        out.t_lo = out.t_hi = t;
        out.tau_lo = out.tau_hi = tau;
        return out;
    }
    if (side_lo == side_hi) throw std::invalid_argument("tau at the endpoints does not straddle the target");
    while (out.t_hi - out.t_lo >= tol && out.iterations < 200) {
        ++out.iterations;
        const Rational mid = (out.t_lo + out.t_hi) / 2;
        const SlopeFraction tau = solve_at(A, B, mid, max_den).tau_hat;
        const int side = sgn(tau.value() - target);
        if (side == 0) {
            out.hit = true;
            out.t_lo = out.t_hi = mid;
            out.tau_lo = out.tau_hi = tau;
            break;
        }
        if (side == side_lo) {
            out.t_lo = mid;
            out.tau_lo = tau;
        } else {
            out.t_hi = mid;
            out.tau_hi = tau;
        }
    }
    return out;
}

}  // namespace sturmian
