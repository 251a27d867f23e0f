#include "sturmian/pairs.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace sturmian {

std::string to_string(PairClass c) {
    switch (c) {
        case PairClass::CoParallel: return "co_parallel";
        case PairClass::Mixed: return "mixed";
        case PairClass::ParabolicPair: return "parabolic_pair";
        case PairClass::Crossing: return "crossing";
        case PairClass::SharedFixedPoint: return "shared_fixed_point";
        case PairClass::Elliptic: return "elliptic";
        case PairClass::IdentityComponent: return "identity_component";
        case PairClass::NotBalanced: return "not_balanced";
    }
    return "?";
}

PairClass pair_class_from_string(const std::string& name) {
    for (PairClass c : {PairClass::CoParallel, PairClass::Mixed, PairClass::ParabolicPair, PairClass::Crossing,
                        PairClass::SharedFixedPoint, PairClass::Elliptic, PairClass::IdentityComponent,
                        PairClass::NotBalanced}) {
        if (to_string(c) == name) return c;
    }
    throw std::invalid_argument("unknown pair class '" + name + "'");
}

// ---- normalization ----------------------------------------------------------------

namespace {

std::optional<PairClass> degenerate(const Mat2Q& x) {
    if (x.is_scalar()) return PairClass::IdentityComponent;
    const Rational t = x.trace();
    if (t * t < 4 * x.det()) return PairClass::Elliptic;
    return std::nullopt;
}

void scale_one(const Mat2Q& x, long double& s, int& sign, std::optional<Rational>& exact_s, Mat2D& xf,
               std::optional<Mat2Q>& xe) {
    sign = sgn(x.trace()) >= 0 ? 1 : -1;
    const long double root = std::sqrt(to_long_double(x.det()));
    s = static_cast<long double>(sign) / root;
    Rational r;
    if (rational_sqrt(x.det(), r)) {
        exact_s = Rational(sign) / r;
        xe = *exact_s * x;
        xf = Mat2D::from(*xe);
    } else {
        const Mat2D raw = Mat2D::from(x);
        xf = {raw.a * s, raw.b * s, raw.c * s, raw.d * s};
    }
}

}  // namespace

std::variant<NormalizedPair, PairClass> normalize_to_unimodular(const MatrixPair& pair) {
    if (sgn(pair.A.det()) <= 0 || sgn(pair.B.det()) <= 0)
        throw std::invalid_argument("both matrices need a positive determinant");
    // Elliptic outranks IdentityComponent when the two matrices disagree
    const auto da = degenerate(pair.A), db = degenerate(pair.B);
    if (da == PairClass::Elliptic || db == PairClass::Elliptic) return PairClass::Elliptic;
    if (da || db) return PairClass::IdentityComponent;
    NormalizedPair n;
    n.original = pair;
    scale_one(pair.A, n.a, n.sign_a, n.a_exact, n.A_float, n.A_exact);
    scale_one(pair.B, n.b, n.sign_b, n.b_exact, n.B_float, n.B_exact);
    return n;
}

// ---- classification -----------------------------------------------------------------

namespace {

std::vector<ProjectivePoint> points_of(const FixedPoints& f) {
    if (const auto* h = std::get_if<HyperbolicFixedPoints>(&f)) return {h->attracting, h->repelling};
    return {std::get<ParabolicFixedPoint>(f).point};
}

// Arc between a and b on the side that does not contain `avoid`.
Arc arc_avoiding(const ProjectivePoint& a, const ProjectivePoint& b, const ProjectivePoint& avoid) {
    if (cyclically_between(a, avoid, b)) return {b, a};
    return {a, b};
}

Arc arc_containing(const ProjectivePoint& a, const ProjectivePoint& b, const ProjectivePoint& inside) {
    if (cyclically_between(a, inside, b)) return {a, b};
    return {b, a};
}

}  // namespace

PairAnalysis analyze(const MatrixPair& pair) {
    PairAnalysis out;
    auto norm = normalize_to_unimodular(pair);
    if (auto* c = std::get_if<PairClass>(&norm)) {
        out.cls = *c;
        return out;
    }
    out.normalized = std::get<NormalizedPair>(norm);
    out.fixed_a = fixed_points(pair.A);
    out.fixed_b = fixed_points(pair.B);

    for (const auto& x : points_of(*out.fixed_a))
        for (const auto& y : points_of(*out.fixed_b))
            if (x == y) {
                out.cls = PairClass::SharedFixedPoint;
                return out;
            }

    const auto* ha = std::get_if<HyperbolicFixedPoints>(&*out.fixed_a);
    const auto* hb = std::get_if<HyperbolicFixedPoints>(&*out.fixed_b);

    if (ha && hb) {
        const auto &sA = ha->attracting, &uA = ha->repelling, &sB = hb->attracting, &uB = hb->repelling;
        const bool alternating = cyclically_between(sA, uA, sB) != cyclically_between(sA, uB, sB);
        if (alternating) {
            out.cls = PairClass::NotBalanced;
            return out;
        }
        const bool linked = cyclically_between(sA, sB, uA) != cyclically_between(sA, uB, uA);
        out.cls = linked ? PairClass::Crossing : PairClass::CoParallel;
        if (!linked) out.cones = ConeData{arc_avoiding(sA, sB, uA), arc_avoiding(uA, uB, sA)};
        return out;
    }

    if (ha || hb) {
        const HyperbolicFixedPoints& h = ha ? *ha : *hb;
        const Mat2Q& parabolic = ha ? pair.B : pair.A;
        const ProjectivePoint& p = std::get<ParabolicFixedPoint>(ha ? *out.fixed_b : *out.fixed_a).point;
        const Arc toward_s = arc_avoiding(p, h.attracting, h.repelling);
        const Arc toward_u = arc_avoiding(p, h.repelling, h.attracting);
        const bool direct = toward_s.contains(mobius(parabolic, h.attracting));
        const bool dual = toward_u.contains(mobius(parabolic.inverse(), h.repelling));
        out.mixed_dual_agrees = direct == dual;
        if (direct != dual) throw std::logic_error("mixed-pair direction tests disagree");
        out.cls = direct ? PairClass::Mixed : PairClass::NotBalanced;
        if (direct) out.cones = ConeData{toward_s, arc_avoiding(h.repelling, p, h.attracting)};
        return out;
    }

    const ProjectivePoint& pA = std::get<ParabolicFixedPoint>(*out.fixed_a).point;
    const ProjectivePoint& pB = std::get<ParabolicFixedPoint>(*out.fixed_b).point;
    const ProjectivePoint a_img = mobius(pair.A, pB);
    const ProjectivePoint b_img = mobius(pair.B, pA);
    const bool same_side = cyclically_between(pA, a_img, pB) == cyclically_between(pA, b_img, pB);
    out.cls = same_side ? PairClass::ParabolicPair : PairClass::NotBalanced;
    if (same_side) {
        const Arc plus = arc_containing(pA, pB, a_img);
        out.cones = ConeData{plus, Arc{plus.to, plus.from}};
    }
    return out;
}

// ---- cones ------------------------------------------------------------------------------

namespace {

// x strictly before y when walking the arc from its start; both in the closure, x ≠ y
bool arc_before(const Arc& arc, const ProjectivePoint& x, const ProjectivePoint& y) {
    if (x == arc.from || y == arc.to) return true;
    if (x == arc.to || y == arc.from) return false;
    return cyclically_between(arc.from, x, y);
}

bool maps_into(const Arc& arc, const Mat2Q& m, bool strict) {
    const ProjectivePoint f = mobius(m, arc.from), t = mobius(m, arc.to);
    if (strict) {
        if (!arc.contains(f) || !arc.contains(t)) return false;
    } else if (!arc.closure_contains(f) || !arc.closure_contains(t)) {
        return false;
    }
    return arc_before(arc, f, t);
}

}  // namespace

bool cone_invariance(const MatrixPair& pair, std::size_t max_len) {
    const PairAnalysis an = analyze(pair);
    if (!an.cones) throw std::invalid_argument("cone invariance needs a balanced pair");
    const ConeData& cones = *an.cones;
    bool ok = true;
    std::function<void(const Mat2Q&, std::size_t, bool, bool)> walk = [&](const Mat2Q& x, std::size_t len,
                                                                          bool has0, bool has1) {
        if (!ok) return;
        if (len > 0) {
            const bool strict = has0 && has1;
            if (!maps_into(cones.plus, x, strict) || !maps_into(cones.minus, x.inverse(), strict)) {
                ok = false;
                return;
            }
        }
        if (len == max_len) return;
        walk(x * pair.A, len + 1, true, has1);
        walk(x * pair.B, len + 1, has0, true);
    };
    walk(Mat2Q::identity(), 0, false, false);
    return ok;
}

// ---- normal forms ----------------------------------------------------------------------------

namespace {

constexpr long double kTol = 1e-9L;
const long double kInf = std::numeric_limits<long double>::infinity();

long double to_float(const ProjectivePoint& p) { return p.is_infinite() ? kInf : p.to_long_double(); }

long double fmobius(const Mat2D& m, long double z) {
    if (std::isinf(z)) return m.c == 0 ? kInf : m.a / m.c;
    const long double den = m.c * z + m.d;
    if (den == 0) return kInf;
    return (m.a * z + m.b) / den;
}

// Möbius map sending (z1, z2, z3) to (0, ∞, 1).
Mat2D to_standard(long double z1, long double z2, long double z3) {
    if (std::isinf(z1)) return {0, z3 - z2, 1, -z2};
    if (std::isinf(z2)) return {1, -z1, 0, z3 - z1};
    if (std::isinf(z3)) return {1, -z1, 1, -z2};
    return {z3 - z2, -z1 * (z3 - z2), z3 - z1, -z2 * (z3 - z1)};
}

Mat2D three_point(const std::array<long double, 3>& from, const std::array<long double, 3>& to) {
    return to_standard(to[0], to[1], to[2]).inverse() * to_standard(from[0], from[1], from[2]);
}

long double scale_of(const Mat2D& x) {
    return 1 + std::fabs(x.a) + std::fabs(x.b) + std::fabs(x.c) + std::fabs(x.d);
}

// Empty string when x looks like H_{s,u}^λ: s attracting, u repelling, trace > 2.
std::string check_hyperbolic(const Mat2D& x, long double s, long double u, const char* name) {
    const long double tol = kTol * scale_of(x) * (1 + s * s + u * u);
    auto residual = [&](long double z) { return std::fabs(x.c * z * z + (x.d - x.a) * z - x.b); };
    if (residual(s) > tol || residual(u) > tol) return std::string(name) + ": fixed points off target";
    if (!(x.a + x.d > 2 + kTol)) return std::string(name) + ": trace not above 2";
    if (!(std::fabs(x.c * s + x.d) > std::fabs(x.c * u + x.d))) return std::string(name) + ": s is not attracting";
    return {};
}

std::string check_lower_parabolic(const Mat2D& x, const char* name) {
    const long double tol = kTol * scale_of(x);
    if (std::fabs(x.a - 1) > tol || std::fabs(x.d - 1) > tol || std::fabs(x.b) > tol)
        return std::string(name) + ": not of the form P_x";
    if (!(x.c > tol)) return std::string(name) + ": P_x needs x > 0";
    return {};
}

std::string check_upper_parabolic(const Mat2D& x, const char* name) {
    const long double tol = kTol * scale_of(x);
    if (std::fabs(x.a - 1) > tol || std::fabs(x.d - 1) > tol || std::fabs(x.c) > tol)
        return std::string(name) + ": not of the form P_y^t";
    if (!(x.b > tol)) return std::string(name) + ": P_y^t needs y > 0";
    return {};
}

// A point of the open arc, away from its endpoints.
long double interior_point(const Arc& arc) {
    const long double f = to_float(arc.from), t = to_float(arc.to);
    if (std::isinf(f)) return t - 1 - std::fabs(t);
    if (std::isinf(t)) return f + 1 + std::fabs(f);
    if (f < t) return (f + t) / 2;
    return kInf;  // the arc wraps through ∞
}

NormalForm conjugate(char tag, const Mat2D& m, const NormalizedPair& n) {
    NormalForm nf;
    nf.tag = tag;
    const Mat2D mi = m.inverse();
    nf.A = m * n.A_float * mi;
    nf.B = m * n.B_float * mi;
    const long double k = std::sqrt(std::fabs(mi.det()));
    nf.T = {mi.a / k, mi.b / k, mi.c / k, mi.d / k};
    return nf;
}

}  // namespace

NormalForm normal_form_conjugator(const MatrixPair& pair) {
    const PairAnalysis an = analyze(pair);
    if (!is_balanced_class(an.cls)) throw std::invalid_argument("normal form needs a balanced pair, got " + to_string(an.cls));
    const NormalizedPair& n = *an.normalized;

    if (an.cls == PairClass::CoParallel) {
        const auto& ha = std::get<HyperbolicFixedPoints>(*an.fixed_a);
        const auto& hb = std::get<HyperbolicFixedPoints>(*an.fixed_b);
        const long double sA = to_float(ha.attracting), uA = to_float(ha.repelling);
        const long double sB = to_float(hb.attracting), uB = to_float(hb.repelling);

        auto attempt = [&](const Mat2D& m, bool a_inner) {
            NormalForm nf = conjugate('h', m, n);
            const long double s2 = fmobius(m, a_inner ? sB : sA), u2 = fmobius(m, a_inner ? uB : uA);
            const Mat2D& inner = a_inner ? nf.A : nf.B;
            const Mat2D& outer = a_inner ? nf.B : nf.A;
            if (std::isinf(s2) || std::isinf(u2) || !(u2 < -1 - kTol) || !(s2 > 1 + kTol)) {
                nf.failure = "outer fixed points not in u2 < u1 < 0 < s1 < s2 order";
            } else {
                nf.failure = check_hyperbolic(inner, 1, -1, "inner");
                if (nf.failure.empty()) nf.failure = check_hyperbolic(outer, s2, u2, "outer");
            }
            nf.verified = nf.failure.empty();
            return nf;
        };
        const std::array<long double, 3> target{-2, -1, 1};
        NormalForm nf = attempt(three_point({uB, uA, sA}, target), true);
        if (nf.verified) return nf;
        nf = attempt(three_point({uA, uB, sB}, target), false);
        if (nf.verified) return nf;
        // send a point outside both chords to ∞ and A's fixed points to ∓1
        const Arc b_side{hb.attracting, hb.repelling};
        const long double far = interior_point(b_side.contains(ha.attracting) ? Arc{hb.repelling, hb.attracting} : b_side);
        return attempt(three_point({uA, sA, far}, {-1, 1, kInf}), true);
    }

    if (an.cls == PairClass::Mixed) {
        const bool a_hyp = std::holds_alternative<HyperbolicFixedPoints>(*an.fixed_a);
        const auto& h = std::get<HyperbolicFixedPoints>(a_hyp ? *an.fixed_a : *an.fixed_b);
        const long double p = to_float(std::get<ParabolicFixedPoint>(a_hyp ? *an.fixed_b : *an.fixed_a).point);
        const Mat2D m = three_point({p, to_float(h.repelling), to_float(h.attracting)}, {0, -1, 1});
        NormalForm nf = conjugate('m', m, n);
        const Mat2D& hyp = a_hyp ? nf.A : nf.B;
        const Mat2D& par = a_hyp ? nf.B : nf.A;
        nf.failure = check_hyperbolic(hyp, 1, -1, "hyperbolic");
        if (nf.failure.empty()) nf.failure = check_lower_parabolic(par, "parabolic");
        nf.verified = nf.failure.empty();
        return nf;
    }

    const ProjectivePoint& pA = std::get<ParabolicFixedPoint>(*an.fixed_a).point;
    const ProjectivePoint& pB = std::get<ParabolicFixedPoint>(*an.fixed_b).point;
    const ProjectivePoint img = mobius(pair.A, pB);
    const Mat2D m = three_point({to_float(pA), to_float(pB), to_float(img)}, {0, kInf, 1});
    NormalForm nf = conjugate('p', m, n);
    nf.failure = check_lower_parabolic(nf.A, "A");
    if (nf.failure.empty()) nf.failure = check_upper_parabolic(nf.B, "B");
    nf.verified = nf.failure.empty();
    return nf;
}

// ---- pair-level checks -----------------------------------------------------------------------

BalancedPairReport balanced_pair_checks(const MatrixPair& pair, std::size_t max_len) {
    BalancedPairReport r;
    const Mat2Q AB = pair.A * pair.B, BA = pair.B * pair.A;
    r.trace_abab = (AB * AB).trace();
    r.trace_aabb = (pair.A * pair.A * pair.B * pair.B).trace();
    r.trace_inequality = r.trace_abab > r.trace_aabb;

    auto norm = normalize_to_unimodular(pair);
    if (const auto* n = std::get_if<NormalizedPair>(&norm)) {
        bool ok = true;
        std::function<void(const Mat2Q&, std::size_t, std::size_t)> walk = [&](const Mat2Q& x, std::size_t zeros,
                                                                                std::size_t ones) {
            if (!ok) return;
            if (zeros + ones > 0) {
                const int parity = ((zeros % 2 && n->sign_a < 0) != (ones % 2 && n->sign_b < 0)) ? -1 : 1;
                const Rational t = x.trace();
                const Rational disc = t * t - 4 * x.det();
                const bool mixed = zeros > 0 && ones > 0;
                if (sgn(t) * parity <= 0 || sgn(disc) < 0 || x.is_scalar() || (mixed && sgn(disc) <= 0)) {
                    ok = false;
                    return;
                }
            }
            if (zeros + ones == max_len) return;
            walk(x * pair.A, zeros + 1, ones);
            walk(x * pair.B, zeros, ones + 1);
        };
        walk(Mat2Q::identity(), 0, 0);
        r.words_in_a = ok;
    }

    r.sub_pairs_balanced = true;
    for (const Mat2Q* x : {&pair.A, &pair.B})
        for (const Mat2Q* y : {&AB, &BA})
            if (!is_balanced_class(classify(MatrixPair{*x, *y}))) r.sub_pairs_balanced = false;
    r.ab_ba_crossing = classify(MatrixPair{AB, BA}) == PairClass::Crossing;
    return r;
}

}  // namespace sturmian
