#include "sturmian/serialize.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace sturmian {

namespace {

Rational parse_entry(const Json& e, const std::string& where, std::vector<std::string>& warnings) {
    if (e.is_string()) return parse_rational(e.get<std::string>());
    if (e.is_number_integer()) return e.is_number_unsigned() ? Rational(std::to_string(e.get<std::uint64_t>()))
                                                             : Rational(std::to_string(e.get<std::int64_t>()));
    if (e.is_number_float()) {
        const double x = e.get<double>();
        const Rational r = rational_from_double(x);
        warnings.push_back(where + ": float " + format_double(x) + " read as its exact binary value " + to_string(r));
        return r;
    }
    throw std::invalid_argument(where + ": matrix entries must be numbers or \"p/q\" strings");
}

Mat2Q parse_matrix(const Json& m, const std::string& name, std::vector<std::string>& warnings) {
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 || !m[1].is_array() ||
        m[1].size() != 2)
        throw std::invalid_argument(name + " must be a 2x2 array [[a,b],[c,d]]");
    return {parse_entry(m[0][0], name + "[0][0]", warnings), parse_entry(m[0][1], name + "[0][1]", warnings),
            parse_entry(m[1][0], name + "[1][0]", warnings), parse_entry(m[1][1], name + "[1][1]", warnings)};
}

void dump(const Json& j, int indent, std::string& out) {
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {  // std::map: already sorted
                if (!first) out += ",\n";
                first = false;
                out += pad + Json(it.key()).dump() + ": ";
                dump(it.value(), indent + 2, out);
            }
            out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            bool scalars = true;
            for (const auto& e : j) scalars = scalars && !e.is_structured();
            if (scalars) {
                out += "[";
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i) out += ", ";
                    dump(j[i], indent, out);
                }
                out += "]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += ",\n";
                out += pad;
                dump(j[i], indent + 2, out);
            }
            out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "]";
            return;
        }
        case Json::value_t::number_float: {
            const double x = j.get<double>();
            out += std::isfinite(x) ? format_double(x) : "null";
            return;
        }
        default:
            out += j.dump();
    }
}

Json words_json(const std::vector<Word>& ws) {
    Json out = Json::array();
    for (const Word& w : ws) out.push_back(w.str());
    return out;
}

Json arc_json(const Arc& a) { return {{"from", to_json(a.from)}, {"to", to_json(a.to)}}; }

Json fixed_json(const FixedPoints& f) {
    if (const auto* h = std::get_if<HyperbolicFixedPoints>(&f))
        return {{"kind", "hyperbolic"}, {"attracting", to_json(h->attracting)}, {"repelling", to_json(h->repelling)}};
    return {{"kind", "parabolic"}, {"point", to_json(std::get<ParabolicFixedPoint>(f).point)}};
}

}  // namespace

PairInput parse_pair(const Json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("pair input must be a JSON object with keys \"A\" and \"B\"");
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (it.key() != "A" && it.key() != "B") throw std::invalid_argument("unexpected key \"" + it.key() + "\" in pair input");
    if (!doc.contains("A") || !doc.contains("B")) throw std::invalid_argument("pair input needs both \"A\" and \"B\"");
    PairInput out;
    out.pair.A = parse_matrix(doc["A"], "A", out.warnings);
    out.pair.B = parse_matrix(doc["B"], "B", out.warnings);
    return out;
}

PairInput parse_pair_text(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("pair input is not valid JSON: ") + e.what());
    }
    return parse_pair(doc);
}

std::string format_double(double x) {
    if (x == 0) x = 0;  // drops the sign of -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string dump_canonical(const Json& doc) {
    std::string out;
    dump(doc, 0, out);
    out += "\n";
    return out;
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Json float_json(long double x) { return Json(static_cast<double>(x)); }

Json to_json(const Rational& x) { return to_string(x); }

Json to_json(const QuadraticNumber& x) {
    return {{"p", to_json(x.rational_part())},
            {"q", to_json(x.radical_coefficient())},
            {"d", x.radicand().get_str()},
            {"decimal", x.decimal(20)}};
}

Json to_json(const ProjectivePoint& x) {
    if (x.is_infinite()) return "inf";
    return to_json(x.value());
}

Json to_json(const Mat2Q& m) { return Json::array({Json::array({to_json(m.a), to_json(m.b)}), Json::array({to_json(m.c), to_json(m.d)})}); }

Json to_json(const Mat2D& m) {
    return Json::array({Json::array({float_json(m.a), float_json(m.b)}), Json::array({float_json(m.c), float_json(m.d)})});
}

Json to_json(const MatrixPair& pair) { return {{"A", to_json(pair.A)}, {"B", to_json(pair.B)}}; }

Json to_json(const PairAnalysis& a) {
    Json out{{"class", to_string(a.cls)}, {"balanced", is_balanced_class(a.cls)}};
    if (a.normalized) {
        const NormalizedPair& n = *a.normalized;
        Json scalars{{"a", float_json(n.a)}, {"b", float_json(n.b)}, {"sign_a", n.sign_a}, {"sign_b", n.sign_b}};
        if (n.a_exact) scalars["a_exact"] = to_json(*n.a_exact);
        if (n.b_exact) scalars["b_exact"] = to_json(*n.b_exact);
        out["scalars"] = scalars;
    }
    Json fp = Json::object();
    if (a.fixed_a) fp["A"] = fixed_json(*a.fixed_a);
    if (a.fixed_b) fp["B"] = fixed_json(*a.fixed_b);
    out["fixed_points"] = fp;
    if (a.cones) out["cones"] = {{"plus", arc_json(a.cones->plus)}, {"minus", arc_json(a.cones->minus)}};
    if (a.mixed_dual_agrees) out["mixed_dual_agrees"] = *a.mixed_dual_agrees;
    return out;
}

Json to_json(const NormalForm& nf) {
    Json out{{"tag", std::string(1, nf.tag)}, {"T", to_json(nf.T)}, {"A", to_json(nf.A)}, {"B", to_json(nf.B)},
             {"verified", nf.verified}};
    if (!nf.failure.empty()) out["failure"] = nf.failure;
    return out;
}

Json to_json(const SlopeValue& v) {
    return {{"slope", v.slope.str()}, {"chi", float_json(v.chi)}, {"exact_radius", to_json(v.exact_radius)},
            {"cycle", v.cycle.str()}};
}

Json to_json(const ChiApproximation& c) {
    Json conv = Json::array();
    for (std::size_t i = 0; i < c.convergents.size(); ++i)
        conv.push_back({{"slope", c.convergents[i].str()}, {"chi", float_json(c.values[i])}});
    return {{"chi", float_json(c.value)}, {"error_bound", float_json(c.error_bound)}, {"convergents", conv}};
}

Json to_json(const JsrBounds& j) {
    return {{"lower", float_json(j.lower)},           {"upper", float_json(j.upper)},
            {"depth", j.depth},                       {"argmax_word", j.argmax_word.str()},
            {"upper_word", j.upper_word.str()},       {"c_hat", float_json(j.c_hat)}};
}

Json to_json(const TraceTable& t) {
    Json entries = Json::array();
    for (const TraceEntry& e : t.entries)
        entries.push_back({{"word", e.word.str()},
                           {"trace", to_json(e.trace)},
                           {"is_cyclic_balanced", e.cyclic_balanced},
                           {"is_maximizer", e.maximizer}});
    return {{"l", t.l},
            {"n", t.n},
            {"max_trace", to_json(t.max_trace)},
            {"maximizers", words_json(t.maximizers)},
            {"entries", entries}};
}

Json to_json(const SolveResult& r) {
    return {{"tau", r.tau_hat.str()},
            {"chi", float_json(r.chi_at_tau)},
            {"bracket",
             {{"left", r.bracket.left.str()},
              {"right", r.bracket.right.str()},
              {"f_left", float_json(r.bracket.f_left)},
              {"f_right", float_json(r.bracket.f_right)}}},
            {"max_den", r.max_den},
            {"certified", r.certified},
            {"iterations", r.iterations},
            {"evaluations", r.evaluations}};
}

Json to_json(const SweepRecord& r) {
    return {{"t", to_json(r.t)}, {"tau", r.tau.str()}, {"chi", float_json(r.chi)}, {"jsr_lower", float_json(r.jsr_lower)}};
}

Json to_json(const Plateau& p) {
    return {{"tau", p.tau.str()}, {"t_first", to_json(p.t_first)}, {"t_last", to_json(p.t_last)}, {"count", p.count}};
}

Json to_json(const HuntResult& h) {
    return {{"t_lo", to_json(h.t_lo)},     {"t_hi", to_json(h.t_hi)},       {"tau_lo", h.tau_lo.str()},
            {"tau_hi", h.tau_hi.str()},    {"target", to_json(h.target)},   {"hit", h.hit},
            {"iterations", h.iterations}};
}

std::string trace_table_csv(const TraceTable& t) {
    std::ostringstream out;
    out << "word,trace_num,trace_den,is_cyclic_balanced,is_maximizer\n";
    for (const TraceEntry& e : t.entries)
        out << e.word.str() << ',' << e.trace.get_num().get_str() << ',' << e.trace.get_den().get_str() << ','
            << (e.cyclic_balanced ? "true" : "false") << ',' << (e.maximizer ? "true" : "false") << '\n';
    return out.str();
}

std::string sweep_csv(const std::vector<SweepRecord>& records) {
    std::ostringstream out;
    out << "t,tau_num,tau_den,chi,jsr_lower\n";
    for (const SweepRecord& r : records)
        out << format_double(to_long_double(r.t)) << ',' << r.tau.num() << ',' << r.tau.den() << ','
            << format_double(static_cast<double>(r.chi)) << ',' << format_double(static_cast<double>(r.jsr_lower))
            << '\n';
    return out.str();
}

}  // namespace sturmian
