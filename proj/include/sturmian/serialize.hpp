#pragma once

#include "sturmian/lyapunov.hpp"
#include "sturmian/optimizer.hpp"
#include "sturmian/pairs.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace sturmian {

using Json = nlohmann::json;

struct PairInput {
    MatrixPair pair;
    std::vector<std::string> warnings;  // one per float entry converted from its binary expansion
};

/// {"A": [[a,b],[c,d]], "B": [[..],[..]]}; entries are "p/q" or decimal strings, integers or floats.
/// Throws std::invalid_argument on anything else.
PairInput parse_pair(const Json& doc);
PairInput parse_pair_text(std::string_view text);

/// Canonical text: sorted keys, two-space indent, floats with 17 significant digits
/// (non-finite floats become null), trailing newline. Dumping a reparse gives the same bytes.
std::string dump_canonical(const Json& doc);

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

Json to_json(const Rational& x);
Json to_json(const QuadraticNumber& x);
Json to_json(const ProjectivePoint& x);
Json to_json(const Mat2Q& m);
Json to_json(const Mat2D& m);
Json to_json(const MatrixPair& pair);
Json float_json(long double x);

Json to_json(const PairAnalysis& a);
Json to_json(const NormalForm& nf);
Json to_json(const SlopeValue& v);
Json to_json(const ChiApproximation& c);
Json to_json(const JsrBounds& j);
Json to_json(const TraceTable& t);
Json to_json(const SolveResult& r);
Json to_json(const SweepRecord& r);
Json to_json(const Plateau& p);
Json to_json(const HuntResult& h);

/// word,trace_num,trace_den,is_cyclic_balanced,is_maximizer
std::string trace_table_csv(const TraceTable& t);
/// t,tau_num,tau_den,chi,jsr_lower (header only for an empty sweep)
std::string sweep_csv(const std::vector<SweepRecord>& records);

/// "%.17g", with -0 printed as 0.
std::string format_double(double x);

}  // namespace sturmian
