#include "sturmian/cli.hpp"

#include "sturmian/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

namespace sturmian {

std::string to_string(CommandKind k) {
    switch (k) {
        case CommandKind::Classify: return "classify";
        case CommandKind::TraceMax: return "trace-max";
        case CommandKind::Chi: return "chi";
        case CommandKind::Jsr: return "jsr";
        case CommandKind::Slope: return "slope";
        case CommandKind::Sweep: return "sweep";
        case CommandKind::Hunt: return "hunt";
        case CommandKind::Verify: return "verify";
    }
    return "?";
}

std::string error_document(const std::string& kind, const std::string& message) {
    return dump_canonical(Json{{"error", {{"kind", kind}, {"message", message}}}});
}

// ---- parsing -------------------------------------------------------------------------------------

Command parse_command(const std::vector<std::string>& args) {
    Command cmd;
    cmd.workers = std::max(1u, std::thread::hardware_concurrency());

    CLI::App app{"Sturmian maximizing measures of balanced 2x2 matrix pairs", "sturmian"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    auto common = [&](CLI::App* sub, bool pair) {
        if (pair) sub->add_option("--pair", cmd.pair_source, "pair JSON: file path, '-' for stdin, or inline");
        sub->add_option("--format", cmd.format, "output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--workers", cmd.workers, "worker threads")->check(CLI::PositiveNumber);
        sub->add_flag("--timings", cmd.timings, "add wall-clock timings to the result");
    };
    auto max_den = [&](CLI::App* sub) {
        sub->add_option("--max-den", cmd.max_den, "largest slope denominator")->check(CLI::Range(2ULL, 100000000ULL));
    };

    CLI::App* classify = app.add_subcommand("classify", "classify a pair and report fixed points, cones and a conjugator");
    common(classify, true);

    CLI::App* trace = app.add_subcommand("trace-max", "exact traces over all words with l ones and length n");
    common(trace, true);
    trace->add_option("-l", cmd.l, "number of ones")->required();
    trace->add_option("-n", cmd.n, "word length")->required();

    CLI::App* chi = app.add_subcommand("chi", "Lyapunov exponent of the Sturmian measure of a slope");
    common(chi, true);
    chi->add_option("--slope", cmd.slope, "p/q, or a decimal approximated through convergents")->required();
    max_den(chi);

    CLI::App* jsr = app.add_subcommand("jsr", "joint spectral radius bounds by word enumeration");
    common(jsr, true);
    jsr->add_option("--depth", cmd.depth, "word length")->check(CLI::Range(1, 16));

    CLI::App* slope = app.add_subcommand("slope", "maximizing slope by Stern-Brocot descent");
    common(slope, true);
    max_den(slope);

    CLI::App* sweep = app.add_subcommand("sweep", "maximizing slope across the family (A, tB)");
    common(sweep, true);
    max_den(sweep);
    sweep->add_option("--grid", cmd.grid, "geom:LO:HI:N, lin:LO:HI:N or list:T1,T2,...");

    CLI::App* hunt = app.add_subcommand("hunt", "bisect t until the maximizing slope brackets a target");
    common(hunt, true);
    max_den(hunt);
    hunt->add_option("--target", cmd.target, "target slope")->required();
    hunt->add_option("--t-range", cmd.t_range, "LO:HI")->required();
    hunt->add_option("--tol", cmd.tol, "stop once t_hi - t_lo < tol");

    CLI::App* verify = app.add_subcommand("verify", "run property suites");
    common(verify, false);
    verify->add_option("--suite", cmd.suite, "suite name or 'all'");
    verify->add_option("--seed", cmd.seed, "seed for randomized suites");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw UsageError(app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help(), true);
    } catch (const CLI::CallForVersion&) {
        throw UsageError(std::string(kVersion) + "\n", true);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    const std::string name = app.get_subcommands().front()->get_name();
    const std::pair<const char*, CommandKind> kinds[] = {
        {"classify", CommandKind::Classify}, {"trace-max", CommandKind::TraceMax}, {"chi", CommandKind::Chi},
        {"jsr", CommandKind::Jsr},           {"slope", CommandKind::Slope},       {"sweep", CommandKind::Sweep},
        {"hunt", CommandKind::Hunt},         {"verify", CommandKind::Verify}};
    for (const auto& [n, k] : kinds)
        if (name == n) cmd.kind = k;

    if (cmd.format == "csv" && cmd.kind != CommandKind::TraceMax && cmd.kind != CommandKind::Sweep)
        throw UsageError("--format csv: only trace-max and sweep have a CSV form");
    if (cmd.kind == CommandKind::TraceMax && (cmd.l > cmd.n || cmd.n > 24))
        throw UsageError("-l/-n: need l <= n <= 24");
    if (cmd.kind == CommandKind::Verify && cmd.suite != "all") {
        const auto names = suite_names();
        if (std::find(names.begin(), names.end(), cmd.suite) == names.end())
            throw UsageError("--suite: unknown suite '" + cmd.suite + "'");
    }
    return cmd;
}

// ---- execution ----------------------------------------------------------------------------------

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

PairInput load_pair(const std::string& source, std::istream& in) {
    if (source.empty()) return {golden_pair(), {}};
    std::string text;
    if (source == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else if (source.find('{') != std::string::npos) {
        text = source;
    } else {
        std::ifstream f(source);
        if (!f) throw InputError("--pair: cannot open '" + source + "'");
        text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
    try {
        return parse_pair_text(text);
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("--pair: ") + e.what());
    }
}

Rational parse_value(const std::string& flag, const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

std::pair<Rational, Rational> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("--t-range: expected LO:HI, got '" + text + "'");
    return {parse_value("--t-range", text.substr(0, colon)), parse_value("--t-range", text.substr(colon + 1))};
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, sep);) out.push_back(part);
    return out;
}

std::vector<Rational> parse_grid(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    if (colon == std::string::npos) throw UsageError("--grid: expected geom:LO:HI:N, lin:LO:HI:N or list:...");
    const std::string rest = spec.substr(colon + 1);
    if (kind == "list") {
        std::vector<Rational> out;
        for (const auto& part : split(rest, ',')) out.push_back(parse_value("--grid", part));
        return out;
    }
    const auto parts = split(rest, ':');
    if ((kind != "geom" && kind != "lin") || parts.size() != 3)
        throw UsageError("--grid: expected geom:LO:HI:N, lin:LO:HI:N or list:..., got '" + spec + "'");
    const Rational lo = parse_value("--grid", parts[0]), hi = parse_value("--grid", parts[1]);
    std::size_t n = 0;
    try {
        n = std::stoul(parts[2]);
    } catch (const std::exception&) {
        throw UsageError("--grid: bad point count '" + parts[2] + "'");
    }
    if (n == 0 || n > 100000) throw UsageError("--grid: point count must be in [1, 100000]");
    if (sgn(lo) <= 0 || hi < lo) throw UsageError("--grid: need 0 < LO <= HI");
    if (kind == "geom") return geometric_grid(lo.get_d(), hi.get_d(), n);
    std::vector<Rational> out;
    for (std::size_t k = 0; k < n; ++k)
        out.push_back(n == 1 ? lo : lo + (hi - lo) * Rational(static_cast<unsigned long>(k)) / static_cast<unsigned long>(n - 1));
    return out;
}

Json echo(const Command& c) {
    Json e{{"name", to_string(c.kind)}, {"format", c.format}};
    if (c.kind != CommandKind::Verify) e["pair_source"] = c.pair_source.empty() ? "default" : c.pair_source;
    switch (c.kind) {
        case CommandKind::Classify: break;
        case CommandKind::TraceMax: e["l"] = c.l, e["n"] = c.n; break;
        case CommandKind::Chi: e["slope"] = c.slope, e["max_den"] = c.max_den; break;
        case CommandKind::Jsr: e["depth"] = c.depth; break;
        case CommandKind::Slope: e["max_den"] = c.max_den; break;
        case CommandKind::Sweep: e["grid"] = c.grid, e["max_den"] = c.max_den; break;
        case CommandKind::Hunt:
            e["target"] = c.target, e["t_range"] = c.t_range, e["tol"] = c.tol, e["max_den"] = c.max_den;
            break;
        case CommandKind::Verify: e["suite"] = c.suite, e["seed"] = c.seed; break;
    }
    return e;
}

struct Produced {
    Json outputs;
    std::string csv;
    bool failed = false;  // verify only
};

Produced execute(const Command& c, const MatrixPair& pair) {
    Produced p;
    switch (c.kind) {
        case CommandKind::Classify: {
            const PairAnalysis a = analyze(pair);
            p.outputs = to_json(a);
            if (is_balanced_class(a.cls)) p.outputs["T"] = to_json(normal_form_conjugator(pair));
            break;
        }
        case CommandKind::TraceMax: {
            const TraceTable t = trace_argmax(pair, c.l, c.n);
            p.outputs = to_json(t);
            p.csv = trace_table_csv(t);
            break;
        }
        case CommandKind::Chi: {
            const Rational alpha = parse_value("--slope", c.slope);
            if (alpha < 0 || alpha > 1) throw UsageError("--slope: must lie in [0, 1]");
            if (c.slope.find('/') != std::string::npos || alpha.get_den() <= c.max_den) {
                const SlopeFraction s(alpha.get_num().get_ui(), alpha.get_den().get_ui());
                p.outputs = to_json(chi_rational(pair, s));
            } else {
                p.outputs = to_json(chi_irrational_approx(pair, alpha, c.max_den));
                p.outputs["alpha"] = to_json(alpha);
            }
            break;
        }
        case CommandKind::Jsr: p.outputs = to_json(jsr_bounds(pair, c.depth)); break;
        case CommandKind::Slope: p.outputs = to_json(maximize_slope(pair, c.max_den)); break;
        case CommandKind::Sweep: {
            const auto records = sweep_family(pair.A, pair.B, parse_grid(c.grid), c.max_den, c.workers);
            Json recs = Json::array(), plateaus = Json::array();
            for (const auto& r : records) recs.push_back(to_json(r));
            for (const auto& pl : locking_plateaus(records)) plateaus.push_back(to_json(pl));
            p.outputs = {{"records", recs}, {"plateaus", plateaus}};
            p.csv = sweep_csv(records);
            break;
        }
        case CommandKind::Hunt: {
            const auto [lo, hi] = parse_range(c.t_range);
            const HuntResult h = hunt_bracket(pair.A, pair.B, parse_value("--target", c.target), lo, hi, c.max_den,
                                              parse_value("--tol", c.tol));
            p.outputs = to_json(h);
            break;
        }
        case CommandKind::Verify: {
            const std::vector<std::string> names = c.suite == "all" ? suite_names() : std::vector<std::string>{c.suite};
            Json suites = Json::array();
            bool all = true;
            for (const auto& n : names) {
                const SuiteReport r = run_suite(n, c.seed, c.workers);
                all = all && r.passed();
                suites.push_back(to_json(r));
            }
            p.outputs = {{"suites", suites}, {"passed", all}};
            p.failed = !all;
            break;
        }
    }
    return p;
}

}  // namespace

Outcome run_command(const Command& cmd, std::istream& in) {
    Outcome o;
    try {
        const auto start = std::chrono::steady_clock::now();
        PairInput input;
        if (cmd.kind != CommandKind::Verify) input = load_pair(cmd.pair_source, in);
        const Produced p = execute(cmd, input.pair);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        const Json command = echo(cmd);
        Json digest_input{{"command", command}};
        if (cmd.kind != CommandKind::Verify) digest_input["pair"] = to_json(input.pair);
        Json doc{{"command", command},
                 {"inputs_digest", "fnv1a64:" + fnv1a_hex(dump_canonical(digest_input))},
                 {"outputs", p.outputs},
                 {"version", kVersion}};
        if (!input.warnings.empty()) doc["warnings"] = input.warnings;
        if (cmd.timings) doc["timings"] = {{"wall_seconds", seconds}};
        for (const auto& w : input.warnings) o.err += "warning: " + w + "\n";

        o.out = cmd.format == "csv" ? p.csv : dump_canonical(doc);
        o.exit_code = p.failed ? 1 : 0;
    } catch (const UsageError& e) {
        o = {2, "", error_document("usage", e.what())};
    } catch (const InputError& e) {
        o = {3, "", error_document("input", e.what())};
    } catch (const std::invalid_argument& e) {
        o = {4, "", error_document("domain", e.what())};
    } catch (const std::exception& e) {
        o = {5, "", error_document("internal", e.what())};
    }
    return o;
}

Outcome run_cli(const std::vector<std::string>& args, std::istream& in) {
    Command cmd;
    try {
        cmd = parse_command(args);
    } catch (const UsageError& e) {
        if (e.help) return {0, e.what(), ""};
        return {2, "", error_document("usage", e.what())};
    }
    return run_command(cmd, in);
}

}  // namespace sturmian
