#pragma once

#include "sturmian/serialize.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace sturmian {

inline constexpr const char* kVersion = "0.1.0";

enum class CommandKind { Classify, TraceMax, Chi, Jsr, Slope, Sweep, Hunt, Verify };
std::string to_string(CommandKind k);

struct Command {
    CommandKind kind = CommandKind::Classify;
    std::string pair_source;  // file path, "-" for stdin, inline JSON, or empty for (P1, P1ᵗ)
    std::string format = "json";
    std::size_t l = 0, n = 0;
    std::string slope;                      // chi: "p/q" exact, decimal via convergents
    std::size_t depth = 8;                  // jsr
    std::uint64_t max_den = 10000;          // chi, slope, sweep, hunt
    std::string grid = "geom:0.05:20:100";  // sweep
    std::string target, t_range, tol = "1e-6";  // hunt
    std::string suite = "all";              // verify
    std::uint64_t seed = 1;
    unsigned workers = 1;
    bool timings = false;
};

/// Bad command line. `help` is set for --help, with the text in what().
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg, bool help_request = false)
        : std::runtime_error(msg), help(help_request) {}
    bool help;
};

/// args excludes the program name. Throws UsageError naming the offending token.
Command parse_command(const std::vector<std::string>& args);

struct Outcome {
    int exit_code = 0;
    std::string out, err;
};

/// Runs a parsed command. Never throws: failures become a JSON error on `err` and a nonzero code
/// (2 usage, 3 input, 4 domain, 5 internal; `verify` returns 1 when a suite fails).
Outcome run_command(const Command& cmd, std::istream& in);

/// parse_command + run_command.
Outcome run_cli(const std::vector<std::string>& args, std::istream& in);

/// JSON error document for stderr.
std::string error_document(const std::string& kind, const std::string& message);

}  // namespace sturmian
