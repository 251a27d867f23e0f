#include "sturmian/cli.hpp"
#include "sturmian/verify.hpp"

#include <doctest.h>

#include <sstream>

using namespace sturmian;

namespace {

Outcome run(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    return run_cli(args, in);
}

Json parsed(const Outcome& o) { return Json::parse(o.out); }

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("argument parsing") {
        const Command c = parse_command({"trace-max", "-l", "2", "-n", "4", "--format", "csv"});
        CHECK(c.kind == CommandKind::TraceMax);
        CHECK(c.l == 2);
        CHECK(c.n == 4);
        CHECK(c.format == "csv");
        const Command s = parse_command({"slope", "--max-den", "500"});
        CHECK(s.max_den == 500);
        CHECK(s.pair_source.empty());
        CHECK_THROWS_AS(parse_command({"slope", "--bogus"}), UsageError);
        CHECK_THROWS_AS(parse_command({"jsr", "--format", "csv"}), UsageError);
        CHECK_THROWS_AS(parse_command({"trace-max", "-l", "5", "-n", "4"}), UsageError);
        CHECK_THROWS_AS(parse_command({"verify", "--suite", "nope"}), UsageError);
        CHECK_THROWS_AS(parse_command({}), UsageError);
    }

    TEST_CASE("exit codes") {
        CHECK(run({"slope", "--bogus"}).exit_code == 2);
        CHECK(run({"--help"}).exit_code == 0);
        const Outcome bad_json = run({"classify", "--pair", "-"}, "{not json");
        CHECK(bad_json.exit_code == 3);
        CHECK(Json::parse(bad_json.err)["error"]["kind"] == "input");
        CHECK(run({"classify", "--pair", "/nonexistent/pair.json"}).exit_code == 3);
        const Outcome crossing = run({"slope", "--pair", R"({"A": [[2, 0], [0, 1]], "B": [[1, 1], [1, 2]]})"});
        CHECK(crossing.exit_code == 4);
        CHECK(run({"classify", "--pair", R"({"A": [[1, 0], [0, -1]], "B": [[1, 1], [0, 1]]})"}).exit_code == 4);
    }

    TEST_CASE("document shape") {
        const Outcome o = run({"slope"});
        REQUIRE(o.exit_code == 0);
        const Json d = parsed(o);
        CHECK(d["command"]["name"] == "slope");
        CHECK(d["command"]["pair_source"] == "default");
        CHECK(d["version"] == kVersion);
        CHECK(d["outputs"]["tau"] == "1/2");
        CHECK(d["outputs"]["certified"] == true);
        CHECK(d["inputs_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
        CHECK_FALSE(d.contains("warnings"));
        CHECK_FALSE(d.contains("timings"));
        CHECK(o.out.back() == '\n');
    }

    TEST_CASE("output is deterministic and round-trips") {
        for (const std::vector<std::string>& args :
             {std::vector<std::string>{"classify"}, {"chi", "--slope", "2/5"}, {"jsr", "--depth", "6"},
              {"trace-max", "-l", "2", "-n", "5"}, {"sweep", "--grid", "list:1/2,1,2", "--max-den", "50"}}) {
            const Outcome a = run(args), b = run(args);
            REQUIRE(a.exit_code == 0);
            CHECK(a.out == b.out);
            CHECK(dump_canonical(Json::parse(a.out)) == a.out);
        }
        const Outcome w1 = run({"sweep", "--grid", "lin:1/2:2:7", "--max-den", "40", "--workers", "1"});
        const Outcome w4 = run({"sweep", "--grid", "lin:1/2:2:7", "--max-den", "40", "--workers", "4"});
        CHECK(w1.out == w4.out);
    }

    TEST_CASE("csv forms") {
        const Outcome t = run({"trace-max", "-l", "2", "-n", "4", "--format", "csv"});
        REQUIRE(t.exit_code == 0);
        std::size_t lines = 0;
        for (char ch : t.out) lines += ch == '\n';
        CHECK(lines == 7);
        CHECK(t.out.rfind("word,trace_num,trace_den,is_cyclic_balanced,is_maximizer\n", 0) == 0);
        CHECK(t.out.find("0101,7,1,true,true\n") != std::string::npos);
        CHECK(sweep_csv({}) == "t,tau_num,tau_den,chi,jsr_lower\n");
    }

    TEST_CASE("float entries warn") {
        const Outcome o = run({"classify", "--pair", R"({"A": [[1.0, 1], [0, 1]], "B": [[1, 0], [1, 1]]})"});
        REQUIRE(o.exit_code == 0);
        const Json d = parsed(o);
        REQUIRE(d.contains("warnings"));
        CHECK(d["outputs"]["class"] == "parabolic_pair");
    }

    TEST_CASE("chi with decimal slope uses convergents") {
        const Json d = parsed(run({"chi", "--slope", "0.3819660112501051", "--max-den", "100"}));
        CHECK(d["outputs"].contains("alpha"));
        CHECK(d["outputs"].contains("convergents"));
    }

    TEST_CASE("canonical json") {
        CHECK(format_double(-0.0) == "0");
        CHECK(format_double(0.1) == "0.10000000000000001");
        CHECK(dump_canonical(Json{{"b", 1}, {"a", {1, 2}}}) == "{\n  \"a\": [1, 2],\n  \"b\": 1\n}\n");
        CHECK(fnv1a_hex("") == "cbf29ce484222325");
        CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    }

    TEST_CASE("verify subcommand") {
        const Outcome o = run({"verify", "--suite", "words"});
        CHECK(o.exit_code == 0);
        CHECK(parsed(o)["outputs"]["suites"][0]["name"] == "words");
    }
}
