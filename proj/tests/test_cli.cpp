#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgla/cli.hpp"
#include "dgla/fixture.hpp"

#include <json.hpp>

using namespace dgla;

#ifndef DGLA_FIXTURE_DIR
#define DGLA_FIXTURE_DIR "fixtures"
#endif

namespace {

std::string fx(const std::string& name) { return std::string(DGLA_FIXTURE_DIR) + "/" + name; }

CliResult run(std::vector<std::string> args) { return run_cli(args); }

}  // namespace

TEST_CASE("fixture parsing: unknown keys and malformed input are rejected with locations") {
    using nlohmann::json;

    CHECK_THROWS_WITH_AS(parse_fixture(json::parse(R"({"spaces": {}})")),
                         doctest::Contains("unknown key"), input_error);

    CHECK_THROWS_WITH_AS(
        parse_fixture(json::parse(R"({"space": {"dims": {"0": 1}, "extra": 3}})")),
        doctest::Contains("unknown key \"extra\""), input_error);

    CHECK_THROWS_WITH_AS(parse_fixture(json::parse(R"({"space": {"dims": {"zero": 1}}})")),
                         doctest::Contains("bad degree key"), input_error);

    // rationals must be canonical strings
    CHECK_THROWS_WITH_AS(
        parse_fixture(json::parse(
            R"({"space": {"dims": {"0": 1, "1": 1}}, "differential": {"0": [[0.5]]}})")),
        doctest::Contains("rationals are strings"), input_error);
    CHECK_THROWS_WITH_AS(
        parse_fixture(json::parse(
            R"({"space": {"dims": {"0": 1, "1": 1}}, "differential": {"0": [["1/0"]]}})")),
        doctest::Contains("zero denominator"), input_error);

    // shape mismatches carry their location
    CHECK_THROWS_WITH_AS(
        parse_fixture(json::parse(
            R"({"space": {"dims": {"0": 2, "1": 1}}, "differential": {"0": [["1"]]}})")),
        doctest::Contains("differential[0]"), input_error);

    // a parse that works
    Fixture f = parse_fixture(json::parse(R"({
        "space": {"dims": {"0": 3}, "names": {"0": ["h","e","f"]}},
        "bracket": [{"i":0,"j":0,"a":0,"b":1,"value":["0","2","0"]},
                     {"i":0,"j":0,"a":1,"b":0,"value":["0","-2","0"]}]
    })"));
    CHECK(f.main.space.dim(0) == 3);
    CHECK(f.main.br(elt_basis(f.main.space, 0, 0), elt_basis(f.main.space, 0, 1)).v ==
          Vec{Rat(0), Rat(2), Rat(0)});
}

TEST_CASE("CLI exit codes: pass = 0, math failure = 1, input error = 2") {
    CHECK(run({"check", fx("sl2.json")}).exit_code == 0);
    CHECK(run({"check", fx("sl2_broken_jacobi.json")}).exit_code == 1);
    CHECK(run({"check", fx("no_such_file.json")}).exit_code == 2);
    CHECK(run({"bogus-command", fx("sl2.json")}).exit_code == 2);

    CliResult err = run({"--json", "check", fx("no_such_file.json")});
    auto doc = nlohmann::json::parse(err.output);
    CHECK(doc["status"] == "error");
}

TEST_CASE("shipped corpus classification") {
    struct Entry {
        std::vector<std::string> args;
        int expect;
    };
    const std::vector<Entry> table = {
        {{"check", fx("abelian.json")}, 0},
        {{"check", fx("sl2.json")}, 0},
        {{"check", fx("sl2_broken_jacobi.json")}, 1},
        {{"cohomology", fx("contractible.json")}, 0},
        {{"cohomology", fx("threedim.json")}, 0},
        {{"btt", fx("btt_minimal.json")}, 0},
        {{"btt", fx("btt_h2_nonzero.json")}, 0},
        {{"btt", fx("btt_broken3.json")}, 1},
        {{"btt", fx("btt_broken4.json")}, 1},
        {{"btt", fx("btt_sl2.json")}, 1},
        {{"btt", fx("btt_relaxed_only.json")}, 1},
        {{"btt-relaxed", fx("btt_relaxed_only.json")}, 0},
        {{"btt-relaxed", fx("btt_relaxed_failed.json")}, 1},
        {{"fiber", fx("fiber_sl2_line.json")}, 0},
        {{"fiber", fx("fiber_h1_only.json")}, 0},
        {{"bv", "check", fx("bv_delta_zero.json")}, 0},
        {{"bv", "pipeline", fx("bv_delta_zero.json"), "--order", "4"}, 0},
        {{"bv", "check", fx("bv_ddelta.json")}, 0},
        {{"bv", "degeneration", fx("bv_ddelta.json")}, 0},
        {{"bv", "pipeline", fx("bv_ddelta.json"), "--order", "4"}, 0},
        {{"bv", "check", fx("bv_exterior.json")}, 0},
        {{"bv", "degeneration", fx("bv_exterior.json")}, 1},
        {{"bv", "check", fx("bv_second_order.json")}, 0},
        {{"bv", "dgla", fx("bv_second_order.json")}, 0},
        {{"bv", "degeneration", fx("bv_second_order.json")}, 1},
        {{"bv", "check", fx("bv_unit_broken.json")}, 1},
        {{"coder", "q2", fx("coder_sl2.json")}, 0},
        {{"coder", "q2", fx("sl2_broken_jacobi.json")}, 1},
        {{"coder", "split", fx("coder_sl2.json")}, 1},
        {{"coder", "split", fx("coder_abelian.json")}, 0},
        {{"lietype", "check", fx("lietype_pi0.json")}, 0},
        {{"lietype", "dgla", fx("lietype_pi0.json")}, 0},
        {{"lietype", "btt", fx("lietype_pi0.json")}, 0},
        {{"lietype", "check", fx("lietype_pi1.json")}, 0},
        {{"lietype", "dgla", fx("lietype_pi1.json")}, 0},
        {{"lietype", "btt", fx("lietype_pi1.json")}, 1},
        {{"lietype", "check", fx("lietype_direct.json")}, 0},
        {{"lietype", "btt", fx("lietype_direct.json")}, 1},
        {{"mc", fx("mc_toy_obstructed.json")}, 1},
        {{"mc", fx("mc_toy_order3.json")}, 1},
        {{"mc", fx("mc_abelian.json")}, 0},
    };
    for (const auto& e : table) {
        CliResult r = run(e.args);
        INFO("command:", e.args[0], " ", e.args.size() > 1 ? e.args[1] : "");
        CHECK(r.exit_code == e.expect);
    }
}

TEST_CASE("btt failure hypotheses are identified in the report") {
    auto doc3 = nlohmann::json::parse(run({"--json", "btt", fx("btt_broken3.json")}).output);
    CHECK(doc3["result"]["verdict"] == "failed(hypothesis 3)");
    auto doc4 = nlohmann::json::parse(run({"--json", "btt", fx("btt_broken4.json")}).output);
    CHECK(doc4["result"]["verdict"] == "failed(hypothesis 4)");
    auto docs = nlohmann::json::parse(run({"--json", "btt", fx("btt_sl2.json")}).output);
    CHECK(docs["result"]["verdict"] == "failed(hypothesis 4)");
}

TEST_CASE("bv degeneration on the d = Delta fixture serializes witness chains") {
    auto doc = nlohmann::json::parse(
        run({"--json", "bv", "degeneration", fx("bv_ddelta.json")}).output);
    CHECK(doc["status"] == "pass");
    CHECK(doc["result"]["verdict"] == "holds");
    CHECK(doc["result"]["witnesses"].size() > 0);
}

TEST_CASE("machine reports are byte-identical across runs") {
    const std::vector<std::vector<std::string>> cmds = {
        {"--json", "check", fx("sl2_broken_jacobi.json")},
        {"--json", "cohomology", fx("threedim.json")},
        {"--json", "btt", fx("btt_minimal.json")},
        {"--json", "bv", "pipeline", fx("bv_ddelta.json"), "--order", "4"},
        {"--json", "coder", "split", fx("coder_sl2.json")},
        {"--json", "lietype", "btt", fx("lietype_pi0.json")},
        {"--json", "mc", fx("mc_toy_order3.json")},
        {"--json", "fiber", fx("fiber_sl2_line.json")},
    };
    for (const auto& c : cmds) {
        CliResult a = run(c), b = run(c);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
        CHECK(!a.output.empty());
    }
}
