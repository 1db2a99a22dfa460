#include <catch2/catch_amalgamated.hpp>

#include <fstream>

#include <nlohmann/json.hpp>

#include "schema_check.hpp"
#include "subprocess.hpp"

using nlohmann::json;
using testsupport::run_process;

namespace {
const std::string kCli = SINGLAB_CLI_PATH;

json parse_stdout(const testsupport::RunResult& r) {
    INFO("stdout: " << r.out << "\nstderr: " << r.err);
    return json::parse(r.out);
}

json parse_stderr(const testsupport::RunResult& r) {
    INFO("stdout: " << r.out << "\nstderr: " << r.err);
    return json::parse(r.err);
}

json load_schema(const char* name) {
    std::ifstream in(std::string(SINGLAB_SOURCE_DIR) + "/data/" + name);
    REQUIRE(in);
    return json::parse(in);
}
}  // namespace

TEST_CASE("analyze: success path") {
    auto r = run_process(kCli, {"analyze", "x^2+y^2+z^2"});
    REQUIRE(r.exit_code == 0);
    json j = parse_stdout(r);
    CHECK(j["report"]["verdict"] == "InfiniteOrderSymp");
    CHECK(j["milnor"]["mu"] == 1);
    CHECK(j["weights"]["beta"] == 2);

    auto violations = testsupport::schema_violations(load_schema("analysis.schema.json"), j);
    for (const auto& v : violations) UNSCOPED_INFO(v);
    CHECK(violations.empty());
}

TEST_CASE("analyze: table format") {
    auto r = run_process(kCli, {"analyze", "x^3+y^5+z^2", "--format", "table"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("verdict") != std::string::npos);
    CHECK(r.out.find("InfiniteOrderSymp") != std::string::npos);
}

TEST_CASE("analyze: mathematical rejections exit 2 with machine-readable errors") {
    // underdetermined weights fire before the staircase test
    auto r1 = run_process(kCli, {"analyze", "x^2*y^2"});
    CHECK(r1.exit_code == 2);
    json e1 = parse_stderr(r1);
    CHECK(e1["error"]["type"] == "NonUnique");

    // with explicit weights the non-isolation is the finding
    auto r2 = run_process(kCli, {"analyze", "x^2*y^2", "--weights", "1,1:4"});
    CHECK(r2.exit_code == 2);
    CHECK(parse_stderr(r2)["error"]["type"] == "NonIsolated");

    auto r3 = run_process(kCli, {"analyze", "x*y"});
    CHECK(r3.exit_code == 2);
    json e3 = parse_stderr(r3);
    CHECK(e3["error"]["type"] == "NonUnique");
    CHECK(e3["error"]["message"].get<std::string>().find("weight") != std::string::npos);

    auto r4 = run_process(kCli, {"analyze", "x^2 +"});
    CHECK(r4.exit_code == 2);
    CHECK(parse_stderr(r4)["error"]["type"] == "ParseError");
}

TEST_CASE("analyze: explicit weights make x*y analyzable (n = 1)") {
    auto r = run_process(kCli, {"analyze", "x*y", "--weights", "1,1:2"});
    REQUIRE(r.exit_code == 0);
    CHECK(parse_stdout(r)["report"]["verdict"] == "NotApplicable");
}

TEST_CASE("spectrum subcommand") {
    auto r = run_process(kCli, {"spectrum", "x^3+y^5+z^2"});
    REQUIRE(r.exit_code == 0);
    json j = parse_stdout(r);
    CHECK(j["mu"] == 8);
    CHECK(j["spectrum"][0] == "1/30");
}

TEST_CASE("compare subcommand") {
    auto r1 = run_process(kCli, {"compare", "x^2+y^2+z^2", "z^2+x^2+y^2"});
    REQUIRE(r1.exit_code == 0);
    CHECK(parse_stdout(r1)["equivalent"] == true);

    auto r2 = run_process(kCli, {"compare", "x^2+y^2+z^2", "x^3+y^3+z^3"});
    REQUIRE(r2.exit_code == 0);
    json j2 = parse_stdout(r2);
    CHECK(j2["equivalent"] == false);
    CHECK(j2["same_weights"] == false);
    CHECK(j2["same_spectrum"] == false);

    auto r3 = run_process(kCli, {"compare", "x^", "x^2+y^2+z^2"});
    CHECK(r3.exit_code == 2);
    json e3 = parse_stderr(r3);
    CHECK(e3["error"]["side"] == "left");
}

TEST_CASE("verify-winding: pass cases and usage errors") {
    auto r1 = run_process(kCli, {"verify-winding", "x^2+y^2+z^2", "--m", "1", "--points", "4",
                                 "--seed", "7"});
    REQUIRE(r1.exit_code == 0);
    json j1 = parse_stdout(r1);
    CHECK(j1["pass"] == true);
    CHECK(j1["predicted_winding"] == 1);
    for (const auto& p : j1["points"]) CHECK(p["winding"] == 1);

    auto violations = testsupport::schema_violations(load_schema("winding.schema.json"), j1);
    for (const auto& v : violations) UNSCOPED_INFO(v);
    CHECK(violations.empty());

    auto r2 = run_process(kCli, {"verify-winding", "x^3+y^3+z^3", "--m", "2", "--points", "2",
                                 "--seed", "5"});
    REQUIRE(r2.exit_code == 0);
    json j2 = parse_stdout(r2);
    CHECK(j2["pass"] == true);
    CHECK(j2["predicted_winding"] == 0);

    auto r3 = run_process(kCli, {"verify-winding", "x^2+y^2+z^2", "--m", "0"});
    CHECK(r3.exit_code == 1);
}

TEST_CASE("verify-winding: identical seeds give identical output modulo timing") {
    const std::vector<std::string> args = {"verify-winding", "x^2+y^2+z^2", "--m", "1",
                                           "--points", "2",  "--seed",      "42"};
    auto r1 = run_process(kCli, args);
    auto r2 = run_process(kCli, args);
    REQUIRE(r1.exit_code == 0);
    REQUIRE(r2.exit_code == 0);
    json j1 = parse_stdout(r1), j2 = parse_stdout(r2);
    j1.erase("timing_ms");
    j2.erase("timing_ms");
    CHECK(j1.dump() == j2.dump());
}

TEST_CASE("thread cap does not change results") {
    const std::vector<std::string> args = {"verify-winding", "x^3+y^5+z^2", "--m", "1",
                                           "--points", "4",  "--seed",      "9"};
    auto serial = run_process(kCli, args, {"SINGLAB_THREADS=1"});
    auto wide = run_process(kCli, args, {"SINGLAB_THREADS=8"});
    REQUIRE(serial.exit_code == 0);
    REQUIRE(wide.exit_code == 0);
    json j1 = parse_stdout(serial), j2 = parse_stdout(wide);
    j1.erase("timing_ms");
    j2.erase("timing_ms");
    CHECK(j1.dump() == j2.dump());

    auto run = run_process(kCli, {"catalog", "--run"}, {"SINGLAB_THREADS=1"});
    CHECK(run.exit_code == 0);
}

TEST_CASE("transport-check stays on the fiber") {
    auto r = run_process(kCli, {"transport-check", "x^2+y^2+z^2", "--points", "2", "--steps",
                                "1024", "--seed", "3"});
    REQUIRE(r.exit_code == 0);
    json j = parse_stdout(r);
    CHECK(j["pass"] == true);
    CHECK(j["max_final_residual"].get<double>() <= 1e-8);
}

TEST_CASE("catalog listing, dump, and regression run") {
    auto r1 = run_process(kCli, {"catalog"});
    REQUIRE(r1.exit_code == 0);
    std::size_t lines = 0;
    for (char c : r1.out)
        if (c == '\n') ++lines;
    CHECK(lines >= 10);

    auto r2 = run_process(kCli, {"catalog", "--dump"});
    REQUIRE(r2.exit_code == 0);
    CHECK(json::parse(r2.out).contains("entries"));

    auto r3 = run_process(kCli, {"catalog", "--run"});
    INFO(r3.err);
    CHECK(r3.exit_code == 0);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run_process(kCli, {}).exit_code == 1);
    CHECK(run_process(kCli, {"analyze"}).exit_code == 1);
    CHECK(run_process(kCli, {"no-such-command"}).exit_code == 1);
    CHECK(run_process(kCli, {"analyze", "x^2+y^2+z^2", "--format", "yaml"}).exit_code == 1);
}
