#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>

#include "json.hpp"

// FLAGCHERN_CLI_PATH is injected by the build: the absolute path of the
// command-line binary under test.

namespace {

using nlohmann::json;

enum class Capture { Stdout, Merged, StderrOnly };

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args, Capture capture = Capture::Merged,
                  const std::string& env_prefix = "") {
    std::string cmd = env_prefix + "'" + FLAGCHERN_CLI_PATH + "' " + args;
    switch (capture) {
        case Capture::Stdout: cmd += " 2>/dev/null"; break;
        case Capture::Merged: cmd += " 2>&1"; break;
        case Capture::StderrOnly: cmd += " 2>&1 1>/dev/null"; break;
    }
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe)) {
        result.output.append(buffer, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("chern subcommand prints the known values") {
    const RunResult a = run_cli("chern --dims 1,1,2 --partition 1,1,1,1,1");
    CHECK(a.exit_code == 0);
    CHECK(contains(a.output, "c_(1,1,1,1,1) = 4500"));
    CHECK(contains(a.output, "F(1,1,2)"));

    const RunResult b = run_cli("chern --dims 1,2,1 --partition 1,1,1,1,1");
    CHECK(b.exit_code == 0);
    CHECK(contains(b.output, "= 4860"));
}

TEST_CASE("chern JSON output carries the envelope and the exact value") {
    const RunResult r =
        run_cli("chern --dims 1,1,2 --partition 1,1,1,1,1 --format json", Capture::Stdout);
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.output);
    CHECK(j.at("command") == "chern");
    CHECK(j.at("dims") == json::array({1, 1, 2}));
    CHECK(j.at("N") == 4);
    CHECK(j.at("d") == 5);
    CHECK(j.at("count") == "12");
    CHECK(j.at("seed") == "0");
    CHECK(j.at("results").at(0).at("value") == "4500");
    // Exact rationals ride as strings; the trail records every assignment.
    CHECK(j.at("results").at(0).at("trail").size() == 6);
    CHECK(j.at("results").at(0).at("trail").at(0).at("value") == "4500");
}

TEST_CASE("JSON output is byte-identical across worker counts and repeated runs") {
    const std::string args = "chern --dims 1,1,2 --partition 2,1,1,1 --format json";
    const RunResult w1 = run_cli(args + " --workers 1", Capture::Stdout);
    const RunResult w2 = run_cli(args + " --workers 2", Capture::Stdout);
    const RunResult w8 = run_cli(args + " --workers 8", Capture::Stdout);
    const RunResult again = run_cli(args + " --workers 8", Capture::Stdout);
    CHECK(w1.exit_code == 0);
    CHECK(w1.output == w2.output);
    CHECK(w1.output == w8.output);
    CHECK(w8.output == again.output);
    CHECK(!contains(w1.output, "workers"));  // worker count must not leak into output
}

TEST_CASE("appendix reproduces the reference table") {
    const RunResult r = run_cli("appendix");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "12/12 rows match, c1^5=4500, c1^6 sum=0"));
    CHECK(contains(r.output, "({1},{2},{3,4})"));
    CHECK(contains(r.output, "({4},{3},{1,2})"));

    const RunResult csv = run_cli("appendix --format csv", Capture::Stdout);
    CHECK(csv.exit_code == 0);
    CHECK(contains(csv.output, "I,W,e,c1"));
    // Header plus twelve rows.
    CHECK(std::count(csv.output.begin(), csv.output.end(), '\n') == 13);
    CHECK(contains(csv.output, "1;2;3 4,1 2 3 1 2,12,9"));
}

TEST_CASE("appendix accepts an external golden file and reports tampering") {
    const RunResult jr = run_cli("appendix --format json", Capture::Stdout);
    REQUIRE(jr.exit_code == 0);
    json golden = json::parse(jr.output);

    const std::filesystem::path ok_path = temp_file("flagchern_golden_ok.json");
    std::ofstream(ok_path) << golden.dump();
    const RunResult ok = run_cli("appendix --golden '" + ok_path.string() + "'");
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.output, "12/12 rows match"));

    golden["results"][0]["rows"][9]["c1"] = "3";  // flip the sign of row 10
    const std::filesystem::path bad_path = temp_file("flagchern_golden_bad.json");
    std::ofstream(bad_path) << golden.dump();
    const RunResult bad = run_cli("appendix --golden '" + bad_path.string() + "'",
                                  Capture::StderrOnly);
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.output, "--- golden"));
    CHECK(contains(bad.output, "+++ computed"));
    CHECK(contains(bad.output, "@@ row 10"));
    CHECK(contains(bad.output, "-c1 = 3"));
    CHECK(contains(bad.output, "+c1 = -3"));

    std::filesystem::remove(ok_path);
    std::filesystem::remove(bad_path);
}

TEST_CASE("euler subcommand") {
    const RunResult r = run_cli("euler --dims 3,2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "euler(F(3,2)) = 10"));

    const RunResult j = run_cli("euler --dims 1,1,1,1,1 --format json", Capture::Stdout);
    CHECK(json::parse(j.output).at("results").at(0).at("value") == "120");
}

TEST_CASE("verify subcommand confirms the structural identities") {
    CHECK(run_cli("verify --dims 1,1,2 --poly e1^4 --mode vanishing").exit_code == 0);
    CHECK(run_cli("verify --dims 1,1,2 --poly \"e1*e2 - 3*p3\" --mode vanishing").exit_code == 0);
    const RunResult c = run_cli("verify --dims 1,1,2 --poly e1^5 --mode constant");
    CHECK(c.exit_code == 0);
    CHECK(contains(c.output, "Constant(4500)"));
    CHECK(run_cli("verify --dims 1,2,1 --mode futaki").exit_code == 0);
    CHECK(run_cli("verify --dims 2,2 --mode top-c1").exit_code == 0);
}

TEST_CASE("verify degree preconditions exit with code 2") {
    const RunResult high = run_cli("verify --dims 1,1,2 --poly e1^6 --mode vanishing",
                                   Capture::StderrOnly);
    CHECK(high.exit_code == 2);
    CHECK(contains(high.output, "degree"));

    CHECK(run_cli("verify --dims 1,1,2 --poly e1^2 --mode constant").exit_code == 2);
    CHECK(run_cli("verify --dims 1,1,2 --poly \"e1+e2\" --mode vanishing").exit_code == 2);
    // Fixed-polynomial modes reject a user polynomial.
    CHECK(run_cli("verify --dims 1,1,2 --mode futaki --poly e1").exit_code == 2);
    // Vanishing and constant modes require one.
    CHECK(run_cli("verify --dims 1,1,2 --mode vanishing").exit_code == 2);
}

TEST_CASE("allow-high-degree computes raw assignment-dependent residues") {
    const RunResult r =
        run_cli("verify --dims 1,1,2 --poly e1^7 --mode vanishing --allow-high-degree");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "assignment-dependent, no geometric meaning"));

    const RunResult j = run_cli(
        "verify --dims 1,1,2 --poly e1^7 --mode vanishing --allow-high-degree --format json",
        Capture::Stdout);
    CHECK(j.exit_code == 0);
    CHECK(json::parse(j.output).at("results").at(0).at("note") ==
          "assignment-dependent, no geometric meaning");
}

TEST_CASE("weights subcommand lists the decomposition table") {
    const RunResult r = run_cli("weights --dims 1,2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "({1},{2,3})"));

    const RunResult csv = run_cli("weights --dims 1,1,2 --format csv", Capture::Stdout);
    CHECK(csv.exit_code == 0);
    CHECK(contains(csv.output, "I,W,e,c1"));
    CHECK(contains(csv.output, "1;2;3 4,1 2 3 1 2,12,9"));
    CHECK(contains(csv.output, "4;3;1 2,-1 -3 -2 -2 -1,-12,-9"));

    // Rational assignments are accepted.
    const RunResult q = run_cli("weights --dims 1,2 --assign 1/2,3,-2 --format csv",
                                Capture::Stdout);
    CHECK(q.exit_code == 0);
    CHECK(contains(q.output, "5/2"));
}

TEST_CASE("weights --numeric-oracle cross-checks every row") {
    const RunResult r = run_cli("weights --dims 1,1,2 --numeric-oracle --assign 3,-1,4,7");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "match"));
    CHECK(!contains(r.output, "mismatch"));

    // The oracle works on integer assignments only.
    CHECK(run_cli("weights --dims 1,2 --assign 1/2,1,2 --numeric-oracle").exit_code == 2);
}

TEST_CASE("seed can come from the environment") {
    const RunResult via_flag =
        run_cli("chern --dims 1,2 --partition 1,1 --seed 7 --format json", Capture::Stdout);
    const RunResult via_env = run_cli("chern --dims 1,2 --partition 1,1 --format json",
                                      Capture::Stdout, "FLAGCHERN_SEED=7 ");
    CHECK(via_flag.exit_code == 0);
    CHECK(via_flag.output == via_env.output);

    const RunResult other =
        run_cli("chern --dims 1,2 --partition 1,1 --seed 8 --format json", Capture::Stdout);
    CHECK(via_flag.output != other.output);  // different trail
    CHECK(json::parse(via_flag.output).at("results").at(0).at("value") ==
          json::parse(other.output).at("results").at(0).at("value"));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("bogus").exit_code == 2);
    CHECK(run_cli("chern --partition 1,1").exit_code == 2);             // missing --dims
    CHECK(run_cli("chern --dims 1,1,2 --partition 1,1").exit_code == 2);  // weight != d
    CHECK(run_cli("chern --dims 4 --partition 1,1").exit_code == 2);    // single block
    CHECK(run_cli("chern --dims 1,0 --partition 1").exit_code == 2);    // zero part
    CHECK(run_cli("verify --dims 1,1,2 --poly \"e1^\" --mode vanishing").exit_code == 2);
    CHECK(run_cli("verify --dims 1,1,2 --poly e0 --mode vanishing").exit_code == 2);
    CHECK(run_cli("chern --dims 1,1,2 --partition 1,1,1,1,1 --format yaml").exit_code == 2);
    CHECK(run_cli("weights --dims 1,2 --assign 1,2").exit_code == 2);   // wrong length
    CHECK(run_cli("weights --dims 1,2 --assign 1,1,2").exit_code == 2); // duplicate values
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("chern --help").exit_code == 0);
    const RunResult r = run_cli("--help");
    CHECK(contains(r.output, "chern"));
    CHECK(contains(r.output, "appendix"));
}

TEST_CASE("decomposition ceiling guards runaway enumerations") {
    const RunResult r = run_cli(
        "chern --dims 1,1,1,1,1 --partition 1,1,1,1,1,1,1,1,1,1 --max-decompositions 100",
        Capture::StderrOnly);
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "decomposition"));
}
