#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "jugs/cli.hpp"
#include "jugs/model.hpp"
#include "jugs/serialize.hpp"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = jugs::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("solve prints the classic nine-pour solution") {
    const CliResult r = run_cli({"solve", "--capacities", "10,7,3", "--start", "10,0,0"});
    CHECK(r.exit_code == jugs::cli::exit_solvable);
    CHECK(r.out.find("solvable in 9 pours") != std::string::npos);
    CHECK(r.out.find("final contents 5,5,0") != std::string::npos);
}

TEST_CASE("solve reports unsolvable instances with exit code 1") {
    const CliResult r = run_cli({"solve", "--capacities", "10,6,4", "--start", "10,0,0"});
    CHECK(r.exit_code == jugs::cli::exit_unsolvable);
    CHECK(r.out.find("no solution") != std::string::npos);
}

TEST_CASE("already-split starts solve in zero pours") {
    const CliResult r = run_cli({"solve", "--capacities", "10,7,3", "--start", "5,5,0"});
    CHECK(r.exit_code == jugs::cli::exit_solvable);
    CHECK(r.out.find("solvable in 0 pours") != std::string::npos);
}

TEST_CASE("input errors name the violated condition and exit with 2") {
    const CliResult odd = run_cli({"solve", "--capacities", "10,7,3", "--start", "9,0,0"});
    CHECK(odd.exit_code == jugs::cli::exit_input_error);
    CHECK(odd.err.find("odd-total") != std::string::npos);

    const CliResult ordering = run_cli({"solve", "--capacities", "4,4,2", "--start", "4,0,0"});
    CHECK(ordering.exit_code == jugs::cli::exit_input_error);
    CHECK(ordering.err.find("ordering") != std::string::npos);

    const CliResult half = run_cli({"solve", "--capacities", "7,3,2", "--start", "7,1,0"});
    CHECK(half.exit_code == jugs::cli::exit_input_error);
    CHECK(half.err.find("half-exceeds-b") != std::string::npos);

    const CliResult missing = run_cli({"solve", "--capacities", "10,7,3"});
    CHECK(missing.exit_code == jugs::cli::exit_input_error);

    const CliResult unknown = run_cli({"frobnicate"});
    CHECK(unknown.exit_code == jugs::cli::exit_input_error);
}

TEST_CASE("check answers without a path, on both successor relations") {
    const CliResult by_model = run_cli({"check", "--capacities", "8,5,3", "--start", "8,0,0"});
    CHECK(by_model.exit_code == jugs::cli::exit_solvable);
    CHECK(by_model.out == "solvable\n");

    const CliResult by_oracle = run_cli(
        {"check", "--capacities", "8,5,3", "--start", "8,0,0", "--successors", "oracle"});
    CHECK(by_oracle.exit_code == jugs::cli::exit_solvable);

    const CliResult no = run_cli({"check", "--capacities", "10,6,4", "--start", "10,0,0"});
    CHECK(no.exit_code == jugs::cli::exit_unsolvable);
    CHECK(no.out == "unsolvable\n");
}

TEST_CASE("graph emits DOT by default and structured on request") {
    const CliResult dot = run_cli({"graph", "--capacities", "7,4,2", "--start", "6,0,0"});
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.find("digraph") != std::string::npos);
    CHECK(dot.out.find("v_1_1 [label=\"(1,1)\"];") != std::string::npos);

    const CliResult json_out = run_cli(
        {"graph", "--capacities", "7,4,2", "--start", "6,0,0", "--format", "structured"});
    CHECK(json_out.exit_code == 0);
    const auto doc = jugs::Json::parse(json_out.out);
    CHECK(doc["format"] == "three-jug-graph");
    CHECK(doc["vertices"].size() == 15);
    CHECK(doc["edges"].size() == 60);

    // Round-trip through the CLI surface reproduces build_graph exactly.
    const auto reparsed = jugs::graph_from_json(doc);
    CHECK(reparsed == jugs::build_graph(jugs::validate_quadruple(7, 4, 2, 6)));

    const CliResult hidden = run_cli({"graph", "--capacities", "5,4,3", "--start", "1,4,3",
                                      "--format", "structured", "--hide-isolated"});
    CHECK(jugs::Json::parse(hidden.out)["vertices"].size() == 14);
}

TEST_CASE("solve supports structured output and explicit targets") {
    const CliResult r = run_cli({"solve", "--capacities", "10,7,3", "--start", "10,0,0",
                                 "--target", "7,3", "--format", "structured"});
    CHECK(r.exit_code == jugs::cli::exit_solvable);
    const auto doc = jugs::Json::parse(r.out);
    CHECK(doc["target"] == jugs::Json::array({7, 3}));
    CHECK(doc["solvable"] == true);
    CHECK(doc["path"].back() == jugs::Json::array({7, 3}));
}

TEST_CASE("instance files feed every command") {
    const std::string path = "cli_test_instance.json";
    {
        std::ofstream file(path);
        file << R"({"capacities":[10,7,3],"start":[10,0,0]})";
    }
    const CliResult r = run_cli({"solve", "--instance", path});
    std::remove(path.c_str());
    CHECK(r.exit_code == jugs::cli::exit_solvable);
    CHECK(r.out.find("solvable in 9 pours") != std::string::npos);

    const CliResult conflict =
        run_cli({"solve", "--instance", path, "--capacities", "10,7,3"});
    CHECK(conflict.exit_code == jugs::cli::exit_input_error);

    const CliResult absent = run_cli({"solve", "--instance", "does_not_exist.json"});
    CHECK(absent.exit_code == jugs::cli::exit_input_error);
}

TEST_CASE("verify summarizes the sweeps and exits clean") {
    const CliResult r = run_cli({"verify", "--max-a", "8"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("0 discrepancies") != std::string::npos);
    CHECK(r.out.find("gcd cross-check") != std::string::npos);

    const CliResult structured = run_cli({"verify", "--max-a", "8", "--format", "structured"});
    const auto doc = jugs::Json::parse(structured.out);
    CHECK(doc["format"] == "three-jug-verify");
    CHECK(doc["quadruples_checked"] == 252);
    CHECK(doc["discrepancies"] == 0);
    CHECK(doc["gcd_mismatches"] == 0);

    const CliResult bad = run_cli({"verify", "--max-a", "1"});
    CHECK(bad.exit_code == jugs::cli::exit_input_error);
}

TEST_CASE("exit codes depend only on parse outcome and verdict") {
    for (int round = 0; round < 3; ++round) {
        CHECK(run_cli({"check", "--capacities", "10,7,3", "--start", "10,0,0"}).exit_code == 0);
        CHECK(run_cli({"check", "--capacities", "10,6,4", "--start", "10,0,0"}).exit_code == 1);
        CHECK(run_cli({"check", "--capacities", "10,7,3", "--start", "9,0,0"}).exit_code == 2);
    }
}

TEST_CASE("help requests are not errors") {
    CHECK(run_cli({"--help"}).exit_code == 0);
    CHECK(run_cli({"solve", "--help"}).exit_code == 0);
}
