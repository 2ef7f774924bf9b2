#include "jugs/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "jugs/core.hpp"
#include "jugs/model.hpp"
#include "jugs/serialize.hpp"
#include "jugs/solver.hpp"
#include "jugs/verify.hpp"

namespace jugs::cli {

namespace {

struct InstanceFlags {
    std::vector<int> capacities;
    std::vector<int> start;
    std::vector<int> target;
    std::string instance_file;
};

void add_instance_flags(CLI::App& cmd, InstanceFlags& flags, bool with_target) {
    cmd.add_option("--capacities", flags.capacities, "Jug capacities A,B,C")->delimiter(',');
    cmd.add_option("--start", flags.start, "Start contents A',B',C' (their sum is the total d)")
        ->delimiter(',');
    if (with_target) {
        cmd.add_option("--target", flags.target, "Target distribution I,J (default: d/2,0)")
            ->delimiter(',');
    }
    cmd.add_option("--instance", flags.instance_file,
                   "Instance file (JSON; see docs/formats.md) instead of flags");
}

PuzzleInstance parse_instance(const InstanceFlags& flags) {
    if (!flags.instance_file.empty()) {
        if (!flags.capacities.empty() || !flags.start.empty() || !flags.target.empty()) {
            throw PuzzleError(ErrorCode::bad_input,
                              "--instance cannot be combined with --capacities/--start/--target");
        }
        std::ifstream in(flags.instance_file);
        if (!in) {
            throw PuzzleError(ErrorCode::bad_input,
                              "cannot open instance file " + flags.instance_file);
        }
        std::ostringstream text;
        text << in.rdbuf();
        return instance_from_json_text(text.str());
    }

    if (flags.capacities.size() != 3) {
        throw PuzzleError(ErrorCode::bad_input,
                          "--capacities needs exactly three values A,B,C");
    }
    if (flags.start.size() != 3) {
        throw PuzzleError(ErrorCode::bad_input,
                          "--start needs exactly three contents A',B',C'");
    }
    std::optional<Distribution> target;
    if (!flags.target.empty()) {
        if (flags.target.size() != 2) {
            throw PuzzleError(ErrorCode::bad_input, "--target needs exactly two values I,J");
        }
        target = Distribution{flags.target[0], flags.target[1]};
    }
    return instance_from_contents(flags.capacities[0], flags.capacities[1], flags.capacities[2],
                                  flags.start[0], flags.start[1], flags.start[2], target);
}

SuccessorSource parse_successors(const std::string& name) {
    if (name == "model") return SuccessorSource::model;
    if (name == "oracle") return SuccessorSource::oracle;
    throw PuzzleError(ErrorCode::bad_input, "--successors must be model or oracle");
}

int cmd_solve(const InstanceFlags& flags, const std::string& format,
              const std::string& successors, std::ostream& out) {
    const PuzzleInstance instance = parse_instance(flags);
    const SolveResult result = shortest_path(instance, parse_successors(successors));
    if (format == "structured") {
        out << solve_to_json(instance, result).dump(2) << "\n";
    } else {
        out << solve_to_text(instance, result);
    }
    return result.solvable ? exit_solvable : exit_unsolvable;
}

int cmd_check(const InstanceFlags& flags, const std::string& format,
              const std::string& successors, std::ostream& out) {
    const PuzzleInstance instance = parse_instance(flags);
    // Reachability only; reuse the searcher without keeping its path.
    const bool solvable = shortest_path(instance, parse_successors(successors)).solvable;
    if (format == "structured") {
        out << check_to_json(instance, solvable).dump(2) << "\n";
    } else {
        out << (solvable ? "solvable\n" : "unsolvable\n");
    }
    return solvable ? exit_solvable : exit_unsolvable;
}

int cmd_graph(const InstanceFlags& flags, const std::string& format, bool hide_isolated,
              std::ostream& out) {
    const PuzzleInstance instance = parse_instance(flags);
    const ModelGraph graph = build_graph(instance.quadruple);
    if (format == "structured") {
        out << graph_to_json(graph, hide_isolated).dump(2) << "\n";
    } else {
        out << graph_to_dot(graph, hide_isolated);
    }
    return exit_solvable;
}

int cmd_verify(int max_a, const std::string& format, std::ostream& out) {
    const std::size_t quadruples_checked = admissible_quadruples(max_a).size();
    const std::vector<DiscrepancyReport> reports = sweep_equivalence(max_a);
    std::size_t classic_checked = 0;
    const std::vector<GcdMismatch> gcd_mismatches = sweep_gcd_crosscheck(max_a, &classic_checked);

    std::size_t edge_discrepancies = 0;
    for (const auto& report : reports) {
        edge_discrepancies += report.missing_in_model.size() + report.extra_in_model.size();
    }

    if (format == "structured") {
        jugs::Json failing = jugs::Json::array();
        for (const auto& report : reports) {
            jugs::Json missing = jugs::Json::array();
            for (const auto& e : report.missing_in_model) {
                missing.push_back({{e.from.i, e.from.j}, {e.to.i, e.to.j}});
            }
            jugs::Json extra = jugs::Json::array();
            for (const auto& e : report.extra_in_model) {
                extra.push_back({{e.from.i, e.from.j}, {e.to.i, e.to.j}});
            }
            failing.push_back({{"quadruple",
                                {{"a", report.quadruple.a},
                                 {"b", report.quadruple.b},
                                 {"c", report.quadruple.c},
                                 {"d", report.quadruple.d}}},
                               {"missing_in_model", missing},
                               {"extra_in_model", extra}});
        }
        out << jugs::Json{{"format", "three-jug-verify"},
                              {"version", 1},
                              {"max_a", max_a},
                              {"quadruples_checked", quadruples_checked},
                              {"discrepancies", edge_discrepancies},
                              {"failing_quadruples", failing},
                              {"classic_instances_checked", classic_checked},
                              {"gcd_mismatches", gcd_mismatches.size()}}
                    .dump(2)
             << "\n";
    } else {
        out << "equivalence sweep: " << quadruples_checked << " quadruples (a <= " << max_a
            << "), " << edge_discrepancies << " discrepancies\n";
        for (const auto& report : reports) {
            out << "  Q=" << to_string(report.quadruple) << ": "
                << report.missing_in_model.size() << " missing, " << report.extra_in_model.size()
                << " extra\n";
        }
        out << "gcd cross-check: " << classic_checked
            << " classic instances (a = b+c, d = a), " << gcd_mismatches.size()
            << " mismatches\n";
        for (const auto& m : gcd_mismatches) {
            out << "  Q=" << to_string(m.quadruple) << ": criterion says "
                << (m.criterion ? "solvable" : "unsolvable") << ", search says "
                << (m.reachable ? "solvable" : "unsolvable") << "\n";
        }
    }
    return reports.empty() && gcd_mismatches.empty() ? exit_solvable : exit_unsolvable;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generic three-jug puzzle: directed-graph model, pour oracle and solver"};
    app.name("jugs");
    app.require_subcommand(1);

    InstanceFlags solve_flags;
    std::string solve_format = "text";
    std::string solve_successors = "model";
    CLI::App* solve = app.add_subcommand("solve", "Find a minimal pour sequence");
    add_instance_flags(*solve, solve_flags, true);
    solve->add_option("--format", solve_format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));
    solve->add_option("--successors", solve_successors, "Successor relation to search over")
        ->check(CLI::IsMember({"model", "oracle"}));

    InstanceFlags check_flags;
    std::string check_format = "text";
    std::string check_successors = "model";
    CLI::App* check = app.add_subcommand("check", "Decide solvability without printing a path");
    add_instance_flags(*check, check_flags, true);
    check->add_option("--format", check_format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));
    check->add_option("--successors", check_successors, "Successor relation to search over")
        ->check(CLI::IsMember({"model", "oracle"}));

    InstanceFlags graph_flags;
    std::string graph_format = "dot";
    bool hide_isolated = false;
    CLI::App* graph = app.add_subcommand("graph", "Emit the directed graph G_Q");
    add_instance_flags(*graph, graph_flags, true);
    graph->add_option("--format", graph_format, "Output format")
        ->check(CLI::IsMember({"dot", "structured"}));
    graph->add_flag("--hide-isolated", hide_isolated, "Drop vertices with no edges");

    int max_a = 12;
    std::string verify_format = "text";
    CLI::App* verify = app.add_subcommand(
        "verify", "Sweep model-vs-oracle equivalence and the gcd cross-check");
    verify->add_option("--max-a", max_a, "Largest jug-A capacity to sweep (default 12)");
    verify->add_option("--format", verify_format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : exit_input_error;
    }

    try {
        if (solve->parsed()) return cmd_solve(solve_flags, solve_format, solve_successors, out);
        if (check->parsed()) return cmd_check(check_flags, check_format, check_successors, out);
        if (graph->parsed()) return cmd_graph(graph_flags, graph_format, hide_isolated, out);
        return cmd_verify(max_a, verify_format, out);
    } catch (const PuzzleError& e) {
        err << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
        return exit_input_error;
    }
}

}  // namespace jugs::cli
