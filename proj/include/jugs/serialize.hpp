#ifndef JUGS_SERIALIZE_HPP
#define JUGS_SERIALIZE_HPP

#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

#include "jugs/core.hpp"
#include "jugs/model.hpp"
#include "jugs/solver.hpp"

namespace jugs {

// Renderers and parsers for everything the CLI reads or writes. Field names
// and the DOT dialect are pinned in docs/formats.md; treat them as stable.

/// Structured documents keep their fields in the documented order.
using Json = nlohmann::ordered_json;

/// Builds a PuzzleInstance from jug contents (a',b',c'). The total d is
/// always derived as a'+b'+c', never supplied. Without an explicit target
/// the goal is (d/2, 0).
PuzzleInstance instance_from_contents(int cap_a, int cap_b, int cap_c, int in_a, int in_b,
                                      int in_c, std::optional<Distribution> target = {});

/// Parses the instance-file document: {"capacities":[a,b,c],
/// "start":[a',b',c'], "target":[i,j]?}. Throws ErrorCode::bad_input on
/// malformed text and the usual validation errors otherwise.
PuzzleInstance instance_from_json_text(const std::string& text);

/// Plain DOT digraph: node ids "v_i_j", labels "(i,j)", nodes and edges in
/// row-major order. hide_isolated drops vertices with no edge in either
/// direction (the invalid states).
std::string graph_to_dot(const ModelGraph& graph, bool hide_isolated = false);

Json graph_to_json(const ModelGraph& graph, bool hide_isolated = false);

/// Rebuilds a graph from its structured document. A round-trip through
/// graph_to_json (with hide_isolated off) reproduces build_graph's result
/// exactly.
ModelGraph graph_from_json(const Json& doc);

Json solve_to_json(const PuzzleInstance& p, const SolveResult& result);
Json check_to_json(const PuzzleInstance& p, bool solvable);

/// Human-readable solution: verdict, then one line per pour with source jug,
/// destination jug, gallons moved and the resulting three-jug contents.
std::string solve_to_text(const PuzzleInstance& p, const SolveResult& result);

}  // namespace jugs

#endif
