#include "jugs/serialize.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <vector>

namespace jugs {

namespace {

constexpr int kGraphFormatVersion = 1;
constexpr int kSolveFormatVersion = 1;

std::string jug_str(Jug jug) { return std::string(1, jug_name(jug)); }

Json quadruple_to_json(const Quadruple& q) {
    return {{"a", q.a}, {"b", q.b}, {"c", q.c}, {"d", q.d}};
}

Json distribution_to_json(Distribution v) { return Json::array({v.i, v.j}); }

Distribution distribution_from_json(const Json& node) {
    if (!node.is_array() || node.size() != 2 || !node[0].is_number_integer() ||
        !node[1].is_number_integer()) {
        throw PuzzleError(ErrorCode::bad_input,
                          "expected a [i,j] integer pair, got " + node.dump());
    }
    return Distribution{node[0].get<int>(), node[1].get<int>()};
}

// Vertices with an edge in either direction. Only invalid states can be
// isolated, but this is computed rather than assumed.
std::vector<bool> connected_mask(const ModelGraph& graph) {
    std::vector<bool> connected(graph.adjacency.size(), false);
    for (std::size_t u = 0; u < graph.adjacency.size(); ++u) {
        if (!graph.adjacency[u].empty()) connected[u] = true;
        for (Distribution v : graph.adjacency[u]) connected[graph.index_of(v)] = true;
    }
    return connected;
}

const Json& field(const Json& doc, const char* name) {
    const auto it = doc.find(name);
    if (it == doc.end()) {
        throw PuzzleError(ErrorCode::bad_input,
                          std::string("document is missing the \"") + name + "\" field");
    }
    return *it;
}

int int_field(const Json& doc, const char* name) {
    const Json& node = field(doc, name);
    if (!node.is_number_integer()) {
        throw PuzzleError(ErrorCode::bad_input,
                          std::string("field \"") + name + "\" must be an integer");
    }
    return node.get<int>();
}

}  // namespace

PuzzleInstance instance_from_contents(int cap_a, int cap_b, int cap_c, int in_a, int in_b,
                                      int in_c, std::optional<Distribution> target) {
    const long long total = static_cast<long long>(in_a) + in_b + in_c;
    if (total > std::numeric_limits<int>::max()) {
        throw PuzzleError(ErrorCode::bad_input,
                          "start contents sum to " + std::to_string(total) + ", too large");
    }
    const Quadruple q = validate_quadruple(cap_a, cap_b, cap_c, static_cast<int>(total));

    const auto check_content = [&](int amount, Jug jug) {
        if (amount < 0 || amount > q.capacity(jug)) {
            throw PuzzleError(ErrorCode::content_bounds,
                              "jug " + jug_str(jug) + " content " + std::to_string(amount) +
                                  " outside [0," + std::to_string(q.capacity(jug)) + "]");
        }
    };
    check_content(in_a, Jug::A);
    check_content(in_b, Jug::B);
    check_content(in_c, Jug::C);

    const Distribution start{in_b, in_c};
    return target ? make_instance(q, start, *target) : make_instance(q, start);
}

PuzzleInstance instance_from_json_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw PuzzleError(ErrorCode::bad_input, std::string("instance file is not valid JSON: ") +
                                                    e.what());
    }

    const Json& caps = field(doc, "capacities");
    const Json& start = field(doc, "start");
    if (!caps.is_array() || caps.size() != 3 || !start.is_array() || start.size() != 3) {
        throw PuzzleError(ErrorCode::bad_input,
                          "\"capacities\" and \"start\" must be [A,B,C] integer triples");
    }
    std::optional<Distribution> target;
    if (doc.contains("target")) target = distribution_from_json(doc["target"]);

    return instance_from_contents(caps[0].get<int>(), caps[1].get<int>(), caps[2].get<int>(),
                                  start[0].get<int>(), start[1].get<int>(), start[2].get<int>(),
                                  target);
}

std::string graph_to_dot(const ModelGraph& graph, bool hide_isolated) {
    const std::vector<bool> connected = connected_mask(graph);
    std::ostringstream out;
    out << "digraph jugs {\n";
    for (std::size_t u = 0; u < graph.adjacency.size(); ++u) {
        if (hide_isolated && !connected[u]) continue;
        const Distribution v = graph.vertex_at(u);
        out << "  v_" << v.i << "_" << v.j << " [label=\"" << to_string(v) << "\"];\n";
    }
    for (std::size_t u = 0; u < graph.adjacency.size(); ++u) {
        const Distribution from = graph.vertex_at(u);
        for (Distribution to : graph.adjacency[u]) {
            out << "  v_" << from.i << "_" << from.j << " -> v_" << to.i << "_" << to.j << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

Json graph_to_json(const ModelGraph& graph, bool hide_isolated) {
    const std::vector<bool> connected = connected_mask(graph);

    Json vertices = Json::array();
    for (std::size_t u = 0; u < graph.adjacency.size(); ++u) {
        if (hide_isolated && !connected[u]) continue;
        vertices.push_back(distribution_to_json(graph.vertex_at(u)));
    }

    Json edges = Json::array();
    for (std::size_t u = 0; u < graph.adjacency.size(); ++u) {
        const Distribution from = graph.vertex_at(u);
        for (Distribution to : graph.adjacency[u]) {
            edges.push_back({{"from", distribution_to_json(from)},
                             {"to", distribution_to_json(to)},
                             {"kind", edge_kind_name(classify_edge(graph.quadruple, from, to))}});
        }
    }

    return {{"format", "three-jug-graph"},
            {"version", kGraphFormatVersion},
            {"quadruple", quadruple_to_json(graph.quadruple)},
            {"vertices", vertices},
            {"edges", edges}};
}

ModelGraph graph_from_json(const Json& doc) {
    if (field(doc, "format") != "three-jug-graph") {
        throw PuzzleError(ErrorCode::bad_input, "not a three-jug-graph document");
    }
    const Json& qnode = field(doc, "quadruple");
    const Quadruple q = validate_quadruple(int_field(qnode, "a"), int_field(qnode, "b"),
                                           int_field(qnode, "c"), int_field(qnode, "d"));

    ModelGraph graph{q, {}};
    graph.adjacency.resize(static_cast<std::size_t>(q.vertex_count()));
    for (const Json& edge : field(doc, "edges")) {
        const Distribution from = distribution_from_json(field(edge, "from"));
        const Distribution to = distribution_from_json(field(edge, "to"));
        graph.adjacency[graph.index_of(from)].push_back(to);
    }
    for (auto& row : graph.adjacency) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
    }
    return graph;
}

Json solve_to_json(const PuzzleInstance& p, const SolveResult& result) {
    Json path = Json::array();
    for (Distribution v : result.path) path.push_back(distribution_to_json(v));

    Json pours = Json::array();
    for (const Pour& pour : result.pours) {
        pours.push_back({{"source", jug_str(pour.source)},
                         {"destination", jug_str(pour.destination)},
                         {"amount", pour.amount}});
    }

    return {{"format", "three-jug-solve"},
            {"version", kSolveFormatVersion},
            {"quadruple", quadruple_to_json(p.quadruple)},
            {"start", distribution_to_json(p.start)},
            {"target", distribution_to_json(p.target)},
            {"solvable", result.solvable},
            {"path", path},
            {"pours", pours},
            {"pour_count", result.pours.size()}};
}

Json check_to_json(const PuzzleInstance& p, bool solvable) {
    return {{"format", "three-jug-check"},
            {"version", kSolveFormatVersion},
            {"quadruple", quadruple_to_json(p.quadruple)},
            {"start", distribution_to_json(p.start)},
            {"target", distribution_to_json(p.target)},
            {"solvable", solvable}};
}

std::string solve_to_text(const PuzzleInstance& p, const SolveResult& result) {
    const Quadruple& q = p.quadruple;
    std::ostringstream out;
    out << "puzzle Q=" << to_string(q) << "  start " << to_string(p.start) << "  target "
        << to_string(p.target) << "\n";
    if (!result.solvable) {
        out << "no solution: " << to_string(p.target) << " is unreachable from "
            << to_string(p.start) << "\n";
        return out.str();
    }

    out << "solvable in " << result.pours.size() << " pours\n";
    for (std::size_t k = 0; k < result.pours.size(); ++k) {
        const Pour& pour = result.pours[k];
        const Distribution after = result.path[k + 1];
        out << "  " << (k + 1) << ". pour " << pour.amount << " gallon"
            << (pour.amount == 1 ? "" : "s") << " " << jug_name(pour.source) << " -> "
            << jug_name(pour.destination) << "   [A:" << q.level(after, Jug::A)
            << " B:" << q.level(after, Jug::B) << " C:" << q.level(after, Jug::C) << "]\n";
    }
    const Distribution final_state = result.path.back();
    out << "final contents " << q.level(final_state, Jug::A) << "," << q.level(final_state, Jug::B)
        << "," << q.level(final_state, Jug::C) << "\n";
    return out.str();
}

}  // namespace jugs
