#include "jugs/model.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace jugs {

const char* edge_kind_name(EdgeKind kind) {
    switch (kind) {
        case EdgeKind::b_level_change: return "b-level-change";
        case EdgeKind::c_level_change: return "c-level-change";
        case EdgeKind::a_preserved: return "a-preserved";
    }
    return "unknown";
}

namespace {

void require_vertex(const Quadruple& q, Distribution v, const char* which) {
    if (!q.in_vertex_bounds(v)) {
        throw PuzzleError(ErrorCode::vertex_bounds,
                          std::string(which) + " distribution " + to_string(v) +
                              " outside vertex bounds [0," + std::to_string(q.b) + "]x[0," +
                              std::to_string(q.c) + "]");
    }
}

bool valid(const Quadruple& q, Distribution v) {
    const int level_a = q.d - v.i - v.j;
    return 0 <= level_a && level_a <= q.a;
}

bool condition1(const Quadruple& q, Distribution u, Distribution v) {
    return v.j == u.j &&
           (v.i == 0 || v.i == q.b || v.i == q.d - u.j || v.i == q.d - q.a - u.j);
}

bool condition2(const Quadruple& q, Distribution u, Distribution v) {
    return v.i == u.i &&
           (v.j == 0 || v.j == q.c || v.j == q.d - u.i || v.j == q.d - q.a - u.i);
}

bool condition3(const Quadruple& q, Distribution u, Distribution v) {
    return u.i + u.j == v.i + v.j && (v.i == 0 || v.i == q.b || v.j == 0 || v.j == q.c);
}

}  // namespace

bool edge_exists(const Quadruple& q, Distribution from, Distribution to) {
    require_vertex(q, from, "source");
    require_vertex(q, to, "target");
    if (from == to) return false;
    if (!valid(q, from) || !valid(q, to)) return false;
    return condition1(q, from, to) || condition2(q, from, to) || condition3(q, from, to);
}

EdgeKind classify_edge(const Quadruple& q, Distribution from, Distribution to) {
    if (!edge_exists(q, from, to)) {
        throw PuzzleError(ErrorCode::no_edge, "no edge from " + to_string(from) + " to " +
                                                  to_string(to) + " in G_" + to_string(q));
    }
    if (condition1(q, from, to)) return EdgeKind::b_level_change;
    if (condition2(q, from, to)) return EdgeKind::c_level_change;
    return EdgeKind::a_preserved;
}

std::vector<Distribution> model_successors(const Quadruple& q, Distribution from) {
    require_vertex(q, from, "source");
    if (!valid(q, from)) return {};

    const int i = from.i;
    const int j = from.j;
    const int s = i + j;

    // Candidate targets named by the three condition sets; everything else
    // can never satisfy the predicate.
    const std::array<Distribution, 12> candidates = {{
        {0, j}, {q.b, j}, {q.d - j, j}, {q.d - q.a - j, j},          // condition 1
        {i, 0}, {i, q.c}, {i, q.d - i}, {i, q.d - q.a - i},          // condition 2
        {0, s}, {q.b, s - q.b}, {s, 0}, {s - q.c, q.c},              // condition 3
    }};

    std::vector<Distribution> out;
    out.reserve(candidates.size());
    for (Distribution to : candidates) {
        if (!q.in_vertex_bounds(to)) continue;
        if (to == from) continue;
        if (!valid(q, to)) continue;
        out.push_back(to);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::size_t ModelGraph::index_of(Distribution v) const {
    require_vertex(quadruple, v, "lookup");
    return static_cast<std::size_t>(v.i) * (quadruple.c + 1) + v.j;
}

Distribution ModelGraph::vertex_at(std::size_t index) const {
    const std::size_t per_row = static_cast<std::size_t>(quadruple.c) + 1;
    return Distribution{static_cast<int>(index / per_row), static_cast<int>(index % per_row)};
}

const std::vector<Distribution>& ModelGraph::successors(Distribution v) const {
    return adjacency[index_of(v)];
}

std::size_t ModelGraph::edge_count() const {
    std::size_t n = 0;
    for (const auto& row : adjacency) n += row.size();
    return n;
}

ModelGraph build_graph(const Quadruple& q) {
    ModelGraph graph{q, {}};
    graph.adjacency.resize(static_cast<std::size_t>(q.vertex_count()));
    for (std::size_t k = 0; k < graph.adjacency.size(); ++k) {
        graph.adjacency[k] = model_successors(q, graph.vertex_at(k));
    }
    return graph;
}

}  // namespace jugs
