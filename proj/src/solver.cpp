#include "jugs/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>

#include "jugs/model.hpp"
#include "jugs/oracle.hpp"

namespace jugs {

namespace {

constexpr long long kUndiscovered = -2;
constexpr long long kRoot = -1;
constexpr long long kNoStop = -1;  // vertex indices are non-negative

void require_valid(const Quadruple& q, Distribution v, const char* which) {
    if (!is_valid_state(q, v)) {
        throw PuzzleError(ErrorCode::invalid_state,
                          std::string(which) + " " + to_string(v) + " is not a valid state of " +
                              to_string(q));
    }
}

std::vector<Distribution> successors_of(const Quadruple& q, Distribution v,
                                        SuccessorSource source) {
    return source == SuccessorSource::model ? model_successors(q, v) : oracle_successors(q, v);
}

// First-discovery BFS with row-major expansion. parent[v] stays kUndiscovered
// until v is reached. Stops early once `stop` is discovered (pass kNoStop to
// explore everything).
std::vector<long long> bfs_parents(const Quadruple& q, Distribution start, long long stop,
                                   SuccessorSource source) {
    const long long per_row = q.c + 1;
    std::vector<long long> parent(static_cast<std::size_t>(q.vertex_count()), kUndiscovered);
    const auto index_of = [per_row](Distribution v) { return v.i * per_row + v.j; };

    parent[index_of(start)] = kRoot;
    std::deque<long long> queue{index_of(start)};
    while (!queue.empty()) {
        const long long u = queue.front();
        queue.pop_front();
        const Distribution from{static_cast<int>(u / per_row), static_cast<int>(u % per_row)};
        for (Distribution v : successors_of(q, from, source)) {
            const long long w = index_of(v);
            if (parent[w] != kUndiscovered) continue;
            parent[w] = u;
            if (w == stop) return parent;
            queue.push_back(w);
        }
    }
    return parent;
}

}  // namespace

Pour decorate_edge(const Quadruple& q, Distribution from, Distribution to) {
    const EdgeKind kind = classify_edge(q, from, to);
    Jug source = Jug::A;
    Jug destination = Jug::B;
    int amount = 0;
    switch (kind) {
        case EdgeKind::b_level_change:
            amount = std::abs(to.i - from.i);
            source = to.i > from.i ? Jug::A : Jug::B;
            destination = to.i > from.i ? Jug::B : Jug::A;
            break;
        case EdgeKind::c_level_change:
            amount = std::abs(to.j - from.j);
            source = to.j > from.j ? Jug::A : Jug::C;
            destination = to.j > from.j ? Jug::C : Jug::A;
            break;
        case EdgeKind::a_preserved:
            amount = std::abs(to.i - from.i);
            source = to.i > from.i ? Jug::C : Jug::B;
            destination = to.i > from.i ? Jug::B : Jug::C;
            break;
    }

    const Pour derived{source, destination, amount, to};
    const auto simulated = pour(q, from, source, destination);
    if (!simulated || *simulated != derived) {
        throw std::logic_error("model/oracle drift on edge " + to_string(from) + " -> " +
                               to_string(to) + " of " + to_string(q));
    }
    return derived;
}

SolveResult shortest_path(const PuzzleInstance& p, SuccessorSource source) {
    const Quadruple& q = p.quadruple;
    require_valid(q, p.start, "start");
    require_valid(q, p.target, "target");

    if (p.start == p.target) {
        return SolveResult{true, {p.start}, {}};
    }

    const long long per_row = q.c + 1;
    const long long target_index = p.target.i * per_row + p.target.j;
    const std::vector<long long> parent = bfs_parents(q, p.start, target_index, source);
    if (parent[target_index] == kUndiscovered) {
        return SolveResult{};
    }

    SolveResult result;
    result.solvable = true;
    for (long long u = target_index; u != kRoot; u = parent[u]) {
        result.path.push_back(
            Distribution{static_cast<int>(u / per_row), static_cast<int>(u % per_row)});
    }
    std::reverse(result.path.begin(), result.path.end());

    result.pours.reserve(result.path.size() - 1);
    for (std::size_t k = 0; k + 1 < result.path.size(); ++k) {
        result.pours.push_back(decorate_edge(q, result.path[k], result.path[k + 1]));
    }
    return result;
}

std::vector<Distribution> reachable_set(const Quadruple& q, Distribution start) {
    require_valid(q, start, "start");

    const long long per_row = q.c + 1;
    const std::vector<long long> parent = bfs_parents(q, start, kNoStop, SuccessorSource::model);
    std::vector<Distribution> out;
    for (long long u = 0; u < q.vertex_count(); ++u) {
        if (parent[static_cast<std::size_t>(u)] != kUndiscovered) {
            out.push_back(
                Distribution{static_cast<int>(u / per_row), static_cast<int>(u % per_row)});
        }
    }
    return out;  // index order is row-major already
}

bool is_solvable(const PuzzleInstance& p) {
    require_valid(p.quadruple, p.target, "target");
    const auto reached = reachable_set(p.quadruple, p.start);
    return std::binary_search(reached.begin(), reached.end(), p.target);
}

}  // namespace jugs
