#include "jugs/oracle.hpp"

#include <algorithm>
#include <array>

namespace jugs {

std::optional<Pour> pour(const Quadruple& q, Distribution state, Jug source, Jug destination) {
    if (source == destination) {
        throw PuzzleError(ErrorCode::same_jug, "pour needs two distinct jugs, got " +
                                                   std::string(1, jug_name(source)) + " twice");
    }
    if (!is_valid_state(q, state)) {
        throw PuzzleError(ErrorCode::invalid_state,
                          "cannot pour from state " + to_string(state) + ": jug A would hold " +
                              std::to_string(q.d - state.i - state.j) + " gallons");
    }

    std::array<int, 3> levels = {q.d - state.i - state.j, state.i, state.j};
    const int src = static_cast<int>(source);
    const int dst = static_cast<int>(destination);
    const int amount = std::min(levels[src], q.capacity(destination) - levels[dst]);
    if (amount <= 0) return std::nullopt;

    levels[src] -= amount;
    levels[dst] += amount;
    return Pour{source, destination, amount, Distribution{levels[1], levels[2]}};
}

std::vector<Distribution> oracle_successors(const Quadruple& q, Distribution state) {
    if (!is_valid_state(q, state)) return {};

    static constexpr std::array<Jug, 3> jugs = {Jug::A, Jug::B, Jug::C};
    std::vector<Distribution> out;
    out.reserve(6);
    for (Jug source : jugs) {
        for (Jug destination : jugs) {
            if (source == destination) continue;
            if (auto p = pour(q, state, source, destination)) {
                out.push_back(p->result);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace jugs
