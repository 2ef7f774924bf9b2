#ifndef JUGS_SOLVER_HPP
#define JUGS_SOLVER_HPP

#include <vector>

#include "jugs/core.hpp"

namespace jugs {

/// Which successor relation drives the search. Both must agree everywhere;
/// the choice exists so tests and the CLI can cross one against the other.
enum class SuccessorSource { model, oracle };

struct SolveResult {
    bool solvable = false;
    std::vector<Distribution> path;  // start..target, empty when unsolvable
    std::vector<Pour> pours;         // one per path edge

    std::size_t pour_count() const { return pours.size(); }
};

/// Breadth-first search from start to target over implicit successors (no
/// graph materialization). Successors are expanded in row-major order and
/// each vertex keeps its first-discovery parent, which makes the returned
/// path the lexicographically least among all minimum-length vertex
/// sequences. Each path edge is decorated with the pour realizing it,
/// derived from the edge classification and checked against the oracle.
SolveResult shortest_path(const PuzzleInstance& p,
                          SuccessorSource source = SuccessorSource::model);

/// Every vertex reachable from start by directed paths, start included,
/// sorted row-major.
std::vector<Distribution> reachable_set(const Quadruple& q, Distribution start);

/// True iff the instance's target is reachable from its start.
bool is_solvable(const PuzzleInstance& p);

/// The pour realizing an existing edge: the jug pair comes from the edge
/// condition (1 -> A/B, 2 -> A/C, 3 -> B/C), the direction from the sign of
/// the level change, the amount from the level delta. Throws through
/// classify_edge on a non-edge; throws logic_error if the oracle disagrees
/// with the derived pour (model/oracle drift).
Pour decorate_edge(const Quadruple& q, Distribution from, Distribution to);

}  // namespace jugs

#endif
