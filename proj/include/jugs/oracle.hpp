#ifndef JUGS_ORACLE_HPP
#define JUGS_ORACLE_HPP

#include <optional>
#include <vector>

#include "jugs/core.hpp"

namespace jugs {

// Pour-physics simulator, written from first principles with no reference to
// the graph model. The model and this oracle must produce identical successor
// relations (see verify); keeping the two routes independent is the point.

/// Performs one measurable pour: transfers
/// min(level(source), capacity(destination) - level(destination)) gallons.
/// Returns nullopt when that amount is zero (no state change, so no new
/// distribution is reached). Throws on source == destination or on a state
/// that is out of bounds or not valid.
std::optional<Pour> pour(const Quadruple& q, Distribution state, Jug source, Jug destination);

/// Result distributions of every measurable pour available from `state`,
/// over all 6 ordered jug pairs, deduplicated and sorted row-major.
/// An invalid state has no successors.
std::vector<Distribution> oracle_successors(const Quadruple& q, Distribution state);

}  // namespace jugs

#endif
