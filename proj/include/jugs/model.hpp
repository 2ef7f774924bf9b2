#ifndef JUGS_MODEL_HPP
#define JUGS_MODEL_HPP

#include <cstddef>
#include <vector>

#include "jugs/core.hpp"

namespace jugs {

/// Which of the three edge conditions produced an edge. Exactly one applies
/// to any existing edge: any two conditions holding at once would force
/// (i,j) == (i',j'), and self-loops are not edges.
enum class EdgeKind {
    b_level_change,  // j' == j, only the B (and A) levels move
    c_level_change,  // i' == i, only the C (and A) levels move
    a_preserved,     // i + j == i' + j', jug A untouched
};

const char* edge_kind_name(EdgeKind kind);

/// The edge predicate of the directed graph G_Q. An edge runs from one
/// vertex to a DIFFERENT vertex when both are valid states and one of:
///   1. j' == j       and i' in {0, b, d-j, d-a-j}
///   2. i' == i       and j' in {0, c, d-i, d-a-i}
///   3. i+j == i'+j'  and (i' in {0, b} or j' in {0, c})
/// Set members falling outside [0,b] (or [0,c]) simply never match a vertex
/// coordinate. Throws ErrorCode::vertex_bounds if either argument is not a
/// vertex.
bool edge_exists(const Quadruple& q, Distribution from, Distribution to);

/// The unique condition satisfied by an existing edge. Throws
/// ErrorCode::no_edge when edge_exists(q, from, to) is false.
EdgeKind classify_edge(const Quadruple& q, Distribution from, Distribution to);

/// All out-neighbors of `from`, sorted row-major. Enumerates only the
/// candidate coordinates named by the three condition sets; equals the
/// exhaustive filter of edge_exists over every vertex.
std::vector<Distribution> model_successors(const Quadruple& q, Distribution from);

/// Fully materialized G_Q. Vertices are every (i,j) in [0,b]x[0,c], indexed
/// row-major; invalid states stay in the vertex set but carry no edges.
struct ModelGraph {
    Quadruple quadruple;
    std::vector<std::vector<Distribution>> adjacency;  // indexed by vertex, sorted row-major

    long long vertex_count() const { return quadruple.vertex_count(); }
    std::size_t index_of(Distribution v) const;
    Distribution vertex_at(std::size_t index) const;
    const std::vector<Distribution>& successors(Distribution v) const;
    std::size_t edge_count() const;

    friend bool operator==(const ModelGraph&, const ModelGraph&) = default;
};

ModelGraph build_graph(const Quadruple& q);

}  // namespace jugs

#endif
