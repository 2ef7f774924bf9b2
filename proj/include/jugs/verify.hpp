#ifndef JUGS_VERIFY_HPP
#define JUGS_VERIFY_HPP

#include <optional>
#include <vector>

#include "jugs/core.hpp"

namespace jugs {

struct DirectedEdge {
    Distribution from;
    Distribution to;

    friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

/// Symmetric difference between the model edge relation and the pour-physics
/// successor relation for one quadruple. Empty iff the two coincide.
struct DiscrepancyReport {
    Quadruple quadruple;
    std::vector<DirectedEdge> missing_in_model;  // oracle reaches it, model has no edge
    std::vector<DirectedEdge> extra_in_model;    // model edge with no realizing pour

    bool empty() const { return missing_in_model.empty() && extra_in_model.empty(); }

    friend bool operator==(const DiscrepancyReport&, const DiscrepancyReport&) = default;
};

/// Compares model_successors against oracle_successors on every vertex.
DiscrepancyReport check_equivalence(const Quadruple& q);

/// Every admissible quadruple with 3 <= a <= max_a, a > b > c >= 1, d even,
/// 2 <= d <= a+b+c and b >= d/2, in ascending (a,b,c,d) order.
/// Throws on max_a < 3.
std::vector<Quadruple> admissible_quadruples(int max_a);

/// Runs check_equivalence over admissible_quadruples(max_a) and keeps the
/// non-empty reports, in enumeration order. The parallel kernel fans the
/// quadruples out across OpenMP threads; the serial variant is the reference
/// implementation the tests compare against.
std::vector<DiscrepancyReport> sweep_equivalence(int max_a);
std::vector<DiscrepancyReport> sweep_equivalence_serial(int max_a);

/// The classic-case solvability criterion: defined only when a == b + c and
/// d == a (jug A initially full). Returns nullopt outside those hypotheses,
/// otherwise true iff 2*gcd(b,c) divides a.
std::optional<bool> gcd_criterion(const Quadruple& q);

struct GcdMismatch {
    Quadruple quadruple;
    bool criterion = false;  // what the divisibility test says
    bool reachable = false;  // what BFS over the model says
};

/// Cross-checks gcd_criterion against BFS solvability for every quadruple
/// with a == b + c, d == a, a <= max_a, start (0,0), target (d/2, 0).
/// `checked` (when non-null) receives the number of instances examined.
std::vector<GcdMismatch> sweep_gcd_crosscheck(int max_a, std::size_t* checked = nullptr);
std::vector<GcdMismatch> sweep_gcd_crosscheck_serial(int max_a, std::size_t* checked = nullptr);

struct AgreementMismatch {
    Quadruple quadruple;
    Distribution start;
    long long model_length = -1;   // -1 encodes unreachable
    long long oracle_length = -1;
};

/// For every admissible quadruple with a <= max_a and every valid start
/// state, runs BFS to (d/2, 0) over the model relation and over the oracle
/// relation and records any disagreement on solvability or shortest length.
/// `checked` (when non-null) receives the number of start states examined.
std::vector<AgreementMismatch> sweep_solver_agreement(int max_a, std::size_t* checked = nullptr);
std::vector<AgreementMismatch> sweep_solver_agreement_serial(int max_a,
                                                             std::size_t* checked = nullptr);

}  // namespace jugs

#endif
