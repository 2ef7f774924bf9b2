#include "jugs/verify.hpp"

#include <algorithm>
#include <numeric>

#include "jugs/model.hpp"
#include "jugs/oracle.hpp"
#include "jugs/solver.hpp"

namespace jugs {

namespace {

std::vector<Distribution> vertices_of(const Quadruple& q) {
    std::vector<Distribution> out;
    out.reserve(static_cast<std::size_t>(q.vertex_count()));
    for (int i = 0; i <= q.b; ++i) {
        for (int j = 0; j <= q.c; ++j) out.push_back({i, j});
    }
    return out;
}

// Shortest-path length from start to (d/2, 0), or -1 when unreachable.
// Local BFS so the agreement sweep does not pay for pour decoration.
long long bfs_length(const Quadruple& q, Distribution start, SuccessorSource source) {
    const std::size_t per_row = static_cast<std::size_t>(q.c) + 1;
    std::vector<long long> dist(static_cast<std::size_t>(q.vertex_count()), -1);
    std::vector<std::size_t> queue;
    queue.reserve(dist.size());

    const auto index_of = [per_row](Distribution v) {
        return static_cast<std::size_t>(v.i) * per_row + static_cast<std::size_t>(v.j);
    };
    const std::size_t target = index_of(q.default_target());

    dist[index_of(start)] = 0;
    queue.push_back(index_of(start));
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::size_t u = queue[head];
        if (u == target) return dist[u];
        const Distribution from{static_cast<int>(u / per_row), static_cast<int>(u % per_row)};
        const auto next = source == SuccessorSource::model ? model_successors(q, from)
                                                           : oracle_successors(q, from);
        for (Distribution v : next) {
            const std::size_t w = index_of(v);
            if (dist[w] >= 0) continue;
            dist[w] = dist[u] + 1;
            queue.push_back(w);
        }
    }
    return -1;
}

void require_sweep_bound(int max_a) {
    if (max_a < 3) {
        throw PuzzleError(ErrorCode::bad_input, "sweep bound max_a must be at least 3, got " +
                                                    std::to_string(max_a));
    }
}

// Classic-case family for the gcd cross-check: a == b + c, d == a. d must be
// even, so only even a occur.
std::vector<Quadruple> classic_quadruples(int max_a) {
    std::vector<Quadruple> out;
    for (int a = 4; a <= max_a; a += 2) {
        for (int b = a / 2 + 1; b < a; ++b) {
            const int c = a - b;
            if (c < 1 || c >= b) continue;
            out.push_back(Quadruple{a, b, c, a});
        }
    }
    return out;
}

GcdMismatch check_classic(const Quadruple& q) {
    GcdMismatch m{q, false, false};
    m.criterion = gcd_criterion(q).value();
    m.reachable = bfs_length(q, {0, 0}, SuccessorSource::model) >= 0;
    return m;
}

struct AgreementTask {
    Quadruple quadruple;
    Distribution start;
};

std::vector<AgreementTask> agreement_tasks(int max_a) {
    std::vector<AgreementTask> tasks;
    for (const Quadruple& q : admissible_quadruples(max_a)) {
        for (Distribution v : vertices_of(q)) {
            if (is_valid_state(q, v)) tasks.push_back({q, v});
        }
    }
    return tasks;
}

std::optional<AgreementMismatch> check_agreement(const AgreementTask& task) {
    AgreementMismatch m{task.quadruple, task.start,
                        bfs_length(task.quadruple, task.start, SuccessorSource::model),
                        bfs_length(task.quadruple, task.start, SuccessorSource::oracle)};
    if (m.model_length == m.oracle_length) return std::nullopt;
    return m;
}

}  // namespace

DiscrepancyReport check_equivalence(const Quadruple& q) {
    DiscrepancyReport report{q, {}, {}};
    for (Distribution from : vertices_of(q)) {
        const auto model = model_successors(q, from);
        const auto oracle = oracle_successors(q, from);
        std::vector<Distribution> diff;
        std::set_difference(oracle.begin(), oracle.end(), model.begin(), model.end(),
                            std::back_inserter(diff));
        for (Distribution to : diff) report.missing_in_model.push_back({from, to});
        diff.clear();
        std::set_difference(model.begin(), model.end(), oracle.begin(), oracle.end(),
                            std::back_inserter(diff));
        for (Distribution to : diff) report.extra_in_model.push_back({from, to});
    }
    return report;
}

std::vector<Quadruple> admissible_quadruples(int max_a) {
    require_sweep_bound(max_a);
    std::vector<Quadruple> out;
    for (int a = 3; a <= max_a; ++a) {
        for (int b = 2; b < a; ++b) {
            for (int c = 1; c < b; ++c) {
                // d even, positive, within total capacity, with b >= d/2.
                // 2b <= a+b+c always holds here, so the upper bound is 2b.
                for (int d = 2; d <= 2 * b; d += 2) {
                    out.push_back(Quadruple{a, b, c, d});
                }
            }
        }
    }
    return out;
}

std::vector<DiscrepancyReport> sweep_equivalence_serial(int max_a) {
    std::vector<DiscrepancyReport> failures;
    for (const Quadruple& q : admissible_quadruples(max_a)) {
        DiscrepancyReport report = check_equivalence(q);
        if (!report.empty()) failures.push_back(std::move(report));
    }
    return failures;
}

std::vector<DiscrepancyReport> sweep_equivalence(int max_a) {
    const std::vector<Quadruple> quadruples = admissible_quadruples(max_a);
    std::vector<DiscrepancyReport> slots(quadruples.size());

#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(quadruples.size()); ++k) {
        slots[k] = check_equivalence(quadruples[k]);
    }

    // Compact in enumeration order; slot-per-quadruple keeps the merge
    // deterministic regardless of thread scheduling.
    std::vector<DiscrepancyReport> failures;
    for (auto& report : slots) {
        if (!report.empty()) failures.push_back(std::move(report));
    }
    return failures;
}

std::optional<bool> gcd_criterion(const Quadruple& q) {
    if (q.a != q.b + q.c || q.d != q.a) return std::nullopt;
    return q.a % (2 * std::gcd(q.b, q.c)) == 0;
}

std::vector<GcdMismatch> sweep_gcd_crosscheck_serial(int max_a, std::size_t* checked) {
    const std::vector<Quadruple> family = classic_quadruples(max_a);
    if (checked) *checked = family.size();
    std::vector<GcdMismatch> mismatches;
    for (const Quadruple& q : family) {
        GcdMismatch m = check_classic(q);
        if (m.criterion != m.reachable) mismatches.push_back(m);
    }
    return mismatches;
}

std::vector<GcdMismatch> sweep_gcd_crosscheck(int max_a, std::size_t* checked) {
    const std::vector<Quadruple> family = classic_quadruples(max_a);
    if (checked) *checked = family.size();
    std::vector<GcdMismatch> slots(family.size());

#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(family.size()); ++k) {
        slots[k] = check_classic(family[k]);
    }

    std::vector<GcdMismatch> mismatches;
    for (const GcdMismatch& m : slots) {
        if (m.criterion != m.reachable) mismatches.push_back(m);
    }
    return mismatches;
}

std::vector<AgreementMismatch> sweep_solver_agreement_serial(int max_a, std::size_t* checked) {
    const std::vector<AgreementTask> tasks = agreement_tasks(max_a);
    if (checked) *checked = tasks.size();
    std::vector<AgreementMismatch> mismatches;
    for (const AgreementTask& task : tasks) {
        if (auto m = check_agreement(task)) mismatches.push_back(*m);
    }
    return mismatches;
}

std::vector<AgreementMismatch> sweep_solver_agreement(int max_a, std::size_t* checked) {
    const std::vector<AgreementTask> tasks = agreement_tasks(max_a);
    if (checked) *checked = tasks.size();
    std::vector<std::optional<AgreementMismatch>> slots(tasks.size());

#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(tasks.size()); ++k) {
        slots[k] = check_agreement(tasks[k]);
    }

    std::vector<AgreementMismatch> mismatches;
    for (const auto& m : slots) {
        if (m) mismatches.push_back(*m);
    }
    return mismatches;
}

}  // namespace jugs
