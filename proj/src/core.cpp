#include "jugs/core.hpp"

namespace jugs {

char jug_name(Jug jug) {
    switch (jug) {
        case Jug::A: return 'A';
        case Jug::B: return 'B';
        case Jug::C: return 'C';
    }
    return '?';
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ordering: return "ordering";
        case ErrorCode::nonpositive_total: return "nonpositive-total";
        case ErrorCode::odd_total: return "odd-total";
        case ErrorCode::total_overflow: return "total-overflow";
        case ErrorCode::half_exceeds_b: return "half-exceeds-b";
        case ErrorCode::vertex_bounds: return "vertex-bounds";
        case ErrorCode::invalid_state: return "invalid-state";
        case ErrorCode::same_jug: return "same-jug";
        case ErrorCode::no_edge: return "no-edge";
        case ErrorCode::content_bounds: return "content-bounds";
        case ErrorCode::bad_input: return "bad-input";
    }
    return "unknown";
}

std::string to_string(Distribution v) {
    return "(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
}

std::string to_string(const Quadruple& q) {
    return "(" + std::to_string(q.a) + "," + std::to_string(q.b) + "," +
           std::to_string(q.c) + "," + std::to_string(q.d) + ")";
}

int Quadruple::capacity(Jug jug) const {
    switch (jug) {
        case Jug::A: return a;
        case Jug::B: return b;
        case Jug::C: return c;
    }
    return 0;
}

int Quadruple::level(Distribution v, Jug jug) const {
    switch (jug) {
        case Jug::A: return d - v.i - v.j;
        case Jug::B: return v.i;
        case Jug::C: return v.j;
    }
    return 0;
}

Quadruple validate_quadruple(int a, int b, int c, int d) {
    if (!(a > b && b > c && c > 0)) {
        throw PuzzleError(ErrorCode::ordering,
                          "capacities must satisfy a > b > c > 0, got a=" + std::to_string(a) +
                              " b=" + std::to_string(b) + " c=" + std::to_string(c));
    }
    if (d < 2) {
        throw PuzzleError(ErrorCode::nonpositive_total,
                          "total wine d must be a positive even amount, got d=" + std::to_string(d));
    }
    if (d % 2 != 0) {
        throw PuzzleError(ErrorCode::odd_total,
                          "total wine d must be even to split in halves, got d=" + std::to_string(d));
    }
    if (d > a + b + c) {
        throw PuzzleError(ErrorCode::total_overflow,
                          "total wine d=" + std::to_string(d) + " exceeds combined capacity " +
                              std::to_string(a + b + c));
    }
    if (b < d / 2) {
        throw PuzzleError(ErrorCode::half_exceeds_b,
                          "jug B capacity b=" + std::to_string(b) +
                              " is below the half share d/2=" + std::to_string(d / 2));
    }
    return Quadruple{a, b, c, d};
}

namespace {

void require_vertex(const Quadruple& q, Distribution v) {
    if (!q.in_vertex_bounds(v)) {
        throw PuzzleError(ErrorCode::vertex_bounds,
                          "distribution " + to_string(v) + " outside vertex bounds [0," +
                              std::to_string(q.b) + "]x[0," + std::to_string(q.c) + "]");
    }
}

}  // namespace

bool is_valid_state(const Quadruple& q, Distribution v) {
    require_vertex(q, v);
    const int level_a = q.d - v.i - v.j;
    return 0 <= level_a && level_a <= q.a;
}

PuzzleInstance make_instance(const Quadruple& q, Distribution start, Distribution target) {
    if (!is_valid_state(q, start)) {
        throw PuzzleError(ErrorCode::invalid_state,
                          "start " + to_string(start) + " leaves jug A with " +
                              std::to_string(q.d - start.i - start.j) + " gallons, outside [0," +
                              std::to_string(q.a) + "]");
    }
    if (!is_valid_state(q, target)) {
        throw PuzzleError(ErrorCode::invalid_state,
                          "target " + to_string(target) + " leaves jug A with " +
                              std::to_string(q.d - target.i - target.j) + " gallons, outside [0," +
                              std::to_string(q.a) + "]");
    }
    return PuzzleInstance{q, start, target};
}

PuzzleInstance make_instance(const Quadruple& q, Distribution start) {
    return make_instance(q, start, q.default_target());
}

}  // namespace jugs
