#ifndef JUGS_CORE_HPP
#define JUGS_CORE_HPP

#include <compare>
#include <stdexcept>
#include <string>

namespace jugs {

/// The three jugs. Underlying values index content/capacity arrays.
enum class Jug : int { A = 0, B = 1, C = 2 };

char jug_name(Jug jug);

enum class ErrorCode {
    ordering,           // a > b > c > 0 fails
    nonpositive_total,  // d < 2
    odd_total,          // d is not even
    total_overflow,     // d > a + b + c
    half_exceeds_b,     // b < d/2
    vertex_bounds,      // (i,j) outside [0,b] x [0,c]
    invalid_state,      // implied jug-A level outside [0,a]
    same_jug,           // pour with source == destination
    no_edge,            // edge classification requested for a non-edge
    content_bounds,     // a jug content outside [0, capacity]
    bad_input,          // malformed text input
};

const char* error_code_name(ErrorCode code);

class PuzzleError : public std::runtime_error {
public:
    PuzzleError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Contents of jugs B and C, in gallons. Jug A holds the rest of the wine:
/// given a total of d gallons its level is d - i - j.
struct Distribution {
    int i = 0;  // jug B
    int j = 0;  // jug C

    // Row-major order: (i,j) < (i',j') iff i < i' or (i == i' and j < j').
    friend auto operator<=>(const Distribution&, const Distribution&) = default;
};

std::string to_string(Distribution v);

/// Puzzle parameters: jug capacities a > b > c > 0 and total wine d.
/// Admissible quadruples have d even, b >= d/2 and d <= a + b + c.
struct Quadruple {
    int a = 0;
    int b = 0;
    int c = 0;
    int d = 0;

    int capacity(Jug jug) const;
    int level(Distribution v, Jug jug) const;

    bool in_vertex_bounds(Distribution v) const {
        return 0 <= v.i && v.i <= b && 0 <= v.j && v.j <= c;
    }

    long long vertex_count() const { return static_cast<long long>(b + 1) * (c + 1); }

    /// The half-and-half goal (d/2, 0). Always a valid vertex for an
    /// admissible quadruple.
    Distribution default_target() const { return {d / 2, 0}; }

    friend auto operator<=>(const Quadruple&, const Quadruple&) = default;
};

std::string to_string(const Quadruple& q);

/// Checks every quadruple condition and reports the first violation with a
/// distinct error code. Total overflow is tested before the b >= d/2
/// condition: d > a+b+c forces b < d/2 as well, so the reverse order would
/// make the overflow code unreachable.
Quadruple validate_quadruple(int a, int b, int c, int d);

/// True iff the implied jug-A level d-i-j lies in [0, a]. Throws
/// ErrorCode::vertex_bounds when v is not a vertex at all.
bool is_valid_state(const Quadruple& q, Distribution v);

/// One measurable pour: stops exactly when the source empties or the
/// destination fills, leaving all jug levels known.
struct Pour {
    Jug source = Jug::A;
    Jug destination = Jug::B;
    int amount = 0;  // gallons transferred, >= 1
    Distribution result;

    friend bool operator==(const Pour&, const Pour&) = default;
};

/// A quadruple plus start and target distributions, all validated.
struct PuzzleInstance {
    Quadruple quadruple;
    Distribution start;
    Distribution target;
};

/// Validates start and target against q (vertex bounds and state validity).
PuzzleInstance make_instance(const Quadruple& q, Distribution start, Distribution target);

/// Same, with the default target (d/2, 0).
PuzzleInstance make_instance(const Quadruple& q, Distribution start);

}  // namespace jugs

#endif
