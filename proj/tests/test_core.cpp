#include <doctest.h>

#include "jugs/core.hpp"
#include "jugs/verify.hpp"

using namespace jugs;

namespace {

ErrorCode code_of(int a, int b, int c, int d) {
    try {
        validate_quadruple(a, b, c, d);
    } catch (const PuzzleError& e) {
        return e.code();
    }
    FAIL("expected validation to fail");
    return ErrorCode::bad_input;
}

}  // namespace

TEST_CASE("validate_quadruple accepts the worked example") {
    const Quadruple q = validate_quadruple(7, 4, 2, 6);
    CHECK(q == Quadruple{7, 4, 2, 6});
    CHECK(q.vertex_count() == 15);
    CHECK(q.default_target() == Distribution{3, 0});
}

TEST_CASE("validate_quadruple rejects each violation with its own code") {
    CHECK(code_of(7, 4, 2, 7) == ErrorCode::odd_total);
    CHECK(code_of(7, 3, 2, 8) == ErrorCode::half_exceeds_b);
    CHECK(code_of(4, 4, 2, 6) == ErrorCode::ordering);
    CHECK(code_of(4, 3, 2, 10) == ErrorCode::total_overflow);
    CHECK(code_of(7, 4, 2, 0) == ErrorCode::nonpositive_total);
    CHECK(code_of(7, 4, 2, -2) == ErrorCode::nonpositive_total);
    CHECK(code_of(7, 4, 0, 6) == ErrorCode::ordering);
    CHECK(code_of(7, 2, 4, 6) == ErrorCode::ordering);
}

TEST_CASE("is_valid_state follows the jug-A bound") {
    CHECK(is_valid_state(validate_quadruple(7, 4, 2, 6), {0, 0}));
    CHECK_FALSE(is_valid_state(validate_quadruple(5, 4, 3, 8), {0, 0}));
    CHECK(is_valid_state(validate_quadruple(10, 7, 3, 10), {7, 3}));  // jug A exactly empty

    CHECK_THROWS_WITH_AS(is_valid_state(validate_quadruple(7, 4, 2, 6), {5, 0}),
                         doctest::Contains("vertex bounds"), PuzzleError);
    CHECK_THROWS_AS(is_valid_state(validate_quadruple(7, 4, 2, 6), {0, -1}), PuzzleError);
}

TEST_CASE("default target is always a valid vertex") {
    for (const Quadruple& q : admissible_quadruples(12)) {
        const Distribution target = q.default_target();
        REQUIRE(q.in_vertex_bounds(target));
        REQUIRE(is_valid_state(q, target));
    }
}

TEST_CASE("valid states conserve the total and respect capacities") {
    for (const Quadruple& q : admissible_quadruples(10)) {
        for (int i = 0; i <= q.b; ++i) {
            for (int j = 0; j <= q.c; ++j) {
                const Distribution v{i, j};
                if (!is_valid_state(q, v)) continue;
                int total = 0;
                for (Jug jug : {Jug::A, Jug::B, Jug::C}) {
                    const int level = q.level(v, jug);
                    REQUIRE(level >= 0);
                    REQUIRE(level <= q.capacity(jug));
                    total += level;
                }
                REQUIRE(total == q.d);
            }
        }
    }
}

TEST_CASE("make_instance validates start and target") {
    const Quadruple q = validate_quadruple(10, 7, 3, 10);
    const PuzzleInstance p = make_instance(q, {0, 0});
    CHECK(p.target == Distribution{5, 0});

    const Quadruple tight = validate_quadruple(5, 4, 3, 8);
    CHECK_THROWS_AS(make_instance(tight, {0, 0}), PuzzleError);          // start overfills A
    CHECK_THROWS_AS(make_instance(tight, {4, 3}, {0, 0}), PuzzleError);  // target overfills A
}

TEST_CASE("jug names and error code names are stable") {
    CHECK(jug_name(Jug::A) == 'A');
    CHECK(jug_name(Jug::B) == 'B');
    CHECK(jug_name(Jug::C) == 'C');
    CHECK(std::string(error_code_name(ErrorCode::odd_total)) == "odd-total");
    CHECK(to_string(Distribution{3, 0}) == "(3,0)");
    CHECK(to_string(Quadruple{7, 4, 2, 6}) == "(7,4,2,6)");
}
