#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sudoku/construct.hpp"
#include "sudoku/grid.hpp"
#include "sudoku/rng.hpp"
#include "sudoku/solve.hpp"
#include "sudoku/transform.hpp"

using namespace sudoku;

namespace {

Grid random_partial(Order order, Xorshift64Star& rng) {
    std::vector<Cell> cells(static_cast<std::size_t>(order.cell_count()), kEmpty);
    for (Cell& cell : cells) {
        if (rng.next_below(3) == 0) {
            cell = static_cast<Cell>(rng.next_below(static_cast<std::uint64_t>(order.side())));
        }
    }
    return Grid(order, std::move(cells));
}

std::set<std::vector<Cell>> as_set(const std::vector<Grid>& grids) {
    std::set<std::vector<Cell>> out;
    for (const Grid& grid : grids) out.insert(grid.cells());
    return out;
}

int clue_count(const Grid& grid) {
    int clues = 0;
    for (const Cell cell : grid.cells()) clues += cell != kEmpty;
    return clues;
}

}  // namespace

TEST_CASE("a complete solution solves to itself") {
    const Grid base = build_base_solution(Order(3));
    const SolveOutcome outcome = solve(base);
    CHECK(outcome.exhausted);
    REQUIRE(outcome.solutions.size() == 1);
    CHECK(outcome.solutions[0] == base);
    CHECK(outcome.nodes_expanded >= 1);
}

TEST_CASE("the empty order-2 grid has exactly 288 completions") {
    const Grid empty = Grid::empty_grid(Order(2));
    const auto oracle_solutions = oracle::enumerate_solutions(empty);
    CHECK(oracle_solutions.size() == 288);

    const SolveOutcome outcome = solve(empty);
    CHECK(outcome.exhausted);
    CHECK(outcome.solutions.size() == oracle_solutions.size());
    CHECK(as_set(outcome.solutions) ==
          std::set<std::vector<Cell>>(oracle_solutions.begin(), oracle_solutions.end()));
    for (const Grid& solution : outcome.solutions) {
        CHECK(validate(solution).is_solution());
    }

    const auto [count, exhausted] = count_solutions(empty, kNoSolutionCap);
    CHECK(count == 288);
    CHECK(exhausted);
}

TEST_CASE("the cap truncates the search and clears exhausted") {
    const Grid empty = Grid::empty_grid(Order(2));
    const auto [count, exhausted] = count_solutions(empty, 10);
    CHECK(count == 10);
    CHECK_FALSE(exhausted);

    // A cap higher than the solution count is never hit, so the search still
    // runs to completion.
    const SolveOutcome outcome = solve(build_base_solution(Order(3)), 2);
    CHECK(outcome.solutions.size() == 1);
    CHECK(outcome.exhausted);
}

TEST_CASE("a cap of zero is rejected") {
    CHECK_THROWS_AS(solve(Grid::empty_grid(Order(2)), 0), std::invalid_argument);
    CHECK_THROWS_AS(count_solutions(Grid::empty_grid(Order(2)), 0), std::invalid_argument);
}

TEST_CASE("conflicting givens are unsatisfiable, not an error") {
    const Grid grid = Grid::from_rows(Order(2), {{0, 0, kEmpty, kEmpty},
                                                 {kEmpty, kEmpty, kEmpty, kEmpty},
                                                 {kEmpty, kEmpty, kEmpty, kEmpty},
                                                 {kEmpty, kEmpty, kEmpty, kEmpty}});
    const SolveOutcome outcome = solve(grid);
    CHECK(outcome.unsatisfiable());
    CHECK(outcome.exhausted);
    CHECK(outcome.solutions.empty());
}

TEST_CASE("an over-constrained cell is detected without conflicting givens") {
    // (0,0) sees 0 and 1 in its row, 2 in its column, 3 in its box: no
    // candidate survives, yet every given is mutually consistent.
    const Grid grid = Grid::from_rows(Order(2), {{kEmpty, 0, 1, kEmpty},
                                                 {kEmpty, 3, kEmpty, kEmpty},
                                                 {2, kEmpty, kEmpty, kEmpty},
                                                 {kEmpty, kEmpty, kEmpty, kEmpty}});
    CHECK(validate(grid).valid());
    CHECK(solve(grid).unsatisfiable());
}

TEST_CASE("solver output extends the givens") {
    const Grid puzzle = make_puzzle(build_base_solution(Order(2)), 17, 6);
    const SolveOutcome outcome = solve(puzzle);
    REQUIRE(outcome.solutions.size() == 1);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            if (puzzle.at(r, c) != kEmpty) {
                CHECK(outcome.solutions[0].at(r, c) == puzzle.at(r, c));
            }
        }
    }
}

TEST_CASE("solve agrees with the naive enumerator on random order-2 grids") {
    Xorshift64Star rng(31337);
    for (int trial = 0; trial < 500; ++trial) {
        const Grid grid = random_partial(Order(2), rng);
        const auto expected = oracle::enumerate_solutions(grid);
        const SolveOutcome outcome = solve(grid);
        CHECK(outcome.exhausted);
        CHECK(outcome.solutions.size() == expected.size());
        CHECK(as_set(outcome.solutions) ==
              std::set<std::vector<Cell>>(expected.begin(), expected.end()));
    }
}

TEST_CASE("repeated solves return solutions in the same order") {
    const Grid empty = Grid::empty_grid(Order(2));
    const SolveOutcome first = solve(empty);
    const SolveOutcome second = solve(empty);
    CHECK(first.solutions == second.solutions);
    CHECK(first.nodes_expanded == second.nodes_expanded);
    CHECK(first.exhausted == second.exhausted);

    const Grid puzzle = make_puzzle(build_base_solution(Order(3)), 4, 30);
    CHECK(solve(puzzle).solutions == solve(puzzle).solutions);
    CHECK(solve(puzzle, 1).solutions == solve(puzzle, 1).solutions);
}

TEST_CASE("count_solutions matches solve across caps") {
    const Grid empty = Grid::empty_grid(Order(2));
    for (const std::uint64_t cap : {1ull, 7ull, 288ull, 500ull}) {
        const SolveOutcome outcome = solve(empty, cap);
        const auto [count, exhausted] = count_solutions(empty, cap);
        CHECK(count == outcome.solutions.size());
        CHECK(exhausted == outcome.exhausted);
    }
}

TEST_CASE("make_puzzle keeps a unique completion equal to its source") {
    for (const int n : {2, 3}) {
        const Grid solution = build_base_solution(Order(n));
        const int target = n == 2 ? 6 : 30;
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const Grid puzzle = make_puzzle(solution, seed, target);
            CHECK(clue_count(puzzle) >= target);
            for (int r = 0; r < solution.side(); ++r) {
                for (int c = 0; c < solution.side(); ++c) {
                    if (puzzle.at(r, c) != kEmpty) CHECK(puzzle.at(r, c) == solution.at(r, c));
                }
            }
            const SolveOutcome outcome = solve(puzzle, 2);
            CHECK(outcome.exhausted);
            REQUIRE(outcome.solutions.size() == 1);
            CHECK(outcome.solutions[0] == solution);
        }
    }
}

TEST_CASE("make_puzzle is deterministic in the seed") {
    const Grid solution = build_base_solution(Order(3));
    CHECK(make_puzzle(solution, 77, 28) == make_puzzle(solution, 77, 28));
    CHECK(make_puzzle(solution, 77, 28) != make_puzzle(solution, 78, 28));
}

TEST_CASE("a target of a full grid removes nothing") {
    const Grid solution = build_base_solution(Order(2));
    CHECK(make_puzzle(solution, 1, 16) == solution);
}

TEST_CASE("make_puzzle validates its input") {
    CHECK_THROWS_AS(make_puzzle(Grid::empty_grid(Order(2)), 1, 4), std::invalid_argument);
    const Grid bad(Order(2), std::vector<Cell>(16, 2));
    CHECK_THROWS_AS(make_puzzle(bad, 1, 4), std::invalid_argument);
    const Grid solution = build_base_solution(Order(2));
    CHECK_THROWS_AS(make_puzzle(solution, 1, -1), std::invalid_argument);
    CHECK_THROWS_AS(make_puzzle(solution, 1, 17), std::invalid_argument);
}
