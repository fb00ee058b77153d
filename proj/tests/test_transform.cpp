#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sudoku/construct.hpp"
#include "sudoku/grid.hpp"
#include "sudoku/rng.hpp"
#include "sudoku/transform.hpp"

using namespace sudoku;

TEST_CASE("swapping bands moves whole row blocks") {
    const Grid base = build_base_solution(Order(2));  // 0123 / 2301 / 1230 / 3012
    const Grid swapped = apply_transform(base, SwapBands{0, 1});
    CHECK(swapped == Grid::from_rows(Order(2), {{1, 2, 3, 0},
                                                {3, 0, 1, 2},
                                                {0, 1, 2, 3},
                                                {2, 3, 0, 1}}));
    CHECK(validate(swapped).is_solution());
}

TEST_CASE("swapping rows inside a band leaves the other rows alone") {
    const Grid base = build_base_solution(Order(3));
    const Grid swapped = apply_transform(base, SwapRowsInBand{1, 0, 2});
    for (int c = 0; c < 9; ++c) {
        CHECK(swapped.at(3, c) == base.at(5, c));
        CHECK(swapped.at(5, c) == base.at(3, c));
        CHECK(swapped.at(4, c) == base.at(4, c));
        CHECK(swapped.at(0, c) == base.at(0, c));
        CHECK(swapped.at(8, c) == base.at(8, c));
    }
    CHECK(validate(swapped).is_solution());
}

TEST_CASE("column-side swaps mirror the row-side ones under transposition") {
    const Grid base = build_base_solution(Order(3));
    const Grid via_cols = apply_transform(base, SwapColsInStack{2, 0, 1});
    const Grid via_rows = apply_transform(
        apply_transform(apply_transform(base, Transpose{}), SwapRowsInBand{2, 0, 1}),
        Transpose{});
    CHECK(via_cols == via_rows);

    const Grid stacks = apply_transform(base, SwapStacks{0, 2});
    const Grid bands = apply_transform(
        apply_transform(apply_transform(base, Transpose{}), SwapBands{0, 2}), Transpose{});
    CHECK(stacks == bands);
}

TEST_CASE("transpose exchanges rows and columns") {
    const Grid base = build_base_solution(Order(2));
    const Grid t = apply_transform(base, Transpose{});
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) CHECK(t.at(r, c) == base.at(c, r));
    }
    CHECK(validate(t).is_solution());
}

TEST_CASE("each swap is an involution") {
    const Grid base = build_base_solution(Order(3));
    for (const Transform& transform :
         {Transform(SwapRowsInBand{0, 1, 2}), Transform(SwapBands{1, 2}),
          Transform(SwapColsInStack{2, 0, 2}), Transform(SwapStacks{0, 1}),
          Transform(Transpose{})}) {
        CHECK(apply_transform(apply_transform(base, transform), transform) == base);
    }
}

TEST_CASE("relabeling composed with its inverse is the identity") {
    Xorshift64Star rng(11);
    const std::vector<int> perm = random_permutation(9, rng);
    std::vector<int> inverse(9);
    for (int i = 0; i < 9; ++i) inverse[static_cast<std::size_t>(perm[i])] = i;
    const Grid base = build_base_solution(Order(3));
    CHECK(apply_transform(apply_transform(base, RelabelSymbols{perm}),
                          RelabelSymbols{inverse}) == base);
}

TEST_CASE("relabeling skips empty cells") {
    Grid grid = Grid::empty_grid(Order(2));
    const Grid relabeled = apply_transform(grid, RelabelSymbols{{3, 2, 1, 0}});
    CHECK(relabeled == grid);
}

TEST_CASE("transform parameters are range-checked") {
    const Grid base = build_base_solution(Order(2));
    CHECK_THROWS_AS(apply_transform(base, SwapBands{0, 2}), std::out_of_range);
    CHECK_THROWS_AS(apply_transform(base, SwapBands{-1, 0}), std::out_of_range);
    CHECK_THROWS_AS(apply_transform(base, SwapRowsInBand{2, 0, 1}), std::out_of_range);
    CHECK_THROWS_AS(apply_transform(base, SwapRowsInBand{0, 0, 2}), std::out_of_range);
    CHECK_THROWS_AS(apply_transform(base, SwapColsInStack{0, -1, 1}), std::out_of_range);
    CHECK_THROWS_AS(apply_transform(base, SwapStacks{0, 7}), std::out_of_range);
    CHECK_THROWS_AS(apply_transform(base, RelabelSymbols{{0, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(apply_transform(base, RelabelSymbols{{0, 1, 2, 2}}), std::invalid_argument);
}

TEST_CASE("random in-vocabulary transforms preserve validity") {
    const Grid base = build_base_solution(Order(3));
    Xorshift64Star rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const std::vector<Transform> seq = scramble_sequence(Order(3), {rng.next(), 1});
        REQUIRE(seq.size() == 1);
        CHECK(validate(apply_transform(base, seq[0])).is_solution());
    }
}

TEST_CASE("row permutation across a band boundary breaks a box") {
    const Grid base = build_base_solution(Order(3));
    const Grid rows_swapped = permute_rows_unchecked(base, {3, 1, 2, 0, 4, 5, 6, 7, 8});
    const ValidityReport row_report = validate(rows_swapped);
    CHECK_FALSE(row_report.valid());
    CHECK(row_report.complete);
    // Rows and columns stay permutations; only boxes break. The first box now
    // holds 123/345/678, so symbol index 3 repeats at (0, 2) and (1, 0).
    for (const Violation& v : row_report.violations) CHECK(v.kind == UnitKind::Box);
    const Violation& first = row_report.violations[0];
    CHECK(first.unit_index == 0);
    CHECK(first.symbol_index == 3);
    CHECK(first.positions == std::vector<std::pair<int, int>>{{0, 2}, {1, 0}});

    // The oracle sees the same damage.
    CHECK_FALSE(oracle::find_duplicates(rows_swapped).empty());
}

TEST_CASE("column permutation across a stack boundary breaks a box") {
    // In the base grid a box survives a column rearrangement as long as its
    // three columns differ pairwise by neither 3 nor 6 (the offsets of the
    // rows in a band are b, b+3, b+6). Swapping columns 0 and 4 puts columns
    // {4, 1, 2} into stack 0, and 4 - 1 = 3, so boxes break.
    const Grid base = build_base_solution(Order(3));
    const Grid cols_swapped = permute_cols_unchecked(base, {4, 1, 2, 3, 0, 5, 6, 7, 8});
    const ValidityReport report = validate(cols_swapped);
    CHECK_FALSE(report.valid());
    CHECK(report.complete);
    for (const Violation& v : report.violations) CHECK(v.kind == UnitKind::Box);
    // Box 0 now reads 412 / 745 / 178: symbols 1, 4 and 7 each appear twice.
    const Violation& first = report.violations[0];
    CHECK(first.unit_index == 0);
    CHECK(first.symbol_index == 1);
    CHECK(first.positions == std::vector<std::pair<int, int>>{{0, 1}, {2, 0}});
    CHECK_FALSE(oracle::find_duplicates(cols_swapped).empty());
}

TEST_CASE("the mirror-image column swap of the breaking row swap is benign") {
    // Unlike rows 0 and 3, columns 0 and 3 occupy the same within-stack
    // position, so swapping them keeps every stack's column set at pairwise
    // differences 1 and 2 and the grid stays a solution. Cross-boundary
    // permutations are not uniformly destructive; that is exactly why the
    // unchecked operations report through the validator instead of promising
    // anything.
    const Grid base = build_base_solution(Order(3));
    const Grid cols_swapped = permute_cols_unchecked(base, {3, 1, 2, 0, 4, 5, 6, 7, 8});
    CHECK(validate(cols_swapped).is_solution());
    CHECK(oracle::find_duplicates(cols_swapped).empty());
}

TEST_CASE("unchecked permutations validate their argument") {
    const Grid base = build_base_solution(Order(2));
    CHECK_THROWS_AS(permute_rows_unchecked(base, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(permute_rows_unchecked(base, {0, 1, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(permute_cols_unchecked(base, {0, 1, 2, 4}), std::invalid_argument);
}

TEST_CASE("unchecked permutation with a band-respecting order stays valid") {
    const Grid base = build_base_solution(Order(3));
    // Rows reordered inside bands only: exactly what the checked swaps allow.
    const Grid grid = permute_rows_unchecked(base, {1, 0, 2, 5, 4, 3, 6, 8, 7});
    CHECK(validate(grid).is_solution());
}

TEST_CASE("scramble sequences are a pure function of order, seed and steps") {
    const ScramblePlan plan{123456789, 40};
    CHECK(scramble_sequence(Order(3), plan) == scramble_sequence(Order(3), plan));
    CHECK(scramble_sequence(Order(3), {123456789, 40}) !=
          scramble_sequence(Order(3), {123456790, 40}));

    const Grid base = build_base_solution(Order(3));
    CHECK(scramble(base, plan) == scramble(base, plan));
    CHECK(scramble(base, plan) != scramble(base, {987654321, 40}));
}

TEST_CASE("scrambles preserve validity") {
    for (const int n : {2, 3, 4}) {
        const Grid base = build_base_solution(Order(n));
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const Grid scrambled = scramble(base, {seed, 25});
            CHECK(validate(scrambled).is_solution());
        }
    }
}

TEST_CASE("a zero-step scramble is the identity") {
    const Grid base = build_base_solution(Order(2));
    CHECK(scramble(base, {42, 0}) == base);
    CHECK(scramble_sequence(Order(2), {42, 0}).empty());
}

TEST_CASE("scramble demands a complete, violation-free input") {
    CHECK_THROWS_AS(scramble(Grid::empty_grid(Order(2)), {1, 3}), std::invalid_argument);
    const Grid bad(Order(2), std::vector<Cell>(16, 0));
    CHECK_THROWS_AS(scramble(bad, {1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(scramble_sequence(Order(2), {1, -1}), std::invalid_argument);
}

TEST_CASE("order-2 scrambles stay inside the enumerated solution set") {
    const auto all = oracle::enumerate_solutions(Grid::empty_grid(Order(2)));
    const std::set<std::vector<Cell>> solution_set(all.begin(), all.end());
    const Grid base = build_base_solution(Order(2));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        CHECK(solution_set.count(scramble(base, {seed, 30}).cells()) == 1);
    }
}
