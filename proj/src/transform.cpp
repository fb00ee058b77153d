#include "sudoku/transform.hpp"

#include <stdexcept>
#include <string>

#include "sudoku/rng.hpp"

namespace sudoku {

namespace {

void check_index(int value, int bound, const char* what) {
    if (value < 0 || value >= bound) {
        throw std::out_of_range(std::string(what) + " index " + std::to_string(value) +
                                " outside 0.." + std::to_string(bound - 1));
    }
}

void swap_row_blocks(std::vector<Cell>& cells, int side, int row_a, int row_b, int height) {
    for (int dr = 0; dr < height; ++dr) {
        auto a = cells.begin() + static_cast<std::ptrdiff_t>(row_a + dr) * side;
        auto b = cells.begin() + static_cast<std::ptrdiff_t>(row_b + dr) * side;
        std::swap_ranges(a, a + side, b);
    }
}

void swap_col_blocks(std::vector<Cell>& cells, int side, int col_a, int col_b, int width) {
    for (int row = 0; row < side; ++row) {
        const std::size_t base = static_cast<std::size_t>(row) * static_cast<std::size_t>(side);
        for (int dc = 0; dc < width; ++dc) {
            std::swap(cells[base + static_cast<std::size_t>(col_a + dc)],
                      cells[base + static_cast<std::size_t>(col_b + dc)]);
        }
    }
}

struct Applier {
    const Grid& grid;

    Grid operator()(const RelabelSymbols& t) const {
        const int side = grid.side();
        if (!detail::is_permutation_of(t.perm, side)) {
            throw std::invalid_argument("relabel: not a permutation of 0.." +
                                        std::to_string(side - 1));
        }
        std::vector<Cell> cells = grid.cells();
        for (Cell& c : cells) {
            if (c != kEmpty) c = t.perm[static_cast<std::size_t>(c)];
        }
        return make_grid_unchecked(grid.order(), std::move(cells));
    }

    Grid operator()(const SwapRowsInBand& t) const {
        const int n = grid.box_side();
        check_index(t.band, n, "band");
        check_index(t.i, n, "row-in-band");
        check_index(t.j, n, "row-in-band");
        std::vector<Cell> cells = grid.cells();
        swap_row_blocks(cells, grid.side(), t.band * n + t.i, t.band * n + t.j, 1);
        return make_grid_unchecked(grid.order(), std::move(cells));
    }

    Grid operator()(const SwapBands& t) const {
        const int n = grid.box_side();
        check_index(t.a, n, "band");
        check_index(t.b, n, "band");
        std::vector<Cell> cells = grid.cells();
        if (t.a != t.b) swap_row_blocks(cells, grid.side(), t.a * n, t.b * n, n);
        return make_grid_unchecked(grid.order(), std::move(cells));
    }

    Grid operator()(const SwapColsInStack& t) const {
        const int n = grid.box_side();
        check_index(t.stack, n, "stack");
        check_index(t.i, n, "column-in-stack");
        check_index(t.j, n, "column-in-stack");
        std::vector<Cell> cells = grid.cells();
        swap_col_blocks(cells, grid.side(), t.stack * n + t.i, t.stack * n + t.j, 1);
        return make_grid_unchecked(grid.order(), std::move(cells));
    }

    Grid operator()(const SwapStacks& t) const {
        const int n = grid.box_side();
        check_index(t.a, n, "stack");
        check_index(t.b, n, "stack");
        std::vector<Cell> cells = grid.cells();
        if (t.a != t.b) swap_col_blocks(cells, grid.side(), t.a * n, t.b * n, n);
        return make_grid_unchecked(grid.order(), std::move(cells));
    }

    Grid operator()(const Transpose&) const {
        const int side = grid.side();
        const std::vector<Cell>& src = grid.cells();
        std::vector<Cell> cells(src.size());
        for (int r = 0; r < side; ++r) {
            for (int c = 0; c < side; ++c) {
                cells[static_cast<std::size_t>(c * side + r)] =
                    src[static_cast<std::size_t>(r * side + c)];
            }
        }
        return make_grid_unchecked(grid.order(), std::move(cells));
    }
};

std::vector<Cell> permuted_rows(const Grid& grid, const std::vector<int>& row_perm) {
    const int side = grid.side();
    if (!detail::is_permutation_of(row_perm, side)) {
        throw std::invalid_argument("row permutation: not a permutation of 0.." +
                                    std::to_string(side - 1));
    }
    const std::vector<Cell>& src = grid.cells();
    std::vector<Cell> cells(src.size());
    for (int r = 0; r < side; ++r) {
        const auto from = static_cast<std::size_t>(row_perm[static_cast<std::size_t>(r)]) *
                          static_cast<std::size_t>(side);
        std::copy_n(src.begin() + static_cast<std::ptrdiff_t>(from), side,
                    cells.begin() + static_cast<std::ptrdiff_t>(r) * side);
    }
    return cells;
}

}  // namespace

Grid apply_transform(const Grid& grid, const Transform& transform) {
    return std::visit(Applier{grid}, transform);
}

Grid permute_rows_unchecked(const Grid& grid, const std::vector<int>& row_perm) {
    return make_grid_unchecked(grid.order(), permuted_rows(grid, row_perm));
}

Grid permute_cols_unchecked(const Grid& grid, const std::vector<int>& col_perm) {
    const int side = grid.side();
    if (!detail::is_permutation_of(col_perm, side)) {
        throw std::invalid_argument("column permutation: not a permutation of 0.." +
                                    std::to_string(side - 1));
    }
    const std::vector<Cell>& src = grid.cells();
    std::vector<Cell> cells(src.size());
    for (int r = 0; r < side; ++r) {
        const std::size_t base = static_cast<std::size_t>(r) * static_cast<std::size_t>(side);
        for (int c = 0; c < side; ++c) {
            cells[base + static_cast<std::size_t>(c)] =
                src[base + static_cast<std::size_t>(col_perm[static_cast<std::size_t>(c)])];
        }
    }
    return make_grid_unchecked(grid.order(), std::move(cells));
}

std::vector<Transform> scramble_sequence(Order order, const ScramblePlan& plan) {
    if (plan.steps < 0) {
        throw std::invalid_argument("scramble: steps must be >= 0");
    }
    const int n = order.box_side();
    const int side = order.side();
    Xorshift64Star rng(plan.seed);

    auto small = [&] { return static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n))); };

    std::vector<Transform> sequence;
    sequence.reserve(static_cast<std::size_t>(plan.steps));
    for (int step = 0; step < plan.steps; ++step) {
        switch (rng.next_below(6)) {
            case 0: sequence.emplace_back(RelabelSymbols{random_permutation(side, rng)}); break;
            case 1: sequence.emplace_back(SwapRowsInBand{small(), small(), small()}); break;
            case 2: sequence.emplace_back(SwapBands{small(), small()}); break;
            case 3: sequence.emplace_back(SwapColsInStack{small(), small(), small()}); break;
            case 4: sequence.emplace_back(SwapStacks{small(), small()}); break;
            default: sequence.emplace_back(Transpose{}); break;
        }
    }
    return sequence;
}

Grid scramble(const Grid& grid, const ScramblePlan& plan) {
    const ValidityReport report = validate(grid);
    if (!report.is_solution()) {
        throw std::invalid_argument(report.complete ? "scramble: input grid has violations"
                                                    : "scramble: input grid is incomplete");
    }
    Grid result = grid;
    for (const Transform& t : scramble_sequence(grid.order(), plan)) {
        result = apply_transform(result, t);
    }
    return result;
}

}  // namespace sudoku
