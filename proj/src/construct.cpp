#include "sudoku/construct.hpp"

#include <numeric>
#include <stdexcept>

namespace sudoku {

namespace {

// Left-rotation offset of row r against the ascending first row.
inline int row_offset(int n, int row) {
    return (row % n) * n + row / n;
}

// Fills one row of the flat cell array from the closed form, rolling the
// symbol index instead of taking a modulus per cell.
inline void fill_row(std::vector<Cell>& cells, int side, int n, int row) {
    int value = row_offset(n, row) % side;
    const std::size_t base = static_cast<std::size_t>(row) * static_cast<std::size_t>(side);
    for (int col = 0; col < side; ++col) {
        cells[base + static_cast<std::size_t>(col)] = value;
        if (++value == side) value = 0;
    }
}

}  // namespace

int base_value(Order order, int row, int col) {
    const int side = order.side();
    if (row < 0 || row >= side || col < 0 || col >= side) {
        throw std::out_of_range("base_value: cell (" + std::to_string(row) + ", " +
                                std::to_string(col) + ") outside a side-" + std::to_string(side) +
                                " grid");
    }
    return (row_offset(order.box_side(), row) + col) % side;
}

Grid build_base_solution(Order order) {
    const int side = order.side();
    std::vector<Cell> cells(static_cast<std::size_t>(order.cell_count()));
    for (int row = 0; row < side; ++row) {
        fill_row(cells, side, order.box_side(), row);
    }
    return make_grid_unchecked(order, std::move(cells));
}

namespace par {

Grid build_base_solution(Order order) {
    const int side = order.side();
    const int n = order.box_side();
    std::vector<Cell> cells(static_cast<std::size_t>(order.cell_count()));
#pragma omp parallel for schedule(static)
    for (int row = 0; row < side; ++row) {
        fill_row(cells, side, n, row);
    }
    return make_grid_unchecked(order, std::move(cells));
}

}  // namespace par

Grid build_iterative(Order order) {
    const int n = order.box_side();
    const int side = order.side();
    std::vector<Cell> cells(static_cast<std::size_t>(order.cell_count()));

    auto row_begin = [&](int row) {
        return cells.begin() + static_cast<std::ptrdiff_t>(row) * side;
    };
    auto rotate_into = [&](int src_row, int shift, int dst_row) {
        auto src = row_begin(src_row);
        auto dst = row_begin(dst_row);
        for (int col = 0; col < side; ++col) {
            dst[col] = src[(col + shift) % side];
        }
    };

    std::iota(row_begin(0), row_begin(0) + side, 0);
    for (int row = 1; row < side; ++row) {
        if (row % n == 0) {
            rotate_into(0, row / n, row);  // band start: shift by one symbol per band
        } else {
            rotate_into(row - 1, n, row);  // within a band: shift by a group of n
        }
    }
    return make_grid_unchecked(order, std::move(cells));
}

Grid build_with_alphabet_order(Order order, const std::vector<int>& symbol_perm) {
    if (!detail::is_permutation_of(symbol_perm, order.side())) {
        throw std::invalid_argument("build_with_alphabet_order: not a permutation of 0.." +
                                    std::to_string(order.side() - 1));
    }
    Grid base = build_base_solution(order);
    std::vector<Cell> cells = base.cells();
    for (Cell& c : cells) {
        c = symbol_perm[static_cast<std::size_t>(c)];
    }
    return make_grid_unchecked(order, std::move(cells));
}

}  // namespace sudoku
