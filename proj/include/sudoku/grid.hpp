#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sudoku {

// A cell is either empty or holds a 0-based symbol index below the grid side.
using Cell = int;
inline constexpr Cell kEmpty = -1;

// Largest supported box side. Keeps every cell index comfortably inside int
// (side 16384, 268M cells).
inline constexpr int kMaxOrder = 128;

// Box side n. The grid side is N = n*n; boxes are n x n.
class Order {
public:
    explicit Order(int box_side);

    int box_side() const { return n_; }
    int side() const { return n_ * n_; }
    int cell_count() const { return side() * side(); }

    bool operator==(const Order&) const = default;

private:
    int n_;
};

// An N x N matrix of cells, row-major, rows and columns 0-indexed. Immutable
// after construction; every operation in the library returns a new grid.
//
// Box addressing: cell (r, c) lies in box (r / n) * n + (c / n).
class Grid {
public:
    // cells is row-major with exactly N*N entries, each kEmpty or < N.
    // Throws std::invalid_argument on a size mismatch, std::out_of_range on a
    // bad symbol index.
    Grid(Order order, std::vector<Cell> cells);

    // Builds from a row matrix; rejects wrong row/column counts.
    static Grid from_rows(Order order, const std::vector<std::vector<Cell>>& rows);

    static Grid empty_grid(Order order);

    Order order() const { return order_; }
    int side() const { return order_.side(); }
    int box_side() const { return order_.box_side(); }

    // Bounds-checked; throws std::out_of_range.
    Cell at(int row, int col) const;

    const std::vector<Cell>& cells() const { return cells_; }

    bool operator==(const Grid&) const = default;

private:
    struct Trusted {};
    Grid(Order order, std::vector<Cell> cells, Trusted);

    Order order_;
    std::vector<Cell> cells_;

    friend Grid make_grid_unchecked(Order, std::vector<Cell>);
};

namespace detail {
// Returns true iff perm is a bijection on 0..count-1.
bool is_permutation_of(const std::vector<int>& perm, int count);
}  // namespace detail

// Internal fast path: skips per-cell validation. Callers guarantee the cells
// are in range (e.g. output of a construction or a cell rearrangement).
Grid make_grid_unchecked(Order order, std::vector<Cell> cells);

enum class UnitKind { Row, Column, Box };

// One duplicated symbol inside one unit, with every position it occupies,
// listed in the unit's scan order (rows by column, columns by row, boxes
// row-major).
struct Violation {
    UnitKind kind;
    int unit_index;
    int symbol_index;
    std::vector<std::pair<int, int>> positions;

    bool operator==(const Violation&) const = default;
};

// Outcome of constraint checking. violations is sorted by (kind, unit_index,
// symbol_index) with kinds ordered row < column < box.
struct ValidityReport {
    bool complete = false;
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }
    bool is_solution() const { return complete && violations.empty(); }
};

// Scans every row, column and box and reports each duplicated (unit, symbol)
// pair with all positions. Never fails; empty cells are simply not counted.
ValidityReport validate(const Grid& grid);

namespace par {
// OpenMP kernel over the 3N units. Identical output to sudoku::validate.
ValidityReport validate(const Grid& grid);
}  // namespace par

const char* unit_kind_name(UnitKind kind);

}  // namespace sudoku
