// Command-line front end: generate, validate, transform, solve, mask.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sudoku/construct.hpp"
#include "sudoku/grid.hpp"
#include "sudoku/solve.hpp"
#include "sudoku/textio.hpp"
#include "sudoku/transform.hpp"

namespace {

using sudoku::Grid;
using sudoku::GridDocument;
using sudoku::Order;
using sudoku::Transform;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write \"" + path + "\"");
    out << text;
}

GridDocument load_document(const std::string& path) {
    return sudoku::parse_grid(read_file(path));
}

std::vector<int> parse_csv_ints(const std::string& text) {
    std::vector<int> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string field =
            text.substr(pos, (comma == std::string::npos ? text.size() : comma) - pos);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(field, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != field.size()) {
            throw std::invalid_argument("\"" + field + "\" is not an integer");
        }
        values.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return values;
}

// One --op argument: a name, optionally followed by ":" and comma-separated
// integer parameters, e.g. "swap-bands:0,1" or "transpose".
Grid apply_op(const Grid& grid, const std::string& spec) {
    const std::size_t colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    std::vector<int> args;
    if (colon != std::string::npos) args = parse_csv_ints(spec.substr(colon + 1));

    const auto want = [&](std::size_t count) {
        if (args.size() != count) {
            throw std::invalid_argument("op \"" + name + "\" takes " + std::to_string(count) +
                                        " parameters, got " + std::to_string(args.size()));
        }
    };
    if (name == "relabel") {
        return apply_transform(grid, sudoku::RelabelSymbols{args});
    }
    if (name == "swap-rows-in-band") {
        want(3);
        return apply_transform(grid, sudoku::SwapRowsInBand{args[0], args[1], args[2]});
    }
    if (name == "swap-bands") {
        want(2);
        return apply_transform(grid, sudoku::SwapBands{args[0], args[1]});
    }
    if (name == "swap-cols-in-stack") {
        want(3);
        return apply_transform(grid, sudoku::SwapColsInStack{args[0], args[1], args[2]});
    }
    if (name == "swap-stacks") {
        want(2);
        return apply_transform(grid, sudoku::SwapStacks{args[0], args[1]});
    }
    if (name == "transpose") {
        want(0);
        return apply_transform(grid, sudoku::Transpose{});
    }
    if (name == "permute-rows-unchecked") {
        return permute_rows_unchecked(grid, args);
    }
    if (name == "permute-cols-unchecked") {
        return permute_cols_unchecked(grid, args);
    }
    throw std::invalid_argument("unknown op \"" + name + "\"");
}

int run_generate(int n, const std::string& symbol_perm, bool scrambled, std::uint64_t seed,
                 int steps, const std::string& out_path) {
    const Order order(n);
    Grid grid = symbol_perm.empty()
                    ? sudoku::par::build_base_solution(order)
                    : sudoku::build_with_alphabet_order(order, parse_csv_ints(symbol_perm));
    if (scrambled) grid = sudoku::scramble(grid, {seed, steps});
    write_output(sudoku::render_grid(GridDocument(sudoku::default_alphabet(order), grid)),
                 out_path);
    return 0;
}

int run_validate(const std::string& path) {
    const GridDocument doc = load_document(path);
    const sudoku::ValidityReport report = sudoku::par::validate(doc.grid());
    if (report.valid()) {
        std::cout << (report.complete ? "VALID (complete)\n" : "VALID (partial)\n");
        return 0;
    }
    std::cout << "INVALID (" << report.violations.size() << " duplicated symbol"
              << (report.violations.size() == 1 ? "" : "s") << ")\n";
    for (const sudoku::Violation& v : report.violations) {
        std::cout << sudoku::unit_kind_name(v.kind) << ' ' << v.unit_index << ": \""
                  << doc.alphabet().token(v.symbol_index) << "\" at";
        for (std::size_t i = 0; i < v.positions.size(); ++i) {
            std::cout << (i == 0 ? " " : ", ") << '(' << v.positions[i].first << ','
                      << v.positions[i].second << ')';
        }
        std::cout << '\n';
    }
    return 1;
}

int run_transform(const std::string& path, const std::vector<std::string>& ops) {
    const GridDocument doc = load_document(path);
    Grid grid = doc.grid();
    for (const std::string& spec : ops) grid = apply_op(grid, spec);
    std::cout << sudoku::render_grid(GridDocument(doc.alphabet(), grid));
    return 0;
}

int run_solve(const std::string& path, const std::string& cap_text) {
    std::uint64_t cap = sudoku::kNoSolutionCap;
    if (cap_text != "all") {
        try {
            cap = std::stoull(cap_text);
        } catch (const std::exception&) {
            cap = 0;
        }
        if (cap == 0) throw std::invalid_argument("--cap takes a positive integer or \"all\"");
    }
    const GridDocument doc = load_document(path);
    const sudoku::SolveOutcome outcome = sudoku::solve(doc.grid(), cap);
    for (const Grid& solution : outcome.solutions) {
        std::cout << sudoku::render_grid(GridDocument(doc.alphabet(), solution)) << '\n';
    }
    std::cout << "count=" << outcome.solutions.size()
              << " exhausted=" << (outcome.exhausted ? "true" : "false") << '\n';
    return 0;
}

int run_mask(const std::string& path, std::uint64_t seed, int clues) {
    const GridDocument doc = load_document(path);
    const Grid puzzle = sudoku::make_puzzle(doc.grid(), seed, clues);
    std::cout << sudoku::render_grid(GridDocument(doc.alphabet(), puzzle));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Sudoku (n*n boxes) generator, validator and solver"};
    app.require_subcommand(1);
    app.failure_message([](const CLI::App*, const CLI::Error& e) {
        return std::string("error: ") + e.what() + "\n";
    });

    int n = 0;
    std::string symbol_perm;
    std::uint64_t scramble_seed = 0;
    int steps = 0;
    std::string out_path;
    CLI::App* generate = app.add_subcommand("generate", "emit the base solution for order n");
    generate->add_option("--n", n, "box side (grid is n*n x n*n)")->required();
    CLI::Option* perm_opt =
        generate->add_option("--symbol-perm", symbol_perm,
                             "relabel symbols: comma-separated bijection on 0..N-1");
    CLI::Option* seed_opt =
        generate->add_option("--scramble-seed", scramble_seed, "seed for a reproducible scramble");
    CLI::Option* steps_opt =
        generate->add_option("--steps", steps, "number of scramble transforms");
    generate->add_option("-o,--output", out_path, "write to FILE instead of stdout");
    seed_opt->needs(steps_opt);
    steps_opt->needs(seed_opt);
    perm_opt->excludes(seed_opt);
    perm_opt->excludes(steps_opt);

    std::string validate_path;
    CLI::App* validate = app.add_subcommand("validate", "check a grid file for duplicates");
    validate->add_option("FILE", validate_path, "grid file")->required();

    std::string transform_path;
    std::vector<std::string> ops;
    CLI::App* transform = app.add_subcommand("transform", "apply transforms to a grid file");
    transform->add_option("FILE", transform_path, "grid file")->required();
    transform
        ->add_option("--op", ops,
                     "transform spec, repeatable: relabel:p0,p1,...  swap-rows-in-band:b,i,j  "
                     "swap-bands:a,b  swap-cols-in-stack:s,i,j  swap-stacks:a,b  transpose  "
                     "permute-rows-unchecked:p0,...  permute-cols-unchecked:p0,...")
        ->required();

    std::string solve_path;
    std::string cap_text = "all";
    CLI::App* solve = app.add_subcommand("solve", "enumerate completions of a grid file");
    solve->add_option("FILE", solve_path, "grid file")->required();
    solve->add_option("--cap", cap_text, "stop after this many solutions (default: all)");

    std::string mask_path;
    std::uint64_t mask_seed = 0;
    int clues = 0;
    CLI::App* mask = app.add_subcommand("mask", "carve a uniquely solvable puzzle from a solution");
    mask->add_option("FILE", mask_path, "complete solution file")->required();
    mask->add_option("--seed", mask_seed, "removal-order seed")->required();
    mask->add_option("--clues", clues, "stop removing once this many givens remain")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*generate) {
            return run_generate(n, symbol_perm, seed_opt->count() > 0, scramble_seed, steps,
                                out_path);
        }
        if (*validate) return run_validate(validate_path);
        if (*transform) return run_transform(transform_path, ops);
        if (*solve) return run_solve(solve_path, cap_text);
        if (*mask) return run_mask(mask_path, mask_seed, clues);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
    return 0;
}
