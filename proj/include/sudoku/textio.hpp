#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sudoku/grid.hpp"

namespace sudoku {

// Ordered display tokens for symbol indices 0..N-1. Tokens are distinct,
// non-empty, contain no whitespace, and never equal the reserved empty-cell
// token ".".
class SymbolAlphabet {
public:
    // Throws std::invalid_argument when the token list breaks the rules above.
    SymbolAlphabet(Order order, std::vector<std::string> tokens);

    // Decimal numbering "1".."N". The default for every order except 4.
    static SymbolAlphabet decimal(Order order);

    // Letters "A", "B", ... (requires N <= 26). The default for order 4,
    // covering "A".."P".
    static SymbolAlphabet letters(Order order);

    Order order() const { return order_; }
    const std::vector<std::string>& tokens() const { return tokens_; }
    const std::string& token(int symbol) const { return tokens_.at(static_cast<std::size_t>(symbol)); }

    // -1 when the token is not in the alphabet.
    int index_of(std::string_view token) const;

    bool operator==(const SymbolAlphabet& other) const {
        return order_ == other.order_ && tokens_ == other.tokens_;
    }

private:
    Order order_;
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, int> index_;
};

// Letters at order 4, decimal numbering otherwise.
SymbolAlphabet default_alphabet(Order order);

// A grid paired with the alphabet it is displayed in.
class GridDocument {
public:
    // Orders must match (std::invalid_argument otherwise).
    GridDocument(SymbolAlphabet alphabet, Grid grid);

    Order order() const { return grid_.order(); }
    const SymbolAlphabet& alphabet() const { return alphabet_; }
    const Grid& grid() const { return grid_; }

    bool operator==(const GridDocument&) const = default;

private:
    SymbolAlphabet alphabet_;
    Grid grid_;
};

struct RenderOptions {
    // Emit "#order: n" before the rows.
    bool order_header = false;
};

// Canonical text form: one line per row, tokens separated by a single space,
// "." for empty cells, LF endings, trailing newline after the last row.
// An "#alphabet: t1 ... tN" header is emitted automatically whenever the
// document's alphabet is not the order's default, so parse_grid always
// recovers the document exactly.
std::string render_grid(const GridDocument& doc, const RenderOptions& opts = {});

enum class ParseErrorKind {
    BadLineCount,            // row count is not a perfect square n*n
    BadRowWidth,             // a row's token count differs from the side
    UnknownToken,            // token not in the alphabet (and not ".")
    DuplicateAlphabetToken,  // "#alphabet:" header repeats a token
    BadHeader,               // malformed "#order:" / "#alphabet:" header
    OrderMismatch,           // "#order:" disagrees with the row count
};

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, int line, const std::string& message);

    ParseErrorKind kind() const { return kind_; }

    // 1-based line in the input, 0 when the whole document is at fault.
    int line() const { return line_; }

private:
    ParseErrorKind kind_;
    int line_;
};

// Parses the text form. Blank lines and "#" comments are skipped; the
// optional "#order: n" and "#alphabet: t1 ... tN" headers are honored. Rows
// may be separated by arbitrary runs of spaces or tabs. Without an alphabet
// header, tokens are matched against the order's default alphabet, then (for
// order 4) against decimal numbering. Throws ParseError.
GridDocument parse_grid(std::string_view text);

}  // namespace sudoku
