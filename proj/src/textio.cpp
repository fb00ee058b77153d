#include "sudoku/textio.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <optional>

namespace sudoku {

namespace {

bool has_whitespace(const std::string& token) {
    return std::any_of(token.begin(), token.end(),
                       [](unsigned char ch) { return std::isspace(ch) != 0; });
}

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
        if (end > pos) tokens.push_back(line.substr(pos, end - pos));
        pos = end;
    }
    return tokens;
}

std::optional<int> parse_int(std::string_view text) {
    if (text.empty() || text.size() > 9) return std::nullopt;
    int value = 0;
    for (const char ch : text) {
        if (ch < '0' || ch > '9') return std::nullopt;
        value = value * 10 + (ch - '0');
    }
    return value;
}

}  // namespace

SymbolAlphabet::SymbolAlphabet(Order order, std::vector<std::string> tokens)
    : order_(order), tokens_(std::move(tokens)) {
    const auto side = static_cast<std::size_t>(order_.side());
    if (tokens_.size() != side) {
        throw std::invalid_argument("alphabet: expected " + std::to_string(side) +
                                    " tokens, got " + std::to_string(tokens_.size()));
    }
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        const std::string& token = tokens_[i];
        if (token.empty() || has_whitespace(token)) {
            throw std::invalid_argument("alphabet: tokens must be non-empty and whitespace-free");
        }
        if (token == ".") {
            throw std::invalid_argument("alphabet: \".\" is reserved for empty cells");
        }
        if (!index_.emplace(token, static_cast<int>(i)).second) {
            throw std::invalid_argument("alphabet: duplicate token \"" + token + "\"");
        }
    }
}

SymbolAlphabet SymbolAlphabet::decimal(Order order) {
    std::vector<std::string> tokens;
    tokens.reserve(static_cast<std::size_t>(order.side()));
    for (int i = 1; i <= order.side(); ++i) tokens.push_back(std::to_string(i));
    return SymbolAlphabet(order, std::move(tokens));
}

SymbolAlphabet SymbolAlphabet::letters(Order order) {
    if (order.side() > 26) {
        throw std::invalid_argument("alphabet: letters cover at most 26 symbols");
    }
    std::vector<std::string> tokens;
    tokens.reserve(static_cast<std::size_t>(order.side()));
    for (int i = 0; i < order.side(); ++i) tokens.push_back(std::string(1, static_cast<char>('A' + i)));
    return SymbolAlphabet(order, std::move(tokens));
}

int SymbolAlphabet::index_of(std::string_view token) const {
    const auto it = index_.find(std::string(token));
    return it == index_.end() ? -1 : it->second;
}

SymbolAlphabet default_alphabet(Order order) {
    return order.box_side() == 4 ? SymbolAlphabet::letters(order) : SymbolAlphabet::decimal(order);
}

GridDocument::GridDocument(SymbolAlphabet alphabet, Grid grid)
    : alphabet_(std::move(alphabet)), grid_(std::move(grid)) {
    if (alphabet_.order() != grid_.order()) {
        throw std::invalid_argument("document: alphabet and grid orders differ");
    }
}

std::string render_grid(const GridDocument& doc, const RenderOptions& opts) {
    const int side = doc.order().side();
    std::string out;
    if (opts.order_header) {
        out += "#order: " + std::to_string(doc.order().box_side()) + "\n";
    }
    if (!(doc.alphabet() == default_alphabet(doc.order()))) {
        out += "#alphabet:";
        for (const std::string& token : doc.alphabet().tokens()) {
            out += ' ';
            out += token;
        }
        out += '\n';
    }
    const std::vector<Cell>& cells = doc.grid().cells();
    for (int r = 0; r < side; ++r) {
        for (int c = 0; c < side; ++c) {
            if (c > 0) out += ' ';
            const Cell v = cells[static_cast<std::size_t>(r * side + c)];
            out += v == kEmpty ? "." : doc.alphabet().token(v);
        }
        out += '\n';
    }
    return out;
}

ParseError::ParseError(ParseErrorKind kind, int line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      kind_(kind),
      line_(line) {}

GridDocument parse_grid(std::string_view text) {
    struct RowLine {
        std::vector<std::string_view> tokens;
        int line;
    };
    std::vector<RowLine> rows;
    std::optional<int> header_order;
    std::optional<std::vector<std::string_view>> header_alphabet;
    int header_alphabet_line = 0;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, (eol == std::string_view::npos ? text.size() : eol) - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        if (line.starts_with("#order:")) {
            const auto fields = split_tokens(line.substr(7));
            const auto value = fields.size() == 1 ? parse_int(fields[0]) : std::nullopt;
            if (!value || *value < 1) {
                throw ParseError(ParseErrorKind::BadHeader, line_no, "malformed \"#order:\" header");
            }
            if (header_order) {
                throw ParseError(ParseErrorKind::BadHeader, line_no, "duplicate \"#order:\" header");
            }
            header_order = *value;
        } else if (line.starts_with("#alphabet:")) {
            if (header_alphabet) {
                throw ParseError(ParseErrorKind::BadHeader, line_no,
                                 "duplicate \"#alphabet:\" header");
            }
            header_alphabet = split_tokens(line.substr(10));
            header_alphabet_line = line_no;
        } else if (line.starts_with("#")) {
            // comment
        } else {
            auto tokens = split_tokens(line);
            if (!tokens.empty()) rows.push_back({std::move(tokens), line_no});
        }
    }

    const int side = static_cast<int>(rows.size());
    const int box = static_cast<int>(std::lround(std::sqrt(static_cast<double>(side))));
    if (side == 0 || box * box != side || box > kMaxOrder) {
        throw ParseError(ParseErrorKind::BadLineCount, 0,
                         "grid has " + std::to_string(side) +
                             " rows; expected a perfect square n*n (4, 9, 16, ...)");
    }
    const Order order(box);
    if (header_order && *header_order != box) {
        throw ParseError(ParseErrorKind::OrderMismatch, 0,
                         "\"#order: " + std::to_string(*header_order) + "\" header, but " +
                             std::to_string(side) + " rows imply order " + std::to_string(box));
    }
    for (const RowLine& row : rows) {
        if (row.tokens.size() != static_cast<std::size_t>(side)) {
            throw ParseError(ParseErrorKind::BadRowWidth, row.line,
                             "row has " + std::to_string(row.tokens.size()) + " tokens, expected " +
                                 std::to_string(side));
        }
    }

    std::optional<SymbolAlphabet> alphabet;
    if (header_alphabet) {
        if (header_alphabet->size() != static_cast<std::size_t>(side)) {
            throw ParseError(ParseErrorKind::BadHeader, header_alphabet_line,
                             "\"#alphabet:\" lists " + std::to_string(header_alphabet->size()) +
                                 " tokens, expected " + std::to_string(side));
        }
        std::vector<std::string> tokens;
        tokens.reserve(header_alphabet->size());
        for (const std::string_view token : *header_alphabet) {
            if (token == ".") {
                throw ParseError(ParseErrorKind::BadHeader, header_alphabet_line,
                                 "\".\" is reserved for empty cells");
            }
            if (std::find(tokens.begin(), tokens.end(), token) != tokens.end()) {
                throw ParseError(ParseErrorKind::DuplicateAlphabetToken, header_alphabet_line,
                                 "duplicate alphabet token \"" + std::string(token) + "\"");
            }
            tokens.emplace_back(token);
        }
        alphabet = SymbolAlphabet(order, std::move(tokens));
    } else {
        // Try the order's default, then decimal where that differs (order 4).
        std::vector<SymbolAlphabet> candidates;
        candidates.push_back(default_alphabet(order));
        if (order.box_side() == 4) candidates.push_back(SymbolAlphabet::decimal(order));
        for (const SymbolAlphabet& candidate : candidates) {
            const bool all_known = std::all_of(rows.begin(), rows.end(), [&](const RowLine& row) {
                return std::all_of(row.tokens.begin(), row.tokens.end(), [&](std::string_view t) {
                    return t == "." || candidate.index_of(t) >= 0;
                });
            });
            if (all_known) {
                alphabet = candidate;
                break;
            }
        }
        if (!alphabet) {
            for (const RowLine& row : rows) {
                for (const std::string_view token : row.tokens) {
                    if (token != "." && candidates.front().index_of(token) < 0) {
                        throw ParseError(ParseErrorKind::UnknownToken, row.line,
                                         "unknown token \"" + std::string(token) + "\"");
                    }
                }
            }
        }
    }

    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(order.cell_count()));
    for (const RowLine& row : rows) {
        for (const std::string_view token : row.tokens) {
            if (token == ".") {
                cells.push_back(kEmpty);
                continue;
            }
            const int symbol = alphabet->index_of(token);
            if (symbol < 0) {
                throw ParseError(ParseErrorKind::UnknownToken, row.line,
                                 "unknown token \"" + std::string(token) + "\"");
            }
            cells.push_back(symbol);
        }
    }
    return GridDocument(*alphabet, Grid(order, std::move(cells)));
}

}  // namespace sudoku
