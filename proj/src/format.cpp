#include "latinop/format.hpp"

#include <charconv>
#include <optional>

namespace latinop {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
  : ValidationError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
    line_(line),
    column_(column)
{
}

namespace {

struct Token
{
    std::string_view text;
    std::size_t line;
    std::size_t column;
};

class Lexer
{
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::optional<Token> next()
    {
        skip_space();
        if (pos_ >= text_.size())
            return std::nullopt;
        const std::size_t start = pos_;
        const Token t{{}, line_, col_};
        while (pos_ < text_.size() && !is_space(text_[pos_])) {
            ++pos_;
            ++col_;
        }
        return Token{text_.substr(start, pos_ - start), t.line, t.column};
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return col_; }

private:
    static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

    void skip_space()
    {
        while (pos_ < text_.size() && is_space(text_[pos_])) {
            if (text_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++pos_;
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

long long to_integer(const Token& t)
{
    long long v = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw ParseError(t.line, t.column, "expected an integer, found '" + std::string(t.text) + "'");
    return v;
}

// Reads one record; nullopt at end of input.
std::optional<RawOp> read_record(Lexer& lex)
{
    auto first = lex.next();
    if (!first)
        return std::nullopt;
    const long long n = to_integer(*first);
    if (n < 1 || n > kMaxOrder)
        throw ParseError(first->line, first->column,
                         "order " + std::to_string(n) + " outside [1, " + std::to_string(kMaxOrder) + "]");
    auto second = lex.next();
    if (!second)
        throw ParseError(lex.line(), lex.column(), "header needs two integers \"n d\"");
    if (second->line != first->line)
        throw ParseError(second->line, second->column, "header \"n d\" must be on one line");
    const long long d = to_integer(*second);
    if (d < 1 || d > 64)
        throw ParseError(second->line, second->column, "arity " + std::to_string(d) + " outside [1, 64]");

    const auto cells = checked_power(static_cast<std::uint64_t>(n), static_cast<int>(d));
    if (!cells || *cells > (std::uint64_t{1} << 32))
        throw ParseError(second->line, second->column, "table of " + std::to_string(n) + "^" + std::to_string(d) +
                                                           " entries is too large");
    std::vector<Symbol> table;
    table.reserve(static_cast<std::size_t>(*cells));
    for (std::uint64_t i = 0; i < *cells; ++i) {
        auto tok = lex.next();
        if (!tok)
            throw ParseError(lex.line(), lex.column(),
                             "expected " + std::to_string(*cells) + " symbols, found " + std::to_string(i));
        const long long v = to_integer(*tok);
        if (v < 0 || v >= n)
            throw ParseError(tok->line, tok->column,
                             "symbol " + std::to_string(v) + " outside [0, " + std::to_string(n) + ")");
        table.push_back(static_cast<Symbol>(v));
    }
    return RawOp(static_cast<int>(n), static_cast<int>(d), std::move(table));
}

}  // namespace

RawOp parse_lhc(std::string_view text)
{
    Lexer lex(text);
    auto op = read_record(lex);
    if (!op)
        throw ParseError(1, 1, "empty input: expected header \"n d\"");
    if (auto extra = lex.next())
        throw ParseError(extra->line, extra->column, "unexpected token '" + std::string(extra->text) +
                                                         "' after " + std::to_string(op->size()) + " symbols");
    return std::move(*op);
}

std::vector<RawOp> parse_lhcs(std::string_view text)
{
    Lexer lex(text);
    std::vector<RawOp> out;
    while (auto op = read_record(lex))
        out.push_back(std::move(*op));
    return out;
}

std::string emit_lhc(const RawOp& op)
{
    std::string s = std::to_string(op.order()) + " " + std::to_string(op.arity()) + "\n";
    const auto t = op.table();
    const auto row = static_cast<std::size_t>(op.order());
    for (std::size_t i = 0; i < t.size(); ++i) {
        s += std::to_string(t[i]);
        s += (i % row == row - 1) ? '\n' : ' ';
    }
    return s;
}

void write_lhcs_record(std::ostream& os, const RawOp& op, bool first)
{
    if (!first)
        os << '\n';
    os << emit_lhc(op);
}

std::vector<Tuple> parse_tsv(std::string_view text)
{
    std::vector<Tuple> rows;
    std::size_t line_no = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        const std::string_view line = text.substr(start, end - start);
        Lexer lex(line);
        Tuple row;
        while (auto tok = lex.next()) {
            const long long v = to_integer(Token{tok->text, line_no, tok->column});
            if (v < 0 || v > 0x7fffffff)
                throw ParseError(line_no, tok->column, "value " + std::to_string(v) + " is negative or too large");
            row.push_back(static_cast<int>(v));
        }
        if (!row.empty()) {
            if (!rows.empty() && row.size() != rows.front().size())
                throw ParseError(line_no, 1, "row has " + std::to_string(row.size()) + " entries, expected " +
                                                 std::to_string(rows.front().size()));
            rows.push_back(std::move(row));
        }
        if (end == text.size())
            break;
        start = end + 1;
        ++line_no;
    }
    return rows;
}

std::string emit_tsv(const std::vector<Tuple>& rows)
{
    std::string s;
    for (const auto& r : rows) {
        for (std::size_t k = 0; k < r.size(); ++k) {
            if (k)
                s += '\t';
            s += std::to_string(r[k]);
        }
        s += '\n';
    }
    return s;
}

}  // namespace latinop
