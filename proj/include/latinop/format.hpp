// format.hpp -- text formats.
//
//   .lhc   "n d" header, then n^d base-10 symbols, row-major with the last
//          argument fastest. Whitespace and newlines are interchangeable
//          after the header; emit_lhc writes n symbols per line.
//   .lhcs  .lhc records separated by a blank line.
//   .tsv   one tuple per line, whitespace-separated integers.

#pragma once

#include "latinop/core.hpp"

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace latinop {

/// A ValidationError with the 1-based position of the offending token.
class ParseError : public ValidationError
{
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Exactly one record; trailing tokens are an error.
RawOp parse_lhc(std::string_view text);
std::vector<RawOp> parse_lhcs(std::string_view text);

std::string emit_lhc(const RawOp& op);
void write_lhcs_record(std::ostream& os, const RawOp& op, bool first);

std::vector<Tuple> parse_tsv(std::string_view text);
std::string emit_tsv(const std::vector<Tuple>& rows);

}  // namespace latinop
