#pragma once

// Plain-text matrix format: one row per line, whitespace-separated entries,
// '#' starts a comment that runs to end of line, blank lines are ignored.
// Entries are integers, fractions p/q or finite decimals, all parsed exactly.

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gjx/error.hpp"
#include "gjx/matrix.hpp"
#include "gjx/rational.hpp"

namespace gjx {

class ParseError : public Error {
 public:
  enum class Kind { empty, ragged_rows, bad_token, zero_denominator };

  ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& what)
      : Error(what), kind_(kind), line_(line), column_(column) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

inline Matrix parse_matrix(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::size_t first_row_line = 0;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }

    std::vector<Rational> row;
    std::size_t pos = 0;
    auto is_space = [](char c) {
      return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
    };
    while (pos < line.size()) {
      while (pos < line.size() && is_space(line[pos])) ++pos;
      if (pos == line.size()) break;
      std::size_t tok_end = pos;
      while (tok_end < line.size() && !is_space(line[tok_end])) ++tok_end;
      std::string_view token = line.substr(pos, tok_end - pos);
      const std::string where =
          "line " + std::to_string(line_no) + ", column " + std::to_string(pos + 1);
      try {
        row.push_back(Rational::parse(token));
      } catch (const ZeroDenominator&) {
        throw ParseError(ParseError::Kind::zero_denominator, line_no, pos + 1,
                         "zero denominator in '" + std::string(token) + "' at " + where);
      } catch (const BadRational&) {
        throw ParseError(ParseError::Kind::bad_token, line_no, pos + 1,
                         "bad token '" + std::string(token) + "' at " + where);
      }
      pos = tok_end;
    }

    if (!row.empty()) {
      if (rows.empty()) {
        first_row_line = line_no;
      } else if (row.size() != rows.front().size()) {
        throw ParseError(ParseError::Kind::ragged_rows, line_no, 1,
                         "ragged rows: line " + std::to_string(line_no) + " has " +
                             std::to_string(row.size()) + " entries, line " +
                             std::to_string(first_row_line) + " has " +
                             std::to_string(rows.front().size()));
      }
      rows.push_back(std::move(row));
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  if (rows.empty()) {
    throw ParseError(ParseError::Kind::empty, 0, 0, "no matrix rows in input");
  }
  return Matrix::from_rows(rows);
}

/// Space-separated canonical rationals, one row per line.
inline std::string render_matrix(const Matrix& m) {
  std::string out;
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    for (std::size_t j = 1; j <= m.cols(); ++j) {
      if (j > 1) out += ' ';
      out += m(i, j).str();
    }
    out += '\n';
  }
  return out;
}

/// Right-aligned columns with a leading indent, for human-readable output.
inline std::string render_aligned(const Matrix& m, std::string_view indent = "  ") {
  std::vector<std::size_t> width(m.cols() + 1, 0);
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    for (std::size_t j = 1; j <= m.cols(); ++j) {
      width[j] = std::max(width[j], m(i, j).str().size());
    }
  }
  std::string out;
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    out += indent;
    for (std::size_t j = 1; j <= m.cols(); ++j) {
      std::string cell = m(i, j).str();
      if (j > 1) out += "  ";
      out.append(width[j] - cell.size(), ' ');
      out += cell;
    }
    out += '\n';
  }
  return out;
}

}  // namespace gjx
