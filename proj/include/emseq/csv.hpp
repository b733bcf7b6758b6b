#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace emseq::csv {

struct Row {
  std::size_t line = 0;  // 1-based line the record starts on
  std::vector<std::string> fields;
};

/// RFC 4180 reader: comma separated, double-quoted fields with "" escapes,
/// quoted fields may span lines, LF or CRLF endings. Blank lines are skipped.
/// `first_line` offsets the reported line numbers. Throws ParseError.
std::vector<Row> parse(std::string_view text, std::size_t first_line = 1);

/// Quotes a field only when it contains a comma, quote, CR or LF.
std::string escape(std::string_view field);

/// Joins escaped fields with commas and terminates with '\n'.
std::string format_row(const std::vector<std::string>& fields);

}  // namespace emseq::csv
