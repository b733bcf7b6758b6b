#include "emseq/csv.hpp"

#include "emseq/errors.hpp"

namespace emseq::csv {

std::vector<Row> parse(std::string_view text, std::size_t first_line) {
  std::vector<Row> rows;
  Row row;
  std::string field;
  std::size_t line = first_line;
  bool in_quotes = false;
  bool field_quoted = false;
  bool row_started = false;

  auto end_field = [&] {
    row.fields.push_back(std::move(field));
    field.clear();
    field_quoted = false;
  };
  auto end_row = [&] {
    if (row_started) {
      end_field();
      // A lone empty field is a blank line.
      if (!(row.fields.size() == 1 && row.fields[0].empty())) rows.push_back(std::move(row));
    }
    row = Row{};
    row_started = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (!row_started) {
      row.line = line;
      row_started = true;
    }
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case ',':
        end_field();
        break;
      case '"':
        if (!field.empty() || field_quoted) {
          throw ParseError("unexpected quote inside a field", line, row.fields.size() + 1);
        }
        in_quotes = true;
        field_quoted = true;
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;
        throw ParseError("bare carriage return", line, row.fields.size() + 1);
      case '\n':
        end_row();
        ++line;
        break;
      default:
        if (field_quoted) {
          throw ParseError("characters after a closing quote", line, row.fields.size() + 1);
        }
        field += c;
    }
  }
  if (in_quotes) {
    throw ParseError("unterminated quoted field", row.line, row.fields.size() + 1);
  }
  end_row();
  return rows;
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string format_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += escape(fields[i]);
  }
  out += '\n';
  return out;
}

}  // namespace emseq::csv
