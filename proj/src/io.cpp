#include "emseq/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "emseq/csv.hpp"
#include "emseq/errors.hpp"
#include "emseq/numfmt.hpp"

namespace emseq {

using nlohmann::json;

namespace {

// Cohort columns in file order, with the measure each numeric one carries.
struct CohortColumn {
  std::string_view name;
  std::optional<Measure> measure;
};

constexpr std::array<CohortColumn, 7> kCohortColumns = {{
    {"author_id", std::nullopt},
    {"author", std::nullopt},
    {"h_sequence", Measure::h_sequence},
    {"em_sequence", Measure::em_sequence},
    {"em_prime_sequence", Measure::em_prime_sequence},
    {"excess_citations", Measure::excess_total},
    {"tail_citations", Measure::tail_total},
}};

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

// Parses JSON, rejecting duplicate object keys anywhere in the document.
json parse_json(const std::string& text) {
  std::vector<std::set<std::string>> keys;
  const json::parser_callback_t cb = [&keys](int, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start:
        keys.emplace_back();
        break;
      case json::parse_event_t::object_end:
        keys.pop_back();
        break;
      case json::parse_event_t::key:
        if (!keys.back().insert(parsed.get<std::string>()).second) {
          throw InvalidInput("duplicate key \"" + parsed.get<std::string>() + "\"");
        }
        break;
      default:
        break;
    }
    return true;
  };
  try {
    return json::parse(text, cb);
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const auto [line, column] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON", line, column);
  }
}

bool is_four_digit_year(std::string_view s) {
  return s.size() == 4 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
         s[0] != '0';
}

template <typename Int>
std::optional<Int> parse_int(std::string_view s) {
  Int value{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::optional<double> parse_double(std::string_view s) {
  double value{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void check_schema_version(const json& doc) {
  const auto it = doc.find("schema_version");
  if (it == doc.end()) throw InvalidInput("missing \"schema_version\"");
  if (!it->is_number_integer() || it->get<long long>() != kSchemaVersion) {
    throw InvalidInput("unsupported schema_version " + it->dump() + " (expected " +
                       std::to_string(kSchemaVersion) + ")");
  }
}

// Moves every member not listed in `known` into an object; strict mode throws.
json collect_unknown(const json& object, std::initializer_list<std::string_view> known,
                     Strictness strictness, const std::string& where) {
  json extra = json::object();
  for (const auto& [key, value] : object.items()) {
    if (std::find(known.begin(), known.end(), key) != known.end()) continue;
    if (strictness == Strictness::strict) {
      throw InvalidInput("unknown field \"" + key + "\" in " + where);
    }
    extra[key] = value;
  }
  return extra;
}

int json_year(const json& value, const std::string& where) {
  if (!value.is_number_integer()) throw InvalidInput(where + ": expected an integer year");
  const auto year = value.get<long long>();
  if (year < 1000 || year > 9999) {
    throw InvalidInput(where + ": " + std::to_string(year) + " is not a 4-digit year");
  }
  return static_cast<int>(year);
}

AuthorMatrixDocument matrix_from_json(const std::string& text, Strictness strictness) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw InvalidInput("author matrix document must be a JSON object");
  check_schema_version(doc);

  auto extra = collect_unknown(doc, {"schema_version", "author", "author_id", "publications"},
                              strictness, "author matrix document");

  std::string author;
  if (const auto it = doc.find("author"); it != doc.end()) {
    if (!it->is_string()) throw InvalidInput("\"author\" must be a string");
    author = it->get<std::string>();
  }
  std::optional<int> author_id;
  if (const auto it = doc.find("author_id"); it != doc.end()) {
    if (!it->is_number_integer()) throw InvalidInput("\"author_id\" must be an integer");
    author_id = it->get<int>();
  }

  const auto pubs_it = doc.find("publications");
  if (pubs_it == doc.end() || !pubs_it->is_array()) {
    throw InvalidInput("\"publications\" must be an array");
  }
  std::vector<Publication> publications;
  std::vector<json> pub_extra;
  bool any_pub_extra = false;
  for (std::size_t i = 0; i < pubs_it->size(); ++i) {
    const auto& p = (*pubs_it)[i];
    const std::string where = "publication " + std::to_string(i + 1);
    if (!p.is_object()) throw InvalidInput(where + " must be an object");
    auto unknown = collect_unknown(p, {"pub_year", "citations"}, strictness, where);
    any_pub_extra = any_pub_extra || !unknown.empty();
    pub_extra.push_back(std::move(unknown));

    Publication pub;
    const auto year_it = p.find("pub_year");
    if (year_it == p.end()) throw InvalidInput(where + ": missing \"pub_year\"");
    pub.pub_year = json_year(*year_it, where + " pub_year");

    const auto cites_it = p.find("citations");
    if (cites_it == p.end() || !cites_it->is_object()) {
      throw InvalidInput(where + ": \"citations\" must be an object");
    }
    for (const auto& [key, value] : cites_it->items()) {
      if (!is_four_digit_year(key)) {
        throw InvalidInput(where + ": citing year \"" + key + "\" is not a 4-digit year");
      }
      if (!value.is_number_integer()) {
        throw InvalidInput(where + ", " + key + ": citation count must be an integer");
      }
      const auto count = value.get<long long>();
      if (count < 0) {
        throw InvalidInput(where + ", " + key + ": negative citation count " + std::to_string(count));
      }
      pub.citations_by_year[*parse_int<int>(key)] = count;
    }
    publications.push_back(std::move(pub));
  }
  if (!any_pub_extra) pub_extra.clear();
  return AuthorMatrixDocument{CitationMatrix(std::move(author), author_id, std::move(publications)),
                              std::move(extra), std::move(pub_extra)};
}

AuthorMatrixDocument matrix_from_csv(const std::string& text, Strictness strictness) {
  // Leading "# key: value" lines carry the fields the table cannot.
  std::string author;
  std::optional<int> author_id;
  json extra = json::object();
  std::size_t pos = 0, line = 1;
  while (pos < text.size() && text[pos] == '#') {
    auto eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    const auto body = trim(std::string_view(text).substr(pos + 1, eol - pos - 1));
    const auto colon = body.find(':');
    if (colon == std::string_view::npos) throw ParseError("metadata line needs \"key: value\"", line, 1);
    const std::string key(trim(body.substr(0, colon)));
    const std::string value(trim(body.substr(colon + 1)));
    if (key == "author") {
      author = value;
    } else if (key == "author_id") {
      const auto id = parse_int<int>(value);
      if (!id) throw ParseError("author_id must be an integer", line, 1);
      author_id = *id;
    } else if (strictness == Strictness::strict) {
      throw InvalidInput("unknown metadata field \"" + key + "\" (line " + std::to_string(line) + ")");
    } else {
      extra[key] = value;
    }
    pos = eol == text.size() ? eol : eol + 1;
    ++line;
  }

  const auto rows = csv::parse(std::string_view(text).substr(pos), line);
  if (rows.empty()) throw InvalidInput("author matrix CSV has no header row");
  const auto& header = rows.front();
  if (header.fields.empty() || trim(header.fields[0]) != "pub_year") {
    throw ParseError("first header column must be \"pub_year\"", header.line, 1);
  }
  std::vector<int> years;
  std::set<int> seen;
  for (std::size_t c = 1; c < header.fields.size(); ++c) {
    const auto field = trim(header.fields[c]);
    if (!is_four_digit_year(field)) {
      throw ParseError("citing year \"" + std::string(field) + "\" is not a 4-digit year",
                       header.line, c + 1);
    }
    const int year = *parse_int<int>(field);
    if (!seen.insert(year).second) {
      throw InvalidInput("duplicate citing-year column " + std::to_string(year) + " (line " +
                         std::to_string(header.line) + ", column " + std::to_string(c + 1) + ")");
    }
    years.push_back(year);
  }

  std::vector<Publication> publications;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.fields.size() != header.fields.size()) {
      throw ParseError("expected " + std::to_string(header.fields.size()) + " fields, found " +
                           std::to_string(row.fields.size()),
                       row.line, std::min(row.fields.size(), header.fields.size()) + 1);
    }
    Publication pub;
    const auto pub_year = parse_int<int>(trim(row.fields[0]));
    if (!pub_year || *pub_year < 1000 || *pub_year > 9999) {
      throw ParseError("pub_year must be a 4-digit year", row.line, 1);
    }
    pub.pub_year = *pub_year;
    for (std::size_t c = 1; c < row.fields.size(); ++c) {
      const auto count = parse_int<long long>(trim(row.fields[c]));
      if (!count) throw ParseError("expected an integer citation count", row.line, c + 1);
      if (*count < 0) {
        throw InvalidInput("negative citation count " + std::to_string(*count) + " (line " +
                           std::to_string(row.line) + ", column " + std::to_string(c + 1) + ")");
      }
      pub.citations_by_year[years[c - 1]] = *count;
    }
    publications.push_back(std::move(pub));
  }
  return AuthorMatrixDocument{CitationMatrix(std::move(author), author_id, std::move(publications)),
                              std::move(extra), {}};
}

double checked_measure(double value, std::string_view column, const std::string& where) {
  if (!std::isfinite(value) || value < 0.0) {
    throw InvalidInput(where + ": " + std::string(column) + " must be finite and non-negative");
  }
  return value;
}

void check_unique_ids(const std::vector<CohortRecord>& records) {
  if (records.empty()) throw InvalidInput("cohort has no records");
  std::set<int> ids;
  for (const auto& r : records) {
    if (!ids.insert(r.author_id).second) {
      throw InvalidInput("duplicate author_id " + std::to_string(r.author_id));
    }
  }
}

CohortDocument cohort_from_json(const std::string& text, Strictness strictness) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw InvalidInput("cohort document must be a JSON object");
  check_schema_version(doc);
  CohortDocument out;
  out.extra = collect_unknown(doc, {"schema_version", "authors"}, strictness, "cohort document");
  const auto authors = doc.find("authors");
  if (authors == doc.end() || !authors->is_array()) throw InvalidInput("\"authors\" must be an array");

  bool any_extra = false;
  for (std::size_t i = 0; i < authors->size(); ++i) {
    const auto& a = (*authors)[i];
    const std::string where = "cohort record " + std::to_string(i + 1);
    if (!a.is_object()) throw InvalidInput(where + " must be an object");
    auto extra = collect_unknown(a,
                                 {"author_id", "author", "h_sequence", "em_sequence",
                                  "em_prime_sequence", "excess_citations", "tail_citations"},
                                 strictness, where);
    any_extra = any_extra || !extra.empty();
    out.record_extra.push_back(std::move(extra));

    CohortRecord r;
    for (const auto& col : kCohortColumns) {
      const auto it = a.find(std::string(col.name));
      if (it == a.end()) throw InvalidInput(where + ": missing column \"" + std::string(col.name) + "\"");
      if (!col.measure) {
        if (col.name == "author_id") {
          if (!it->is_number_integer()) throw InvalidInput(where + ": author_id must be an integer");
          r.author_id = it->get<int>();
        } else {
          if (!it->is_string()) throw InvalidInput(where + ": author must be a string");
          r.author = it->get<std::string>();
        }
        continue;
      }
      if (!it->is_number()) throw InvalidInput(where + ": " + std::string(col.name) + " must be a number");
      r.measures[*col.measure] = checked_measure(it->get<double>(), col.name, where);
    }
    out.records.push_back(std::move(r));
  }
  if (!any_extra) out.record_extra.clear();
  check_unique_ids(out.records);
  return out;
}

CohortDocument cohort_from_csv(const std::string& text, Strictness strictness) {
  const auto rows = csv::parse(text);
  if (rows.empty()) throw InvalidInput("cohort CSV has no header row");
  const auto& header = rows.front();

  std::vector<std::optional<std::size_t>> column_of(kCohortColumns.size());
  std::vector<std::size_t> unknown;
  std::set<std::string> seen;
  for (std::size_t c = 0; c < header.fields.size(); ++c) {
    const std::string name(trim(header.fields[c]));
    if (!seen.insert(name).second) {
      throw ParseError("duplicate column \"" + name + "\"", header.line, c + 1);
    }
    const auto it = std::find_if(kCohortColumns.begin(), kCohortColumns.end(),
                                 [&](const CohortColumn& k) { return k.name == name; });
    if (it != kCohortColumns.end()) {
      column_of[static_cast<std::size_t>(it - kCohortColumns.begin())] = c;
    } else if (strictness == Strictness::strict) {
      throw ParseError("unknown column \"" + name + "\"", header.line, c + 1);
    } else {
      unknown.push_back(c);
    }
  }
  for (std::size_t k = 0; k < kCohortColumns.size(); ++k) {
    if (!column_of[k]) {
      throw InvalidInput("cohort CSV is missing column \"" + std::string(kCohortColumns[k].name) + "\"");
    }
  }

  CohortDocument out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.fields.size() != header.fields.size()) {
      throw ParseError("expected " + std::to_string(header.fields.size()) + " fields, found " +
                           std::to_string(row.fields.size()),
                       row.line, std::min(row.fields.size(), header.fields.size()) + 1);
    }
    const std::string where = "line " + std::to_string(row.line);
    CohortRecord rec;
    for (std::size_t k = 0; k < kCohortColumns.size(); ++k) {
      const auto c = *column_of[k];
      const auto field = trim(row.fields[c]);
      const auto& col = kCohortColumns[k];
      if (col.name == "author_id") {
        const auto id = parse_int<int>(field);
        if (!id) throw ParseError("author_id must be an integer", row.line, c + 1);
        rec.author_id = *id;
      } else if (col.name == "author") {
        rec.author = std::string(field);
      } else {
        const auto value = parse_double(field);
        if (!value) throw ParseError(std::string(col.name) + " must be a number", row.line, c + 1);
        rec.measures[*col.measure] = checked_measure(*value, col.name, where);
      }
    }
    if (!unknown.empty()) {
      json extra = json::object();
      for (const auto c : unknown) extra[std::string(trim(header.fields[c]))] = row.fields[c];
      out.record_extra.push_back(std::move(extra));
    }
    out.records.push_back(std::move(rec));
  }
  check_unique_ids(out.records);
  return out;
}

// Integral values print without a fractional part so counts stay counts.
json measure_json(double v) {
  if (v == std::floor(v) && std::fabs(v) < 9.0e15) return static_cast<long long>(v);
  return v;
}

std::string measure_text(double v) {
  if (v == std::floor(v) && std::fabs(v) < 9.0e15) return std::to_string(static_cast<long long>(v));
  return format_shortest(v);
}

std::string extra_text(const json& value) {
  return value.is_string() ? value.get<std::string>() : value.dump();
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) noexcept {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  return std::nullopt;
}

Format format_for_path(const std::filesystem::path& path) noexcept {
  return path.extension() == ".csv" ? Format::csv : Format::json;
}

bool same_records(const CohortDocument& a, const CohortDocument& b) {
  if (a.records.size() != b.records.size() || a.extra != b.extra || a.record_extra != b.record_extra) {
    return false;
  }
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    const auto& x = a.records[i];
    const auto& y = b.records[i];
    if (x.author_id != y.author_id || x.author != y.author || x.measures != y.measures) return false;
  }
  return true;
}

std::string read_all(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed to read input stream");
  return buf.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_all(in);
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

AuthorMatrixDocument load_author_matrix(std::istream& in, Format format, Strictness strictness) {
  const auto text = read_all(in);
  return format == Format::json ? matrix_from_json(text, strictness) : matrix_from_csv(text, strictness);
}

AuthorMatrixDocument load_author_matrix(const std::filesystem::path& path,
                                        std::optional<Format> format, Strictness strictness) {
  const auto text = read_file(path);
  return format.value_or(format_for_path(path)) == Format::json ? matrix_from_json(text, strictness)
                                                                : matrix_from_csv(text, strictness);
}

std::string write_author_matrix(const AuthorMatrixDocument& doc, Format format) {
  const auto& m = doc.matrix;
  const auto& span = m.span();
  if (format == Format::json) {
    json out = doc.extra;
    out["schema_version"] = kSchemaVersion;
    if (!m.author().empty()) out["author"] = m.author();
    if (m.author_id()) out["author_id"] = *m.author_id();
    json pubs = json::array();
    for (std::size_t i = 0; i < m.publication_count(); ++i) {
      json p = i < doc.publication_extra.size() ? doc.publication_extra[i] : json::object();
      p["pub_year"] = m.publications()[i].pub_year;
      json cites = json::object();
      for (const auto& [year, count] : m.publications()[i].citations_by_year) {
        cites[std::to_string(year)] = count;
      }
      p["citations"] = std::move(cites);
      pubs.push_back(std::move(p));
    }
    out["publications"] = std::move(pubs);
    return out.dump(2) + "\n";
  }

  std::string out;
  if (!m.author().empty()) out += "# author: " + m.author() + "\n";
  if (m.author_id()) out += "# author_id: " + std::to_string(*m.author_id()) + "\n";
  for (const auto& [key, value] : doc.extra.items()) out += "# " + key + ": " + extra_text(value) + "\n";
  std::vector<std::string> header{"pub_year"};
  for (int year = span.first; year <= span.last; ++year) header.push_back(std::to_string(year));
  out += csv::format_row(header);
  for (std::size_t i = 0; i < m.publication_count(); ++i) {
    std::vector<std::string> row{std::to_string(m.publications()[i].pub_year)};
    for (int year = span.first; year <= span.last; ++year) {
      row.push_back(std::to_string(m.citations(i, year)));
    }
    out += csv::format_row(row);
  }
  return out;
}

CohortDocument load_cohort(std::istream& in, Format format, Strictness strictness) {
  const auto text = read_all(in);
  return format == Format::json ? cohort_from_json(text, strictness) : cohort_from_csv(text, strictness);
}

CohortDocument load_cohort(const std::filesystem::path& path, std::optional<Format> format,
                           Strictness strictness) {
  const auto text = read_file(path);
  return format.value_or(format_for_path(path)) == Format::json ? cohort_from_json(text, strictness)
                                                                : cohort_from_csv(text, strictness);
}

std::string write_cohort(const CohortDocument& doc, Format format) {
  if (format == Format::json) {
    json out = doc.extra;
    out["schema_version"] = kSchemaVersion;
    json authors = json::array();
    for (std::size_t i = 0; i < doc.records.size(); ++i) {
      const auto& r = doc.records[i];
      json a = i < doc.record_extra.size() ? doc.record_extra[i] : json::object();
      a["author_id"] = r.author_id;
      a["author"] = r.author;
      for (const auto& col : kCohortColumns) {
        if (col.measure) a[std::string(col.name)] = measure_json(r.measure(*col.measure));
      }
      authors.push_back(std::move(a));
    }
    out["authors"] = std::move(authors);
    return out.dump(2) + "\n";
  }

  // Extra columns come from the first record's extras (CSV extras share one header).
  std::vector<std::string> extra_columns;
  if (!doc.record_extra.empty()) {
    for (const auto& [key, value] : doc.record_extra.front().items()) extra_columns.push_back(key);
  }
  std::vector<std::string> header;
  for (const auto& col : kCohortColumns) header.emplace_back(col.name);
  header.insert(header.end(), extra_columns.begin(), extra_columns.end());
  std::string out = csv::format_row(header);
  for (std::size_t i = 0; i < doc.records.size(); ++i) {
    const auto& r = doc.records[i];
    std::vector<std::string> row{std::to_string(r.author_id), r.author};
    for (const auto& col : kCohortColumns) {
      if (col.measure) row.push_back(measure_text(r.measure(*col.measure)));
    }
    for (const auto& key : extra_columns) {
      const auto& extra = i < doc.record_extra.size() ? doc.record_extra[i] : json::object();
      row.push_back(extra.contains(key) ? extra_text(extra.at(key)) : "");
    }
    out += csv::format_row(row);
  }
  return out;
}

}  // namespace emseq
