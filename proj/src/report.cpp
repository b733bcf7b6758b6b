#include "emseq/report.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "emseq/csv.hpp"
#include "emseq/numfmt.hpp"

namespace emseq {

using nlohmann::json;

namespace {

std::string measure_label(Measure m) {
  switch (m) {
    case Measure::h_sequence:
      return "h-index sequence";
    case Measure::em_sequence:
      return "EM-index sequence";
    case Measure::em_prime_sequence:
      return "EM'-index sequence";
    case Measure::excess_total:
      return "Excess citations";
    case Measure::tail_total:
      return "Tail citations";
  }
  return "";
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string join_counts(const std::vector<Count>& values, std::string_view sep) {
  std::vector<std::string> parts;
  for (const auto v : values) parts.push_back(std::to_string(v));
  return join(parts, sep);
}

std::string markdown_row(const std::vector<std::string>& cells) {
  return "| " + join(cells, " | ") + " |\n";
}

std::string markdown_rule(std::size_t columns) {
  std::string out = "|";
  for (std::size_t i = 0; i < columns; ++i) out += "---|";
  return out + "\n";
}

std::string tsv_row(const std::vector<std::string>& cells) { return join(cells, "\t") + "\n"; }

// Left-aligned text table with two spaces between columns.
std::string text_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (row.size() > width.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out += line + "\n";
  }
  return out;
}

// Integral doubles (h_sequence and citation totals in a cohort) print as
// integers in every format.
bool integral(double v) { return v == std::floor(v) && std::fabs(v) < 9.0e15; }

std::string human_number(double v, int precision) {
  return integral(v) ? std::to_string(static_cast<long long>(v)) : format_fixed(v, precision);
}

std::string machine_number(double v) {
  return integral(v) ? std::to_string(static_cast<long long>(v)) : format_shortest(v);
}

bool wants(SequenceSelection selection, SequenceSelection column) {
  return selection == SequenceSelection::all || selection == column;
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view name) noexcept {
  if (name == "text") return ReportFormat::text;
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "markdown") return ReportFormat::markdown;
  if (name == "plotdata") return ReportFormat::plotdata;
  return std::nullopt;
}

std::optional<SequenceSelection> parse_sequence_selection(std::string_view name) noexcept {
  if (name == "h") return SequenceSelection::h;
  if (name == "em") return SequenceSelection::em;
  if (name == "emprime") return SequenceSelection::em_prime;
  if (name == "all") return SequenceSelection::all;
  return std::nullopt;
}

IndexReport compute_index_report(const CitationVector& v) {
  IndexReport r;
  r.input = v;
  r.h = h_index(v);
  r.em = em_elements(v);
  r.em_prime = em_prime_elements(v);
  r.decomposition = core_excess_tail(v);
  return r;
}

std::string write_report(const IndexReport& r, ReportFormat format, const ReportOptions& options) {
  const auto p = options.precision;
  const auto& d = r.decomposition;
  switch (format) {
    case ReportFormat::json: {
      json out = {
          {"counts", std::vector<Count>(r.input.counts().begin(), r.input.counts().end())},
          {"h_index", r.h},
          {"em_elements", r.em.elements},
          {"em_index", r.em.value()},
          {"em_prime_elements", r.em_prime.elements},
          {"em_prime_index", r.em_prime.value()},
          {"core_citations", d.core_citations},
          {"excess_citations", d.excess_citations},
          {"tail_citations", d.tail_citations},
      };
      if (r.year_based_em_index) out["year_based_em_index"] = *r.year_based_em_index;
      return out.dump(2) + "\n";
    }
    case ReportFormat::csv: {
      std::vector<std::string> header{"h_index",          "em_elements",    "em_index",
                                      "em_prime_elements", "em_prime_index", "core_citations",
                                      "excess_citations",  "tail_citations"};
      std::vector<std::string> row{std::to_string(r.h),
                                   join_counts(r.em.elements, " "),
                                   format_shortest(r.em.value()),
                                   join_counts(r.em_prime.elements, " "),
                                   format_shortest(r.em_prime.value()),
                                   std::to_string(d.core_citations),
                                   std::to_string(d.excess_citations),
                                   std::to_string(d.tail_citations)};
      if (r.year_based_em_index) {
        header.emplace_back("year_based_em_index");
        row.push_back(format_shortest(*r.year_based_em_index));
      }
      return csv::format_row(header) + csv::format_row(row);
    }
    case ReportFormat::plotdata: {
      std::string out = "# level\tem_element\tem_prime_element\n";
      const auto levels = std::max(r.em.elements.size(), r.em_prime.elements.size());
      for (std::size_t i = 0; i < levels; ++i) {
        out += tsv_row({std::to_string(i + 1),
                        i < r.em.elements.size() ? std::to_string(r.em.elements[i]) : "NaN",
                        i < r.em_prime.elements.size() ? std::to_string(r.em_prime.elements[i]) : "NaN"});
      }
      return out;
    }
    case ReportFormat::text:
    case ReportFormat::markdown: {
      auto elements = [](const IndexElements& e) {
        return e.elements.empty() ? std::string("(none)") : join_counts(e.elements, ",");
      };
      std::vector<std::vector<std::string>> rows = {
          {"h-index", std::to_string(r.h)},
          {"EM elements", elements(r.em)},
          {"EM-index", format_fixed(r.em.value(), p)},
          {"EM' elements", elements(r.em_prime)},
          {"EM'-index", format_fixed(r.em_prime.value(), p)},
          {"Core citations", std::to_string(d.core_citations)},
          {"Excess citations", std::to_string(d.excess_citations)},
          {"Tail citations", std::to_string(d.tail_citations)},
      };
      if (r.year_based_em_index) {
        rows.push_back({"Year-based EM-index", format_fixed(*r.year_based_em_index, p)});
      }
      if (format == ReportFormat::text) {
        for (auto& row : rows) row[0] += ":";
        return text_table(rows);
      }
      std::string out = markdown_row({"Quantity", "Value"}) + markdown_rule(2);
      for (const auto& row : rows) out += markdown_row(row);
      return out;
    }
  }
  return {};
}

std::string write_report(const CitationMatrix& matrix, const SequenceProfile& profile,
                         ReportFormat format, const ReportOptions& options,
                         SequenceSelection selection) {
  const auto p = options.precision;
  const bool show_h = wants(selection, SequenceSelection::h);
  const bool show_em = wants(selection, SequenceSelection::em);
  const bool show_em_prime = wants(selection, SequenceSelection::em_prime);
  const bool show_totals = selection == SequenceSelection::all;

  switch (format) {
    case ReportFormat::json: {
      json out = json::object();
      out["schema_version"] = 1;
      out["author"] = profile.author;
      if (profile.author_id) out["author_id"] = *profile.author_id;
      json years = json::array();
      for (const auto& y : profile.per_year) {
        json item = {{"year", y.year}};
        if (show_h) item["h"] = y.h;
        if (show_em) {
          item["em_elements"] = y.em.elements;
          item["em"] = y.em_value();
        }
        if (show_em_prime) {
          item["em_prime_elements"] = y.em_prime.elements;
          item["em_prime"] = y.em_prime_value();
        }
        if (show_totals) {
          item["core_citations"] = y.decomposition.core_citations;
          item["excess_citations"] = y.decomposition.excess_citations;
          item["tail_citations"] = y.decomposition.tail_citations;
        }
        years.push_back(std::move(item));
      }
      out["per_year"] = std::move(years);
      if (show_h) out["h_sequence"] = profile.h_sequence_value;
      if (show_em) out["em_sequence"] = profile.em_sequence_value;
      if (show_em_prime) out["em_prime_sequence"] = profile.em_prime_sequence_value;
      if (show_totals) {
        out["excess_total"] = profile.excess_total;
        out["tail_total"] = profile.tail_total;
        out["year_based_em_index"] = profile.year_based_em_index;
      }
      return out.dump(2) + "\n";
    }

    case ReportFormat::csv:
    case ReportFormat::plotdata: {
      std::vector<std::string> header{"year"};
      if (show_h) header.emplace_back("h");
      if (show_em) header.emplace_back("em");
      if (show_em_prime) header.emplace_back("em_prime");
      if (show_totals) {
        header.insert(header.end(), {"core_citations", "excess_citations", "tail_citations"});
      }
      auto row_for = [&](const YearProfile& y) {
        std::vector<std::string> row{std::to_string(y.year)};
        if (show_h) row.push_back(std::to_string(y.h));
        if (show_em) row.push_back(format_shortest(y.em_value()));
        if (show_em_prime) row.push_back(format_shortest(y.em_prime_value()));
        if (show_totals) {
          row.push_back(std::to_string(y.decomposition.core_citations));
          row.push_back(std::to_string(y.decomposition.excess_citations));
          row.push_back(std::to_string(y.decomposition.tail_citations));
        }
        return row;
      };
      if (format == ReportFormat::plotdata) {
        std::string out = "# " + tsv_row(header);
        for (const auto& y : profile.per_year) out += tsv_row(row_for(y));
        return out;
      }
      std::string out = csv::format_row(header);
      for (const auto& y : profile.per_year) out += csv::format_row(row_for(y));
      std::vector<std::string> total{"total"};
      if (show_h) total.push_back(std::to_string(profile.h_sequence_value));
      if (show_em) total.push_back(format_shortest(profile.em_sequence_value));
      if (show_em_prime) total.push_back(format_shortest(profile.em_prime_sequence_value));
      if (show_totals) {
        Count core = 0;
        for (const auto& y : profile.per_year) core += y.decomposition.core_citations;
        total.push_back(std::to_string(core));
        total.push_back(std::to_string(profile.excess_total));
        total.push_back(std::to_string(profile.tail_total));
      }
      return out + csv::format_row(total);
    }

    case ReportFormat::markdown: {
      std::vector<std::string> header{"Publication Year"};
      for (const auto& y : profile.per_year) header.push_back(std::to_string(y.year));
      std::string out;
      if (!profile.author.empty()) out += "**" + profile.author + "**\n\n";
      out += markdown_row(header) + markdown_rule(header.size());
      for (std::size_t i = 0; i < matrix.publication_count(); ++i) {
        std::vector<std::string> row{std::to_string(matrix.publications()[i].pub_year)};
        for (const auto& y : profile.per_year) row.push_back(std::to_string(matrix.citations(i, y.year)));
        out += markdown_row(row);
      }
      auto index_row = [&](std::string label, auto value_of) {
        std::vector<std::string> row{std::move(label)};
        for (const auto& y : profile.per_year) row.push_back(value_of(y));
        out += markdown_row(row);
      };
      if (show_h) index_row("h-index", [](const YearProfile& y) { return std::to_string(y.h); });
      if (show_em) {
        index_row("EM-index", [p](const YearProfile& y) { return format_fixed(y.em_value(), p); });
      }
      if (show_em_prime) {
        index_row("EM'-index", [p](const YearProfile& y) { return format_fixed(y.em_prime_value(), p); });
      }
      if (show_totals) {
        index_row("Excess citations", [](const YearProfile& y) {
          return std::to_string(y.decomposition.excess_citations);
        });
        index_row("Tail citations", [](const YearProfile& y) {
          return std::to_string(y.decomposition.tail_citations);
        });
      }
      out += "\n" + markdown_row({"Measure", "Value"}) + markdown_rule(2);
      if (show_h) out += markdown_row({"h-index sequence", std::to_string(profile.h_sequence_value)});
      if (show_em) out += markdown_row({"EM-index sequence", format_fixed(profile.em_sequence_value, p)});
      if (show_em_prime) {
        out += markdown_row({"EM'-index sequence", format_fixed(profile.em_prime_sequence_value, p)});
      }
      if (show_totals) {
        out += markdown_row({"Excess citations", std::to_string(profile.excess_total)});
        out += markdown_row({"Tail citations", std::to_string(profile.tail_total)});
        out += markdown_row({"Year-based EM-index", format_fixed(profile.year_based_em_index, p)});
      }
      return out;
    }

    case ReportFormat::text: {
      std::string out;
      if (!profile.author.empty()) out += "author: " + profile.author + "\n";
      std::vector<std::vector<std::string>> rows;
      std::vector<std::string> header{"year"};
      if (show_h) header.emplace_back("h");
      if (show_em) header.emplace_back("EM");
      if (show_em_prime) header.emplace_back("EM'");
      if (show_totals) header.insert(header.end(), {"excess", "tail"});
      rows.push_back(header);
      for (const auto& y : profile.per_year) {
        std::vector<std::string> row{std::to_string(y.year)};
        if (show_h) row.push_back(std::to_string(y.h));
        if (show_em) row.push_back(format_fixed(y.em_value(), p));
        if (show_em_prime) row.push_back(format_fixed(y.em_prime_value(), p));
        if (show_totals) {
          row.push_back(std::to_string(y.decomposition.excess_citations));
          row.push_back(std::to_string(y.decomposition.tail_citations));
        }
        rows.push_back(std::move(row));
      }
      out += text_table(rows) + "\n";
      std::vector<std::vector<std::string>> summary;
      if (show_h) summary.push_back({"h-index sequence:", std::to_string(profile.h_sequence_value)});
      if (show_em) summary.push_back({"EM-index sequence:", format_fixed(profile.em_sequence_value, p)});
      if (show_em_prime) {
        summary.push_back({"EM'-index sequence:", format_fixed(profile.em_prime_sequence_value, p)});
      }
      if (show_totals) {
        summary.push_back({"excess citations:", std::to_string(profile.excess_total)});
        summary.push_back({"tail citations:", std::to_string(profile.tail_total)});
        summary.push_back({"year-based EM-index:", format_fixed(profile.year_based_em_index, p)});
      }
      return out + text_table(summary);
    }
  }
  return {};
}

std::string write_report(const RankingReport& report, ReportFormat format, const ReportOptions& options) {
  const auto name = std::string(measure_name(report.measure));
  const auto& records = report.records;
  switch (format) {
    case ReportFormat::json: {
      json ranking = json::array();
      for (const auto& r : records) {
        const double value = r.measure(report.measure);
        ranking.push_back({{"author_id", r.author_id},
                           {"author", r.author},
                           {"value", integral(value) ? json(static_cast<long long>(value)) : json(value)},
                           {"rank", r.ranks.at(report.measure)},
                           {"average_rank", r.average_ranks.at(report.measure)}});
      }
      return json{{"measure", name}, {"ranking", std::move(ranking)}}.dump(2) + "\n";
    }
    case ReportFormat::csv: {
      std::string out = csv::format_row({"id", "author", name, "rank"});
      for (const auto& r : records) {
        out += csv::format_row({std::to_string(r.author_id), r.author,
                                machine_number(r.measure(report.measure)),
                                std::to_string(r.ranks.at(report.measure))});
      }
      return out;
    }
    case ReportFormat::plotdata: {
      std::string out = "# author_id\t" + name + "\trank\n";
      for (const auto& r : records) {
        out += tsv_row({std::to_string(r.author_id), machine_number(r.measure(report.measure)),
                        std::to_string(r.ranks.at(report.measure))});
      }
      return out;
    }
    case ReportFormat::markdown: {
      std::string out = markdown_row({"ID", "Author", measure_label(report.measure), "Rank"}) + markdown_rule(4);
      for (const auto& r : records) {
        out += markdown_row({std::to_string(r.author_id), r.author,
                             human_number(r.measure(report.measure), options.precision),
                             std::to_string(r.ranks.at(report.measure))});
      }
      return out;
    }
    case ReportFormat::text: {
      std::vector<std::vector<std::string>> rows{{"rank", "id", "author", name}};
      for (const auto i : ranking_order(records, report.measure)) {
        const auto& r = records[i];
        rows.push_back({std::to_string(r.ranks.at(report.measure)), std::to_string(r.author_id), r.author,
                        human_number(r.measure(report.measure), options.precision)});
      }
      return text_table(rows);
    }
  }
  return {};
}

std::string write_report(const CorrelationMatrix& matrix, ReportFormat format, const ReportOptions& options) {
  std::vector<std::string> names;
  for (const auto m : matrix.measures) names.emplace_back(measure_name(m));
  const auto n = names.size();
  switch (format) {
    case ReportFormat::json:
      return json{{"measures", names}, {"spearman", matrix.values}}.dump(2) + "\n";
    case ReportFormat::csv:
    case ReportFormat::plotdata: {
      std::vector<std::string> header{"measure"};
      header.insert(header.end(), names.begin(), names.end());
      std::string out = format == ReportFormat::csv ? csv::format_row(header) : "# " + tsv_row(header);
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::string> row{names[i]};
        for (std::size_t j = 0; j < n; ++j) row.push_back(format_shortest(matrix.values[i][j]));
        out += format == ReportFormat::csv ? csv::format_row(row) : tsv_row(row);
      }
      return out;
    }
    case ReportFormat::markdown:
    case ReportFormat::text: {
      // The diagonal prints as a bare 1, as correlation tables usually show it.
      auto cell = [&](std::size_t i, std::size_t j) {
        return i == j ? std::string("1") : format_fixed(matrix.values[i][j], options.precision);
      };
      if (format == ReportFormat::markdown) {
        std::vector<std::string> header{""};
        for (const auto m : matrix.measures) header.push_back(measure_label(m));
        std::string out = markdown_row(header) + markdown_rule(n + 1);
        for (std::size_t i = 0; i < n; ++i) {
          std::vector<std::string> row{measure_label(matrix.measures[i])};
          for (std::size_t j = 0; j < n; ++j) row.push_back(cell(i, j));
          out += markdown_row(row);
        }
        return out;
      }
      std::vector<std::vector<std::string>> rows;
      std::vector<std::string> header{""};
      header.insert(header.end(), names.begin(), names.end());
      rows.push_back(header);
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::string> row{names[i]};
        for (std::size_t j = 0; j < n; ++j) row.push_back(cell(i, j));
        rows.push_back(std::move(row));
      }
      return text_table(rows);
    }
  }
  return {};
}

}  // namespace emseq
