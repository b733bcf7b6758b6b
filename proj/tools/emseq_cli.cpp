// emseq: h-index, EM-index and EM'-index sequences from citation matrices.
//
//   emseq index --vector 30,30,25,22,22,21,15,15,14,10,10,10,9,8,1
//   emseq index --matrix data/fixtures/jackson.json [--year 2013]
//   emseq sequence data/fixtures/jackson.csv --index em --emit markdown
//   emseq cohort rank data/fixtures/cohort.csv --by em_sequence
//   emseq cohort correlate data/fixtures/cohort.csv --measures h_sequence,em_sequence
//
// Exit codes: 0 success, 1 I/O failure, 2 validation or usage error.

#include <charconv>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "emseq/cohort.hpp"
#include "emseq/errors.hpp"
#include "emseq/io.hpp"
#include "emseq/report.hpp"
#include "emseq/sequence.hpp"

namespace {

constexpr int kExitIo = 1;
constexpr int kExitInvalid = 2;

struct InputOptions {
  std::string path;
  bool csv = false;
  bool json = false;
  bool lenient = false;

  emseq::Format format() const {
    if (csv) return emseq::Format::csv;
    if (json || path == "-") return emseq::Format::json;
    return emseq::format_for_path(path);
  }
  emseq::Strictness strictness() const {
    return lenient ? emseq::Strictness::lenient : emseq::Strictness::strict;
  }
};

struct OutputOptions {
  std::string emit = "text";
  int precision = 2;
  std::string output = "-";
};

void add_input_flags(CLI::App* cmd, InputOptions& in) {
  auto* csv = cmd->add_flag("--csv", in.csv, "Read the input as CSV");
  auto* json = cmd->add_flag("--json", in.json, "Read the input as JSON");
  csv->excludes(json);
  cmd->add_flag("--lenient", in.lenient, "Keep unknown fields instead of rejecting them");
}

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--emit", out.emit, "Report format")
      ->check(CLI::IsMember({"text", "json", "csv", "markdown", "plotdata"}));
  cmd->add_option("--precision", out.precision, "Decimals in text and markdown output")
      ->check(CLI::Range(0, 17));
  cmd->add_option("-o,--output", out.output, "Write the report here instead of stdout");
}

void emit(const OutputOptions& out, const std::string& bytes) {
  if (out.output == "-") {
    std::cout << bytes << std::flush;
    if (!std::cout) throw emseq::IoError("failed writing to stdout");
  } else {
    emseq::write_file(out.output, bytes);
  }
}

emseq::ReportFormat report_format(const OutputOptions& out) {
  return *emseq::parse_report_format(out.emit);
}

emseq::AuthorMatrixDocument load_matrix(const InputOptions& in) {
  if (in.path == "-") return emseq::load_author_matrix(std::cin, in.format(), in.strictness());
  return emseq::load_author_matrix(in.path, in.format(), in.strictness());
}

emseq::CohortDocument load_cohort(const InputOptions& in) {
  if (in.path == "-") return emseq::load_cohort(std::cin, in.format(), in.strictness());
  return emseq::load_cohort(in.path, in.format(), in.strictness());
}

emseq::CitationVector parse_vector(const std::string& text) {
  std::vector<emseq::Count> counts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const auto field = text.substr(pos, comma - pos);
    emseq::Count value{};
    const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || res.ec != std::errc() || res.ptr != field.data() + field.size()) {
      throw emseq::InvalidInput("--vector: \"" + field + "\" is not an integer");
    }
    counts.push_back(value);
    pos = comma + 1;
  }
  return emseq::CitationVector(std::move(counts));
}

emseq::Measure require_measure(const std::string& name) {
  const auto m = emseq::parse_measure(name);
  if (!m) {
    throw emseq::InvalidInput("unknown measure \"" + name + "\"; valid measures: " + emseq::measure_names());
  }
  return *m;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    parts.push_back(text.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return parts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Citation-based scholar assessment: h-index, EM-index and EM'-index sequences"};
  app.require_subcommand(1);

  // index
  auto* index_cmd = app.add_subcommand("index", "Indices of one citation vector");
  std::string vector_text;
  InputOptions index_in;
  OutputOptions index_out;
  std::optional<int> index_year;
  auto* vector_opt = index_cmd->add_option("--vector", vector_text, "Comma-separated citation counts");
  auto* matrix_opt = index_cmd->add_option("--matrix", index_in.path,
                                           "Author matrix file ('-' for stdin); uses per-publication totals");
  vector_opt->excludes(matrix_opt);
  index_cmd->add_option("--year", index_year, "With --matrix: use this citing year's column")
      ->needs(matrix_opt);
  add_input_flags(index_cmd, index_in);
  add_output_flags(index_cmd, index_out);

  // sequence
  auto* seq_cmd = app.add_subcommand("sequence", "Per-year index sequences of an author matrix");
  InputOptions seq_in;
  OutputOptions seq_out;
  std::string seq_index = "all";
  seq_cmd->add_option("input", seq_in.path, "Author matrix file ('-' for stdin)")->required();
  seq_cmd->add_option("--index", seq_index, "Which sequence to report")
      ->check(CLI::IsMember({"h", "em", "emprime", "all"}));
  add_input_flags(seq_cmd, seq_in);
  add_output_flags(seq_cmd, seq_out);

  // cohort rank | correlate
  auto* cohort_cmd = app.add_subcommand("cohort", "Rank or correlate a cohort of authors");
  cohort_cmd->require_subcommand(1);
  auto* rank_cmd = cohort_cmd->add_subcommand("rank", "Rank the cohort by one measure");
  InputOptions rank_in;
  OutputOptions rank_out;
  std::string rank_by;
  rank_cmd->add_option("input", rank_in.path, "Cohort file ('-' for stdin)")->required();
  rank_cmd->add_option("--by", rank_by, "Measure to rank by (" + emseq::measure_names() + ")")->required();
  add_input_flags(rank_cmd, rank_in);
  add_output_flags(rank_cmd, rank_out);

  auto* corr_cmd = cohort_cmd->add_subcommand("correlate", "Spearman rank correlation between measures");
  InputOptions corr_in;
  OutputOptions corr_out;
  std::string corr_measures = "h_sequence,em_sequence,em_prime_sequence";
  corr_cmd->add_option("input", corr_in.path, "Cohort file ('-' for stdin)")->required();
  corr_cmd->add_option("--measures", corr_measures, "Comma-separated measures");
  add_input_flags(corr_cmd, corr_in);
  add_output_flags(corr_cmd, corr_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*index_cmd) {
      if (vector_opt->count() == 0 && matrix_opt->count() == 0) {
        throw emseq::InvalidInput("index: pass --vector or --matrix");
      }
      emseq::IndexReport report;
      if (vector_opt->count()) {
        report = emseq::compute_index_report(parse_vector(vector_text));
      } else {
        const auto doc = load_matrix(index_in);
        const auto& m = doc.matrix;
        if (index_year) {
          report = emseq::compute_index_report(emseq::yearly_vector(m, *index_year));
        } else {
          std::vector<emseq::Count> totals;
          for (std::size_t i = 0; i < m.publication_count(); ++i) {
            emseq::Count sum = 0;
            for (const auto& [year, count] : m.publications()[i].citations_by_year) sum += count;
            totals.push_back(sum);
          }
          report = emseq::compute_index_report(emseq::CitationVector(std::move(totals)));
        }
        report.year_based_em_index = emseq::year_based_em_index(m);
      }
      emit(index_out, emseq::write_report(report, report_format(index_out), {index_out.precision}));
    } else if (*seq_cmd) {
      const auto doc = load_matrix(seq_in);
      const auto profile = emseq::compute_profile(doc.matrix);
      emit(seq_out, emseq::write_report(doc.matrix, profile, report_format(seq_out), {seq_out.precision},
                                        *emseq::parse_sequence_selection(seq_index)));
    } else if (*rank_cmd) {
      const auto measure = require_measure(rank_by);
      auto cohort = load_cohort(rank_in);
      emseq::RankingReport report{measure, emseq::rank_cohort(std::move(cohort.records), measure)};
      emit(rank_out, emseq::write_report(report, report_format(rank_out), {rank_out.precision}));
    } else if (*corr_cmd) {
      std::vector<emseq::Measure> measures;
      for (const auto& name : split(corr_measures)) measures.push_back(require_measure(name));
      const auto cohort = load_cohort(corr_in);
      const auto matrix = emseq::correlation_matrix(cohort.records, measures);
      emit(corr_out, emseq::write_report(matrix, report_format(corr_out), {corr_out.precision}));
    }
  } catch (const emseq::IoError& e) {
    std::cerr << "emseq: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "emseq: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "emseq: " << e.what() << "\n";
    return kExitInvalid;
  }
  return 0;
}
