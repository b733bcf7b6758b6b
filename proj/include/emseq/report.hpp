#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "emseq/cohort.hpp"
#include "emseq/index_core.hpp"
#include "emseq/sequence.hpp"

namespace emseq {

// text and markdown are human formats and round to `precision` decimals;
// json, csv and plotdata carry full precision.
enum class ReportFormat { text, json, csv, markdown, plotdata };

std::optional<ReportFormat> parse_report_format(std::string_view name) noexcept;

struct ReportOptions {
  int precision = 2;
};

/// Single-vector summary printed by `emseq index`.
struct IndexReport {
  CitationVector input;
  Count h = 0;
  IndexElements em;
  IndexElements em_prime;
  Decomposition decomposition;
  std::optional<double> year_based_em_index;  // set when the vector came from a matrix
};

IndexReport compute_index_report(const CitationVector& v);

enum class SequenceSelection { h, em, em_prime, all };

std::optional<SequenceSelection> parse_sequence_selection(std::string_view name) noexcept;

struct RankingReport {
  Measure measure;
  std::vector<CohortRecord> records;  // input order, ranks assigned
};

std::string write_report(const IndexReport& report, ReportFormat format,
                         const ReportOptions& options = {});

/// The matrix is only needed for markdown, which reproduces the full
/// publication-by-year table above the index rows.
std::string write_report(const CitationMatrix& matrix, const SequenceProfile& profile,
                         ReportFormat format, const ReportOptions& options = {},
                         SequenceSelection selection = SequenceSelection::all);

/// text lists records best-first; csv, markdown and json keep input order
/// (author-id order for the bundled cohort) with a rank column.
std::string write_report(const RankingReport& report, ReportFormat format,
                         const ReportOptions& options = {});

std::string write_report(const CorrelationMatrix& matrix, ReportFormat format,
                         const ReportOptions& options = {});

}  // namespace emseq
