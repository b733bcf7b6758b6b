#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emseq/sequence.hpp"

namespace emseq {

enum class Measure {
  h_sequence,
  em_sequence,
  em_prime_sequence,
  excess_total,
  tail_total,
};

inline constexpr std::array<Measure, 5> kAllMeasures = {
    Measure::h_sequence, Measure::em_sequence, Measure::em_prime_sequence,
    Measure::excess_total, Measure::tail_total};

std::string_view measure_name(Measure m) noexcept;
/// Accepts the canonical names plus the cohort-file column names
/// `excess_citations` and `tail_citations`.
std::optional<Measure> parse_measure(std::string_view name) noexcept;
/// Comma-separated canonical names, for error messages.
std::string measure_names();

struct CohortRecord {
  int author_id = 0;
  std::string author;
  std::map<Measure, double> measures;
  std::map<Measure, int> ranks;             // ordinal display rank, 1 = best
  std::map<Measure, double> average_ranks;  // tie-averaged, used for correlation

  /// Throws InvalidInput naming the record when the measure is absent.
  double measure(Measure m) const;
};

/// Record carrying all five measures of a computed profile.
CohortRecord make_cohort_record(int author_id, const SequenceProfile& profile);

/// Returns the records in input order with `ranks[measure]` and
/// `average_ranks[measure]` filled in. Larger values rank better; equal values
/// take consecutive display ranks in ascending author_id order and share the
/// mean of those ranks as their average rank.
std::vector<CohortRecord> rank_cohort(std::vector<CohortRecord> records, Measure measure);

/// Indices of `records` ordered best-first by `measure`, ties by author_id.
std::vector<std::size_t> ranking_order(std::span<const CohortRecord> records, Measure measure);

/// 1-based ranks with ties sharing their mean rank. Ascending: the smallest
/// value gets rank 1.
std::vector<double> average_ranks(std::span<const double> values);

/// Spearman rank correlation: Pearson correlation of the average ranks.
/// Throws InvalidInput on a length mismatch, fewer than two values, or a
/// constant input (the correlation is undefined).
double spearman(std::span<const double> x, std::span<const double> y);

struct CorrelationMatrix {
  std::vector<Measure> measures;
  std::vector<std::vector<double>> values;  // symmetric, unit diagonal
};

CorrelationMatrix correlation_matrix(std::span<const CohortRecord> records,
                                     std::span<const Measure> measures);

}  // namespace emseq
