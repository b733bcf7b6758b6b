#include "emseq/cohort.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "emseq/errors.hpp"

namespace emseq {

std::string_view measure_name(Measure m) noexcept {
  switch (m) {
    case Measure::h_sequence:
      return "h_sequence";
    case Measure::em_sequence:
      return "em_sequence";
    case Measure::em_prime_sequence:
      return "em_prime_sequence";
    case Measure::excess_total:
      return "excess_total";
    case Measure::tail_total:
      return "tail_total";
  }
  return "unknown";
}

std::optional<Measure> parse_measure(std::string_view name) noexcept {
  for (const auto m : kAllMeasures) {
    if (measure_name(m) == name) return m;
  }
  if (name == "excess_citations") return Measure::excess_total;
  if (name == "tail_citations") return Measure::tail_total;
  return std::nullopt;
}

std::string measure_names() {
  std::string out;
  for (const auto m : kAllMeasures) {
    if (!out.empty()) out += ", ";
    out += measure_name(m);
  }
  return out;
}

double CohortRecord::measure(Measure m) const {
  const auto it = measures.find(m);
  if (it == measures.end()) {
    throw InvalidInput("record " + std::to_string(author_id) + " (" + author + ") has no " +
                       std::string(measure_name(m)) + " value");
  }
  return it->second;
}

CohortRecord make_cohort_record(int author_id, const SequenceProfile& profile) {
  CohortRecord r;
  r.author_id = author_id;
  r.author = profile.author;
  r.measures[Measure::h_sequence] = static_cast<double>(profile.h_sequence_value);
  r.measures[Measure::em_sequence] = profile.em_sequence_value;
  r.measures[Measure::em_prime_sequence] = profile.em_prime_sequence_value;
  r.measures[Measure::excess_total] = static_cast<double>(profile.excess_total);
  r.measures[Measure::tail_total] = static_cast<double>(profile.tail_total);
  return r;
}

std::vector<std::size_t> ranking_order(std::span<const CohortRecord> records, Measure measure) {
  std::vector<double> values;
  values.reserve(records.size());
  for (const auto& r : records) values.push_back(r.measure(measure));

  std::vector<std::size_t> order(records.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (values[a] != values[b]) return values[a] > values[b];
    if (records[a].author_id != records[b].author_id) {
      return records[a].author_id < records[b].author_id;
    }
    return a < b;
  });
  return order;
}

std::vector<CohortRecord> rank_cohort(std::vector<CohortRecord> records, Measure measure) {
  const auto order = ranking_order(records, measure);
  // Walk runs of equal values; each run shares the mean of its ordinal ranks.
  for (std::size_t begin = 0; begin < order.size();) {
    const double value = records[order[begin]].measure(measure);
    std::size_t end = begin + 1;
    while (end < order.size() && records[order[end]].measure(measure) == value) ++end;
    const double shared = (static_cast<double>(begin + 1) + static_cast<double>(end)) / 2.0;
    for (std::size_t i = begin; i < end; ++i) {
      records[order[i]].ranks[measure] = static_cast<int>(i + 1);
      records[order[i]].average_ranks[measure] = shared;
    }
    begin = end;
  }
  return records;
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t begin = 0; begin < order.size();) {
    std::size_t end = begin + 1;
    while (end < order.size() && values[order[end]] == values[order[begin]]) ++end;
    const double shared = (static_cast<double>(begin + 1) + static_cast<double>(end)) / 2.0;
    for (std::size_t i = begin; i < end; ++i) ranks[order[i]] = shared;
    begin = end;
  }
  return ranks;
}

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw InvalidInput("spearman: length mismatch (" + std::to_string(x.size()) + " vs " +
                       std::to_string(y.size()) + ")");
  }
  if (x.size() < 2) {
    throw InvalidInput("spearman: need at least two observations");
  }
  for (const double v : x) {
    if (!std::isfinite(v)) throw InvalidInput("spearman: non-finite value");
  }
  for (const double v : y) {
    if (!std::isfinite(v)) throw InvalidInput("spearman: non-finite value");
  }
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  // Sum of ranks 1..n, so both means are (n+1)/2.
  const double mean = (static_cast<double>(x.size()) + 1.0) / 2.0;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    const double dx = rx[i] - mean;
    const double dy = ry[i] - mean;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw InvalidInput("spearman: a constant input has no rank correlation");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

CorrelationMatrix correlation_matrix(std::span<const CohortRecord> records,
                                     std::span<const Measure> measures) {
  if (records.size() < 2) {
    throw InvalidInput("correlation needs at least two records");
  }
  std::vector<std::vector<double>> columns;
  for (const auto m : measures) {
    auto& col = columns.emplace_back();
    for (const auto& r : records) col.push_back(r.measure(m));
  }
  CorrelationMatrix out;
  out.measures.assign(measures.begin(), measures.end());
  const auto n = measures.size();
  out.values.assign(n, std::vector<double>(n, 1.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out.values[i][j] = out.values[j][i] = spearman(columns[i], columns[j]);
    }
  }
  return out;
}

}  // namespace emseq
