#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "emseq/index_core.hpp"

namespace emseq {

struct Publication {
  int pub_year = 0;  // provenance only; no index depends on it
  std::map<int, Count> citations_by_year;

  bool operator==(const Publication&) const = default;
};

/// Inclusive range of citing years. Empty when no publication has any
/// citing-year entry at all.
struct YearSpan {
  int first = 0;
  int last = -1;

  bool empty() const noexcept { return last < first; }
  int length() const noexcept { return empty() ? 0 : last - first + 1; }
  bool contains(int year) const noexcept { return !empty() && year >= first && year <= last; }

  bool operator==(const YearSpan&) const = default;
};

/// Publications x citing-years table for one author. The citing-year span is
/// inferred from the entries present, and every publication is zero-filled
/// across it, so two matrices with the same counts compare equal.
class CitationMatrix {
 public:
  /// Throws InvalidInput for an empty publication list or a negative count.
  CitationMatrix(std::string author, std::optional<int> author_id,
                 std::vector<Publication> publications);

  const std::string& author() const noexcept { return author_; }
  std::optional<int> author_id() const noexcept { return author_id_; }
  const std::vector<Publication>& publications() const noexcept { return publications_; }
  std::size_t publication_count() const noexcept { return publications_.size(); }

  const YearSpan& span() const noexcept { return span_; }
  /// Citations publication `index` received in `year`; 0 when absent.
  Count citations(std::size_t index, int year) const;

  bool operator==(const CitationMatrix&) const = default;

 private:
  std::string author_;
  std::optional<int> author_id_;
  std::vector<Publication> publications_;
  YearSpan span_;
};

/// Column slice: one entry per publication, zeros included. Throws
/// RangeError when `year` is outside the matrix span.
CitationVector yearly_vector(const CitationMatrix& m, int year);

/// One entry per career year: the citations received that year.
CitationVector yearly_totals(const CitationMatrix& m);

struct HSequence {
  std::vector<Count> per_year;
  Count value = 0;
};

struct RealSequence {
  std::vector<double> per_year;
  double value = 0.0;  // sum of the unrounded per-year values
};

struct ExcessTailTotals {
  Count excess_total = 0;
  Count tail_total = 0;

  bool operator==(const ExcessTailTotals&) const = default;
};

HSequence h_sequence(const CitationMatrix& m);
RealSequence em_sequence(const CitationMatrix& m);
RealSequence em_prime_sequence(const CitationMatrix& m);
ExcessTailTotals excess_tail_totals(const CitationMatrix& m);
double year_based_em_index(const CitationMatrix& m);

struct YearProfile {
  int year = 0;
  Count h = 0;
  IndexElements em;
  IndexElements em_prime;
  Decomposition decomposition;

  double em_value() const noexcept { return em.value(); }
  double em_prime_value() const noexcept { return em_prime.value(); }
};

/// Everything the sequence engine computes for one author. Each aggregate is
/// the sum of its per-year column, accumulated in year order.
struct SequenceProfile {
  std::string author;
  std::optional<int> author_id;
  std::vector<YearProfile> per_year;
  Count h_sequence_value = 0;
  double em_sequence_value = 0.0;
  double em_prime_sequence_value = 0.0;
  Count excess_total = 0;
  Count tail_total = 0;
  double year_based_em_index = 0.0;
};

SequenceProfile compute_profile(const CitationMatrix& m);

}  // namespace emseq
