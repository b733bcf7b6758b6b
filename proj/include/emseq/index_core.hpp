#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace emseq {

using Count = std::int64_t;

/// Multiset of non-negative citation counts. An item is a publication for a
/// single citing year, or a whole year for the year-based index. Construction
/// throws InvalidInput on any negative entry, so every operation below can
/// assume valid counts.
class CitationVector {
 public:
  CitationVector() = default;
  explicit CitationVector(std::vector<Count> counts);
  CitationVector(std::initializer_list<Count> counts);

  std::span<const Count> counts() const noexcept { return counts_; }
  std::size_t size() const noexcept { return counts_.size(); }
  bool empty() const noexcept { return counts_.empty(); }
  Count total() const noexcept;

  bool operator==(const CitationVector&) const = default;

 private:
  std::vector<Count> counts_;
};

/// Elements produced by the iterated h-core extraction. Non-increasing, all
/// >= 1, and the first element (if any) is the h-index of the source vector.
struct IndexElements {
  std::vector<Count> elements;

  Count sum() const noexcept;
  /// sqrt(sum()), or 0 for an empty list.
  double value() const noexcept;

  bool operator==(const IndexElements&) const = default;
};

struct Decomposition {
  Count h = 0;
  Count core_citations = 0;    // sum over the h most-cited items
  Count excess_citations = 0;  // core_citations - h*h
  Count tail_citations = 0;    // sum over every other item

  bool operator==(const Decomposition&) const = default;
};

/// Largest k such that at least k entries are >= k.
Count h_index(const CitationVector& v);

/// EM-index elements. Each round records the h-index of the pool; the next
/// pool is the h largest values minus h, with zeros removed. Stops once h is
/// 0 or after recording a 1.
IndexElements em_elements(const CitationVector& v);
double em_index(const CitationVector& v);

/// EM'-index elements. Like em_elements, but the whole pool (core and tail)
/// stays in play and is re-ranked every round. A pool holding a single item,
/// or only ones, contributes a final 1 and ends the extraction.
IndexElements em_prime_elements(const CitationVector& v);
double em_prime_index(const CitationVector& v);

Decomposition core_excess_tail(const CitationVector& v);

}  // namespace emseq
