#include "emseq/index_core.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "emseq/errors.hpp"

namespace emseq {

namespace {

void check_non_negative(std::span<const Count> counts) {
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] < 0) {
      throw InvalidInput("negative citation count " + std::to_string(counts[i]) +
                         " at position " + std::to_string(i));
    }
  }
}

// Descending copy with zero-citation items dropped.
std::vector<Count> make_pool(std::span<const Count> counts) {
  std::vector<Count> pool;
  pool.reserve(counts.size());
  std::copy_if(counts.begin(), counts.end(), std::back_inserter(pool),
               [](Count c) { return c > 0; });
  std::sort(pool.begin(), pool.end(), std::greater<>());
  return pool;
}

// h-index of a pool already sorted in descending order.
Count sorted_h(std::span<const Count> pool) {
  Count h = 0;
  while (static_cast<std::size_t>(h) < pool.size() && pool[h] >= h + 1) {
    ++h;
  }
  return h;
}

}  // namespace

CitationVector::CitationVector(std::vector<Count> counts) : counts_(std::move(counts)) {
  check_non_negative(counts_);
}

CitationVector::CitationVector(std::initializer_list<Count> counts) : counts_(counts) {
  check_non_negative(counts_);
}

Count CitationVector::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), Count{0});
}

Count IndexElements::sum() const noexcept {
  return std::accumulate(elements.begin(), elements.end(), Count{0});
}

double IndexElements::value() const noexcept {
  return std::sqrt(static_cast<double>(sum()));
}

Count h_index(const CitationVector& v) { return sorted_h(make_pool(v.counts())); }

IndexElements em_elements(const CitationVector& v) {
  IndexElements out;
  auto pool = make_pool(v.counts());
  for (;;) {
    const Count h = sorted_h(pool);
    if (h == 0) break;
    out.elements.push_back(h);
    if (h == 1) break;
    // The h-core minus the h*h citations just credited. Subtracting the same
    // amount from a sorted prefix keeps it sorted, so zeros collect at the end.
    pool.resize(static_cast<std::size_t>(h));
    for (auto& c : pool) c -= h;
    pool.erase(std::find(pool.begin(), pool.end(), Count{0}), pool.end());
  }
  return out;
}

double em_index(const CitationVector& v) { return em_elements(v).value(); }

IndexElements em_prime_elements(const CitationVector& v) {
  IndexElements out;
  auto pool = make_pool(v.counts());
  while (!pool.empty()) {
    if (pool.size() == 1 || pool.front() == 1) {
      out.elements.push_back(1);
      break;
    }
    const Count h = sorted_h(pool);
    out.elements.push_back(h);
    // Core and tail are each still sorted after the subtraction; drop the
    // core's zeros and merge the two runs back together.
    const auto core_end = pool.begin() + h;
    for (auto it = pool.begin(); it != core_end; ++it) *it -= h;
    const auto core_live = std::find(pool.begin(), core_end, Count{0});
    const auto tail_begin = pool.erase(core_live, core_end);
    std::inplace_merge(pool.begin(), tail_begin, pool.end(), std::greater<>());
  }
  return out;
}

double em_prime_index(const CitationVector& v) { return em_prime_elements(v).value(); }

Decomposition core_excess_tail(const CitationVector& v) {
  const auto pool = make_pool(v.counts());
  Decomposition d;
  d.h = sorted_h(pool);
  d.core_citations = std::accumulate(pool.begin(), pool.begin() + d.h, Count{0});
  d.excess_citations = d.core_citations - d.h * d.h;
  d.tail_citations = std::accumulate(pool.begin() + d.h, pool.end(), Count{0});
  return d;
}

}  // namespace emseq
