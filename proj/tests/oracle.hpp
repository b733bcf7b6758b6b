#pragma once

// Reference implementations used only by tests. They follow the definitions
// literally (unsorted multisets, repeated max selection, naive counting) and
// share no code with the library.

#include <algorithm>
#include <cstdint>
#include <vector>

namespace oracle {

using Count = std::int64_t;

// Largest k in 0..n with at least k entries >= k, by direct scan.
inline Count naive_h(const std::vector<Count>& v) {
  Count best = 0;
  for (Count k = 1; k <= static_cast<Count>(v.size()); ++k) {
    Count at_least = 0;
    for (const auto c : v) at_least += c >= k ? 1 : 0;
    if (at_least >= k) best = k;
  }
  return best;
}

// Positions of the `h` largest entries, picked one at a time.
inline std::vector<std::size_t> largest_positions(const std::vector<Count>& pool, Count h) {
  std::vector<bool> taken(pool.size(), false);
  std::vector<std::size_t> picked;
  for (Count round = 0; round < h; ++round) {
    std::size_t best = pool.size();
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (!taken[i] && (best == pool.size() || pool[i] > pool[best])) best = i;
    }
    taken[best] = true;
    picked.push_back(best);
  }
  return picked;
}

inline std::vector<Count> without_zeros(const std::vector<Count>& v) {
  std::vector<Count> out;
  for (const auto c : v) {
    if (c != 0) out.push_back(c);
  }
  return out;
}

inline std::vector<Count> em_elements(const std::vector<Count>& v) {
  std::vector<Count> out;
  auto pool = without_zeros(v);
  while (true) {
    const Count h = naive_h(pool);
    if (h == 0) break;
    out.push_back(h);
    if (h == 1) break;
    std::vector<Count> next;
    for (const auto i : largest_positions(pool, h)) next.push_back(pool[i] - h);
    pool = without_zeros(next);
  }
  return out;
}

inline std::vector<Count> em_prime_elements(const std::vector<Count>& v) {
  std::vector<Count> out;
  auto pool = without_zeros(v);
  while (true) {
    if (pool.empty()) break;
    if (pool.size() == 1) {
      out.push_back(1);
      break;
    }
    if (std::all_of(pool.begin(), pool.end(), [](Count c) { return c == 1; })) {
      out.push_back(1);
      break;
    }
    const Count h = naive_h(pool);
    out.push_back(h);
    for (const auto i : largest_positions(pool, h)) pool[i] -= h;
    pool = without_zeros(pool);
  }
  return out;
}

// Sum of the h largest entries, with h from naive_h.
inline Count core_citations(const std::vector<Count>& v) {
  Count sum = 0;
  for (const auto i : largest_positions(v, naive_h(v))) sum += v[i];
  return sum;
}

// Every multiset of positive integers summing to `total`, parts non-increasing.
inline void partitions(Count total, Count max_part, std::vector<Count>& prefix,
                       std::vector<std::vector<Count>>& out) {
  if (total == 0) {
    out.push_back(prefix);
    return;
  }
  for (Count part = std::min(total, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions(total - part, part, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<std::vector<Count>> all_multisets_up_to(Count max_total) {
  std::vector<std::vector<Count>> out;
  std::vector<Count> prefix;
  for (Count t = 0; t <= max_total; ++t) partitions(t, t, prefix, out);
  return out;
}

}  // namespace oracle
