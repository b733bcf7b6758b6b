#pragma once

#include <array>
#include <filesystem>
#include <string>

#include "emseq/io.hpp"

namespace fixtures {

inline std::filesystem::path path(const std::string& name) {
  return std::filesystem::path(EMSEQ_FIXTURE_DIR) / name;
}

inline emseq::CitationMatrix jackson() {
  return emseq::load_author_matrix(path("jackson.csv")).matrix;
}

inline emseq::CohortDocument cohort() { return emseq::load_cohort(path("cohort.csv")); }

// Expected per-year rows for the Jackson matrix, 2007..2017, at 2 decimals.
inline constexpr std::array<double, 11> kJacksonEm = {2.24, 2.65, 3.16, 2.83, 2.24, 3.16,
                                                      3.74, 3.00, 3.32, 2.45, 1.73};
// 2012: the extraction yields an element sum of 13, so sqrt(13) = 3.61.
inline constexpr std::array<double, 11> kJacksonEmPrime = {2.24, 3.00, 3.32, 3.87, 3.46, 3.61,
                                                           4.47, 3.74, 4.00, 3.32, 2.24};
inline constexpr std::array<long long, 11> kJacksonH = {2, 2, 3, 3, 4, 4, 4, 4, 4, 3, 2};

}  // namespace fixtures
