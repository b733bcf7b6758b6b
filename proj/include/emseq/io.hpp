#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "emseq/cohort.hpp"
#include "emseq/sequence.hpp"

namespace emseq {

inline constexpr int kSchemaVersion = 1;

enum class Format { json, csv };

/// In strict mode unknown fields are rejected; lenient mode keeps them in the
/// document's `extra` slots and writes them back out unchanged.
enum class Strictness { strict, lenient };

std::optional<Format> parse_format(std::string_view name) noexcept;
/// `.csv` means CSV; anything else is read as JSON.
Format format_for_path(const std::filesystem::path& path) noexcept;

// JSON:  {"schema_version": 1, "author": "...", "author_id": 7,
//         "publications": [{"pub_year": 2006, "citations": {"2007": 11, ...}}]}
// CSV:   optional leading "# key: value" metadata lines (author, author_id),
//        then a header "pub_year,2007,2008,..." and one row per publication.
struct AuthorMatrixDocument {
  CitationMatrix matrix;
  nlohmann::json extra = nlohmann::json::object();
  std::vector<nlohmann::json> publication_extra;  // empty, or one object per publication

  bool operator==(const AuthorMatrixDocument&) const = default;
};

// JSON:  {"schema_version": 1, "authors": [{"author_id": 1, "author": "...",
//         "h_sequence": 65, ..., "tail_citations": 606}]}
// CSV:   author_id,author,h_sequence,em_sequence,em_prime_sequence,
//        excess_citations,tail_citations
struct CohortDocument {
  std::vector<CohortRecord> records;
  nlohmann::json extra = nlohmann::json::object();
  std::vector<nlohmann::json> record_extra;  // empty, or one object per record
};

bool same_records(const CohortDocument& a, const CohortDocument& b);

AuthorMatrixDocument load_author_matrix(std::istream& in, Format format,
                                        Strictness strictness = Strictness::strict);
AuthorMatrixDocument load_author_matrix(const std::filesystem::path& path,
                                        std::optional<Format> format = std::nullopt,
                                        Strictness strictness = Strictness::strict);
std::string write_author_matrix(const AuthorMatrixDocument& doc, Format format);

CohortDocument load_cohort(std::istream& in, Format format,
                           Strictness strictness = Strictness::strict);
CohortDocument load_cohort(const std::filesystem::path& path,
                           std::optional<Format> format = std::nullopt,
                           Strictness strictness = Strictness::strict);
std::string write_cohort(const CohortDocument& doc, Format format);

/// Reads a whole stream or file. Throws IoError when unreadable.
std::string read_all(std::istream& in);
std::string read_file(const std::filesystem::path& path);
/// Throws IoError when the sink cannot be written.
void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace emseq
