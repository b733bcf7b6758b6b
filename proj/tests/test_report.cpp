#include <doctest.h>

#include <clocale>

#include <json.hpp>

#include "emseq/csv.hpp"
#include "emseq/report.hpp"
#include "fixtures.hpp"

using namespace emseq;

namespace {

std::string jackson_report(ReportFormat format, SequenceSelection selection = SequenceSelection::all) {
  const auto m = fixtures::jackson();
  return write_report(m, compute_profile(m), format, {}, selection);
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto eol = text.find('\n', pos);
    out.push_back(text.substr(pos, eol - pos));
    pos = eol == std::string::npos ? text.size() : eol + 1;
  }
  return out;
}

bool has_line(const std::string& text, const std::string& line) {
  for (const auto& l : lines(text)) {
    if (l == line) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("profile report") {
  TEST_CASE("markdown mirrors the publication table") {
    const auto md = jackson_report(ReportFormat::markdown);
    CHECK(has_line(md, "| Publication Year | 2007 | 2008 | 2009 | 2010 | 2011 | 2012 | 2013 | 2014 | 2015 | 2016 | 2017 |"));
    CHECK(has_line(md, "| 2006 | 11 | 9 | 11 | 15 | 12 | 11 | 20 | 14 | 16 | 11 | 5 |"));
    CHECK(has_line(md, "| EM-index | 2.24 | 2.65 | 3.16 | 2.83 | 2.24 | 3.16 | 3.74 | 3.00 | 3.32 | 2.45 | 1.73 |"));
    CHECK(has_line(md, "| EM'-index | 2.24 | 3.00 | 3.32 | 3.87 | 3.46 | 3.61 | 4.47 | 3.74 | 4.00 | 3.32 | 2.24 |"));
    CHECK(has_line(md, "| h-index sequence | 35 |"));
    CHECK(has_line(md, "| EM-index sequence | 30.51 |"));
    CHECK(has_line(md, "| EM'-index sequence | 37.26 |"));
    CHECK(has_line(md, "| Excess citations | 170 |"));
    CHECK(has_line(md, "| Tail citations | 34 |"));
  }

  TEST_CASE("deterministic bytes") {
    for (const auto f : {ReportFormat::text, ReportFormat::json, ReportFormat::csv, ReportFormat::markdown,
                         ReportFormat::plotdata}) {
      CHECK(jackson_report(f) == jackson_report(f));
    }
  }

  TEST_CASE("json carries full precision and elements") {
    const auto doc = nlohmann::json::parse(jackson_report(ReportFormat::json));
    CHECK(doc.at("h_sequence") == 35);
    CHECK(doc.at("em_sequence").get<double>() == compute_profile(fixtures::jackson()).em_sequence_value);
    CHECK(doc.at("per_year").size() == 11);
    CHECK(doc.at("per_year")[1].at("em_elements") == nlohmann::json::array({2, 2, 2, 1}));
    CHECK(doc.at("excess_total") == 170);
  }

  TEST_CASE("csv has one row per year plus totals") {
    const auto rows = csv::parse(jackson_report(ReportFormat::csv));
    REQUIRE(rows.size() == 13);
    CHECK(rows[0].fields ==
          std::vector<std::string>{"year", "h", "em", "em_prime", "core_citations", "excess_citations",
                                   "tail_citations"});
    CHECK(rows[1].fields[0] == "2007");
    CHECK(rows[12].fields[0] == "total");
    CHECK(rows[12].fields[1] == "35");
    CHECK(rows[12].fields[5] == "170");
    CHECK(rows[12].fields[6] == "34");
  }

  TEST_CASE("plotdata is tab separated with a commented header") {
    const auto text = jackson_report(ReportFormat::plotdata, SequenceSelection::em);
    const auto ls = lines(text);
    REQUIRE(ls.size() == 12);
    CHECK(ls[0] == "# year\tem");
    CHECK(ls[1].rfind("2007\t2.236", 0) == 0);
  }

  TEST_CASE("selection limits the columns") {
    const auto text = jackson_report(ReportFormat::text, SequenceSelection::h);
    CHECK(text.find("h-index sequence:") != std::string::npos);
    CHECK(text.find("EM-index sequence") == std::string::npos);
    CHECK(text.find("35") != std::string::npos);
  }

  TEST_CASE("formatting ignores the C locale") {
    const char* previous = std::setlocale(LC_NUMERIC, nullptr);
    const std::string saved = previous ? previous : "C";
    const auto baseline = jackson_report(ReportFormat::markdown);
    if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8") || std::setlocale(LC_NUMERIC, "fr_FR.UTF-8")) {
      CHECK(jackson_report(ReportFormat::markdown) == baseline);
    }
    std::setlocale(LC_NUMERIC, saved.c_str());
    CHECK(baseline.find("30.51") != std::string::npos);
  }
}

TEST_SUITE("index report") {
  TEST_CASE("worked example") {
    const auto r = compute_index_report(CitationVector{30, 30, 25, 22, 22, 21, 15, 15, 14, 10, 10, 10, 9, 8, 1});
    const auto text = write_report(r, ReportFormat::text);
    CHECK(text.find("10,6,5,3,2,2,2") != std::string::npos);
    CHECK(text.find("5.48") != std::string::npos);
    const auto doc = nlohmann::json::parse(write_report(r, ReportFormat::json));
    CHECK(doc.at("h_index") == 10);
    CHECK(doc.at("em_elements") == nlohmann::json::array({10, 6, 5, 3, 2, 2, 2}));
  }

  TEST_CASE("all zeros") {
    const auto r = compute_index_report(CitationVector{0, 0});
    const auto doc = nlohmann::json::parse(write_report(r, ReportFormat::json));
    CHECK(doc.at("h_index") == 0);
    CHECK(doc.at("em_index") == 0.0);
    CHECK(doc.at("em_prime_index") == 0.0);
    CHECK(doc.at("core_citations") == 0);
  }
}

TEST_SUITE("cohort reports") {
  TEST_CASE("rank csv keeps author-id order") {
    const auto cohort = fixtures::cohort();
    const RankingReport report{Measure::em_sequence, rank_cohort(cohort.records, Measure::em_sequence)};
    const auto rows = csv::parse(write_report(report, ReportFormat::csv));
    REQUIRE(rows.size() == 90);
    CHECK(rows[0].fields == std::vector<std::string>{"id", "author", "em_sequence", "rank"});
    CHECK(rows[1].fields == std::vector<std::string>{"1", "Adamantios Diamantopoulos", "55.24", "8"});
    CHECK(rows[37].fields == std::vector<std::string>{"37", "Hirsch J.E.", "140.79", "1"});
    CHECK(rows[50].fields[1] == "Maisano, Domenico A.");
  }

  TEST_CASE("rank text lists the best record first") {
    const auto cohort = fixtures::cohort();
    const RankingReport report{Measure::em_sequence, rank_cohort(cohort.records, Measure::em_sequence)};
    const auto ls = lines(write_report(report, ReportFormat::text));
    REQUIRE(ls.size() == 90);
    CHECK(ls[1].rfind("1 ", 0) == 0);
    CHECK(ls[1].find("Hirsch J.E.") != std::string::npos);
  }

  TEST_CASE("correlation markdown") {
    const auto cohort = fixtures::cohort();
    const std::vector<Measure> ms{Measure::h_sequence, Measure::em_sequence, Measure::em_prime_sequence};
    const auto md = write_report(correlation_matrix(cohort.records, ms), ReportFormat::markdown);
    CHECK(has_line(md, "| h-index sequence | 1 | 0.93 | 0.95 |"));
    CHECK(has_line(md, "| EM-index sequence | 0.93 | 1 | 0.96 |"));
  }
}
