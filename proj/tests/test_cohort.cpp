#include <doctest.h>

#include <cmath>
#include <random>

#include "emseq/cohort.hpp"
#include "emseq/csv.hpp"
#include "emseq/errors.hpp"
#include "fixtures.hpp"

using namespace emseq;

namespace {

const CohortRecord& by_id(const std::vector<CohortRecord>& records, int id) {
  for (const auto& r : records) {
    if (r.author_id == id) return r;
  }
  throw std::runtime_error("no record " + std::to_string(id));
}

CohortRecord make(int id, double value) {
  CohortRecord r;
  r.author_id = id;
  r.author = "author " + std::to_string(id);
  r.measures[Measure::h_sequence] = value;
  return r;
}

// No-ties closed form, independent of the Pearson-on-ranks route.
double spearman_no_ties(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  double d2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double rx = 1, ry = 1;
    for (std::size_t j = 0; j < x.size(); ++j) {
      rx += x[j] < x[i] ? 1 : 0;
      ry += y[j] < y[i] ? 1 : 0;
    }
    d2 += (rx - ry) * (rx - ry);
  }
  return 1.0 - 6.0 * d2 / (n * (n * n - 1.0));
}

}  // namespace

TEST_CASE("measure names") {
  for (const auto m : kAllMeasures) CHECK(parse_measure(measure_name(m)) == m);
  CHECK(parse_measure("excess_citations") == Measure::excess_total);
  CHECK(parse_measure("tail_citations") == Measure::tail_total);
  CHECK_FALSE(parse_measure("bogus"));
}

TEST_SUITE("rank_cohort") {
  TEST_CASE("spot ranks from the cohort fixture") {
    const auto records = fixtures::cohort().records;
    const auto by_em = rank_cohort(records, Measure::em_sequence);
    const auto by_h = rank_cohort(records, Measure::h_sequence);
    CHECK(by_id(by_em, 37).ranks.at(Measure::em_sequence) == 1);
    CHECK(by_id(by_h, 37).ranks.at(Measure::h_sequence) == 5);
    CHECK(by_id(by_h, 74).ranks.at(Measure::h_sequence) == 1);
    CHECK(by_id(by_em, 74).ranks.at(Measure::em_sequence) == 3);
    CHECK(by_id(by_h, 51).ranks.at(Measure::h_sequence) == 50);
    CHECK(by_id(by_em, 51).ranks.at(Measure::em_sequence) == 20);
  }

  TEST_CASE("every reference rank column is reproduced") {
    const auto rows = csv::parse(read_file(fixtures::path("cohort_reference_ranks.csv")));
    REQUIRE(rows.size() == 90);
    const auto records = fixtures::cohort().records;
    const std::array<Measure, 3> measures{Measure::h_sequence, Measure::em_sequence, Measure::em_prime_sequence};
    for (std::size_t k = 0; k < measures.size(); ++k) {
      const auto ranked = rank_cohort(records, measures[k]);
      for (std::size_t r = 1; r < rows.size(); ++r) {
        const int id = std::stoi(rows[r].fields[0]);
        CAPTURE(id);
        CAPTURE(measure_name(measures[k]));
        CHECK(by_id(ranked, id).ranks.at(measures[k]) == std::stoi(rows[r].fields[k + 1]));
      }
    }
  }

  TEST_CASE("ties take consecutive ranks by author id and share an average rank") {
    const auto ranked = rank_cohort({make(9, 5.0), make(3, 7.0), make(4, 5.0), make(1, 5.0)}, Measure::h_sequence);
    CHECK(ranked[0].author_id == 9);  // input order preserved
    CHECK(by_id(ranked, 3).ranks.at(Measure::h_sequence) == 1);
    CHECK(by_id(ranked, 1).ranks.at(Measure::h_sequence) == 2);
    CHECK(by_id(ranked, 4).ranks.at(Measure::h_sequence) == 3);
    CHECK(by_id(ranked, 9).ranks.at(Measure::h_sequence) == 4);
    CHECK(by_id(ranked, 3).average_ranks.at(Measure::h_sequence) == 1.0);
    for (const int id : {1, 4, 9}) CHECK(by_id(ranked, id).average_ranks.at(Measure::h_sequence) == 3.0);
  }

  TEST_CASE("full tie") {
    std::vector<CohortRecord> records;
    for (int id = 5; id >= 1; --id) records.push_back(make(id, 2.5));
    const auto ranked = rank_cohort(records, Measure::h_sequence);
    for (const auto& r : ranked) {
      CHECK(r.ranks.at(Measure::h_sequence) == r.author_id);
      CHECK(r.average_ranks.at(Measure::h_sequence) == 3.0);
    }
  }

  TEST_CASE("missing measure names the record") {
    auto bad = make(12, 1.0);
    bad.author = "Nobody";
    bad.measures.clear();
    try {
      rank_cohort({make(1, 2.0), bad}, Measure::h_sequence);
      FAIL("expected InvalidInput");
    } catch (const InvalidInput& e) {
      CHECK(std::string(e.what()).find("12") != std::string::npos);
      CHECK(std::string(e.what()).find("Nobody") != std::string::npos);
    }
  }
}

TEST_SUITE("spearman") {
  TEST_CASE("reference values") {
    // scipy.stats.spearmanr on the same data.
    const std::vector<double> a{17, 86, 60, 77, 47, 3, 70, 87, 88, 92};
    const std::vector<double> b{70, 29, 85, 61, 80, 34, 60, 31, 73, 66};
    CHECK(spearman(a, b) == doctest::Approx(-0.16363636363636364).epsilon(1e-12));
    const std::vector<double> tied{17, 86, 60, 77, 47, 3, 70, 47, 88, 92};
    CHECK(spearman(tied, b) == doctest::Approx(0.024316221747202587).epsilon(1e-12));
  }

  TEST_CASE("identical and reversed orderings") {
    const std::vector<double> x{3, 1, 4, 1.5, 9, 2.6};
    CHECK(spearman(x, x) == doctest::Approx(1.0));
    std::vector<double> reversed;
    for (const auto v : x) reversed.push_back(-v);
    CHECK(spearman(x, reversed) == doctest::Approx(-1.0));
  }

  TEST_CASE("matches the no-ties closed form") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 100.0);
    for (int trial = 0; trial < 200; ++trial) {
      const auto n = 2 + trial % 30;
      std::vector<double> x(n), y(n);
      for (auto& v : x) v = u(rng);
      for (auto& v : y) v = u(rng);
      CHECK(spearman(x, y) == doctest::Approx(spearman_no_ties(x, y)).epsilon(1e-9));
    }
  }

  TEST_CASE("invariant under strictly increasing transforms") {
    const std::vector<double> x{5, 3, 8, 8, 1, 7};
    const std::vector<double> y{2, 9, 4, 6, 6, 1};
    std::vector<double> tx;
    for (const auto v : x) tx.push_back(std::exp(v) + 3.0);
    CHECK(spearman(tx, y) == doctest::Approx(spearman(x, y)));
    CHECK(spearman(y, x) == doctest::Approx(spearman(x, y)));
  }

  TEST_CASE("errors") {
    const std::vector<double> two{1, 2};
    const std::vector<double> three{1, 2, 3};
    const std::vector<double> one{1};
    CHECK_THROWS_AS(spearman(two, three), InvalidInput);
    CHECK_THROWS_AS(spearman(one, one), InvalidInput);
    const std::vector<double> flat{4, 4, 4};
    CHECK_THROWS_AS(spearman(flat, three), InvalidInput);
  }

  TEST_CASE("average ranks") {
    const std::vector<double> v{10, 20, 10, 30};
    CHECK(average_ranks(v) == std::vector<double>{1.5, 3, 1.5, 4});
  }
}

TEST_SUITE("correlation_matrix") {
  TEST_CASE("cohort fixture") {
    const auto records = fixtures::cohort().records;
    const std::vector<Measure> ms{Measure::h_sequence, Measure::em_sequence, Measure::em_prime_sequence};
    const auto c = correlation_matrix(records, ms);
    CHECK(std::fabs(c.values[0][1] - 0.93) <= 0.01);
    CHECK(std::fabs(c.values[0][2] - 0.94) <= 0.01);
    CHECK(std::fabs(c.values[1][2] - 0.96) <= 0.01);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(c.values[i][i] == 1.0);
      for (std::size_t j = 0; j < 3; ++j) CHECK(c.values[i][j] == c.values[j][i]);
    }
  }

  TEST_CASE("single measure") {
    const std::vector<CohortRecord> records{make(1, 1.0), make(2, 2.0)};
    const std::vector<Measure> ms{Measure::h_sequence};
    const auto c = correlation_matrix(records, ms);
    CHECK(c.values == std::vector<std::vector<double>>{{1.0}});
  }

  TEST_CASE("anti-ordered measures") {
    std::vector<CohortRecord> records;
    for (int id = 1; id <= 6; ++id) {
      auto r = make(id, id * 1.5);
      r.measures[Measure::tail_total] = 100.0 - id;
      records.push_back(r);
    }
    const std::vector<Measure> ms{Measure::h_sequence, Measure::tail_total};
    const auto c = correlation_matrix(records, ms);
    CHECK(c.values[0][1] == doctest::Approx(-1.0));
    CHECK(c.values[1][0] == doctest::Approx(-1.0));
  }

  TEST_CASE("needs two records") {
    const std::vector<CohortRecord> records{make(1, 1.0)};
    const std::vector<Measure> ms{Measure::h_sequence};
    CHECK_THROWS_AS(correlation_matrix(records, ms), InvalidInput);
  }
}

TEST_CASE("cohort record from a computed profile") {
  const auto p = compute_profile(fixtures::jackson());
  const auto r = make_cohort_record(7, p);
  CHECK(r.measure(Measure::h_sequence) == 35.0);
  CHECK(r.measure(Measure::excess_total) == 170.0);
  CHECK(r.measure(Measure::tail_total) == 34.0);
  CHECK(r.measure(Measure::em_sequence) == p.em_sequence_value);
}
