#include "emseq/sequence.hpp"

#include <algorithm>
#include <limits>

#include "emseq/errors.hpp"

namespace emseq {

CitationMatrix::CitationMatrix(std::string author, std::optional<int> author_id,
                               std::vector<Publication> publications)
    : author_(std::move(author)), author_id_(author_id), publications_(std::move(publications)) {
  if (publications_.empty()) {
    throw InvalidInput("citation matrix has no publications");
  }
  int first = std::numeric_limits<int>::max();
  int last = std::numeric_limits<int>::min();
  for (std::size_t i = 0; i < publications_.size(); ++i) {
    for (const auto& [year, count] : publications_[i].citations_by_year) {
      if (count < 0) {
        throw InvalidInput("negative citation count " + std::to_string(count) + " for publication " +
                           std::to_string(i + 1) + " in " + std::to_string(year));
      }
      first = std::min(first, year);
      last = std::max(last, year);
    }
  }
  if (first > last) return;
  span_ = YearSpan{first, last};
  for (auto& pub : publications_) {
    for (int year = first; year <= last; ++year) pub.citations_by_year.try_emplace(year, 0);
  }
}

Count CitationMatrix::citations(std::size_t index, int year) const {
  const auto& by_year = publications_.at(index).citations_by_year;
  const auto it = by_year.find(year);
  return it == by_year.end() ? 0 : it->second;
}

CitationVector yearly_vector(const CitationMatrix& m, int year) {
  if (!m.span().contains(year)) {
    throw RangeError("year " + std::to_string(year) + " is outside the citing-year span");
  }
  std::vector<Count> column;
  column.reserve(m.publication_count());
  for (std::size_t i = 0; i < m.publication_count(); ++i) {
    column.push_back(m.citations(i, year));
  }
  return CitationVector(std::move(column));
}

CitationVector yearly_totals(const CitationMatrix& m) {
  std::vector<Count> totals;
  const auto& span = m.span();
  for (int year = span.first; year <= span.last; ++year) {
    totals.push_back(yearly_vector(m, year).total());
  }
  return CitationVector(std::move(totals));
}

HSequence h_sequence(const CitationMatrix& m) {
  HSequence out;
  for (int year = m.span().first; year <= m.span().last; ++year) {
    out.per_year.push_back(h_index(yearly_vector(m, year)));
    out.value += out.per_year.back();
  }
  return out;
}

namespace {

template <typename Index>
RealSequence real_sequence(const CitationMatrix& m, Index index) {
  RealSequence out;
  for (int year = m.span().first; year <= m.span().last; ++year) {
    out.per_year.push_back(index(yearly_vector(m, year)));
    out.value += out.per_year.back();
  }
  return out;
}

}  // namespace

RealSequence em_sequence(const CitationMatrix& m) {
  return real_sequence(m, [](const CitationVector& v) { return em_index(v); });
}

RealSequence em_prime_sequence(const CitationMatrix& m) {
  return real_sequence(m, [](const CitationVector& v) { return em_prime_index(v); });
}

ExcessTailTotals excess_tail_totals(const CitationMatrix& m) {
  ExcessTailTotals out;
  for (int year = m.span().first; year <= m.span().last; ++year) {
    const auto d = core_excess_tail(yearly_vector(m, year));
    out.excess_total += d.excess_citations;
    out.tail_total += d.tail_citations;
  }
  return out;
}

double year_based_em_index(const CitationMatrix& m) { return em_index(yearly_totals(m)); }

SequenceProfile compute_profile(const CitationMatrix& m) {
  SequenceProfile p;
  p.author = m.author();
  p.author_id = m.author_id();
  for (int year = m.span().first; year <= m.span().last; ++year) {
    const auto column = yearly_vector(m, year);
    YearProfile y;
    y.year = year;
    y.h = h_index(column);
    y.em = em_elements(column);
    y.em_prime = em_prime_elements(column);
    y.decomposition = core_excess_tail(column);

    p.h_sequence_value += y.h;
    p.em_sequence_value += y.em_value();
    p.em_prime_sequence_value += y.em_prime_value();
    p.excess_total += y.decomposition.excess_citations;
    p.tail_total += y.decomposition.tail_citations;
    p.per_year.push_back(std::move(y));
  }
  p.year_based_em_index = year_based_em_index(m);
  return p;
}

}  // namespace emseq
