#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>
#include <string>

#include "emseq/cohort.hpp"
#include "emseq/errors.hpp"
#include "emseq/index_core.hpp"
#include "emseq/io.hpp"
#include "emseq/report.hpp"
#include "emseq/sequence.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace emseq;

namespace {

Measure to_measure(const std::string& name) {
  const auto m = parse_measure(name);
  if (!m) throw InvalidInput("unknown measure \"" + name + "\"; valid measures: " + measure_names());
  return *m;
}

std::vector<Measure> to_measures(const std::vector<std::string>& names) {
  std::vector<Measure> out;
  for (const auto& n : names) out.push_back(to_measure(n));
  return out;
}

ReportFormat to_report_format(const std::string& name) {
  const auto f = parse_report_format(name);
  if (!f) throw InvalidInput("unknown report format \"" + name + "\"");
  return *f;
}

Format to_format(const std::string& name) {
  const auto f = parse_format(name);
  if (!f) throw InvalidInput("unknown input format \"" + name + "\"");
  return *f;
}

std::optional<Format> to_optional_format(const std::optional<std::string>& name) {
  if (!name) return std::nullopt;
  return to_format(*name);
}

Strictness to_strictness(bool lenient) { return lenient ? Strictness::lenient : Strictness::strict; }

py::dict record_dict(const CohortRecord& r) {
  py::dict measures, ranks, average;
  for (const auto& [m, v] : r.measures) measures[py::str(std::string(measure_name(m)))] = v;
  for (const auto& [m, v] : r.ranks) ranks[py::str(std::string(measure_name(m)))] = v;
  for (const auto& [m, v] : r.average_ranks) average[py::str(std::string(measure_name(m)))] = v;
  py::dict d;
  d["author_id"] = r.author_id;
  d["author"] = r.author;
  d["measures"] = measures;
  d["ranks"] = ranks;
  d["average_ranks"] = average;
  return d;
}

CohortRecord record_from_dict(const py::dict& d) {
  CohortRecord r;
  r.author_id = d["author_id"].cast<int>();
  r.author = d.contains("author") ? d["author"].cast<std::string>() : std::string();
  for (const auto& [key, value] : d["measures"].cast<py::dict>()) {
    r.measures[to_measure(key.cast<std::string>())] = value.cast<double>();
  }
  return r;
}

std::vector<CohortRecord> records_from(const py::list& items) {
  std::vector<CohortRecord> out;
  for (const auto& item : items) out.push_back(record_from_dict(item.cast<py::dict>()));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = R"pbdoc(
        h-index, EM-index and EM'-index sequences
        ------------------------------------------

        Citation vectors are plain lists of non-negative integers. Author
        matrices and cohorts are loaded from the JSON or CSV formats the
        ``emseq`` command line tool reads.
    )pbdoc";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<RangeError>(m, "RangeError", PyExc_IndexError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<Decomposition>(m, "Decomposition")
      .def_readonly("h", &Decomposition::h)
      .def_readonly("core_citations", &Decomposition::core_citations)
      .def_readonly("excess_citations", &Decomposition::excess_citations)
      .def_readonly("tail_citations", &Decomposition::tail_citations)
      .def("__repr__", [](const Decomposition& d) {
        return "Decomposition(h=" + std::to_string(d.h) + ", core=" + std::to_string(d.core_citations) +
               ", excess=" + std::to_string(d.excess_citations) + ", tail=" + std::to_string(d.tail_citations) +
               ")";
      });

  m.def("h_index", [](std::vector<Count> v) { return h_index(CitationVector(std::move(v))); },
        py::arg("counts"));
  m.def("em_elements", [](std::vector<Count> v) { return em_elements(CitationVector(std::move(v))).elements; },
        py::arg("counts"));
  m.def("em_index", [](std::vector<Count> v) { return em_index(CitationVector(std::move(v))); },
        py::arg("counts"));
  m.def("em_prime_elements",
        [](std::vector<Count> v) { return em_prime_elements(CitationVector(std::move(v))).elements; },
        py::arg("counts"));
  m.def("em_prime_index", [](std::vector<Count> v) { return em_prime_index(CitationVector(std::move(v))); },
        py::arg("counts"));
  m.def("core_excess_tail", [](std::vector<Count> v) { return core_excess_tail(CitationVector(std::move(v))); },
        py::arg("counts"));

  py::class_<CitationMatrix>(m, "CitationMatrix")
      .def_property_readonly("author", &CitationMatrix::author)
      .def_property_readonly("author_id", &CitationMatrix::author_id)
      .def_property_readonly("first_year", [](const CitationMatrix& c) { return c.span().first; })
      .def_property_readonly("current_year", [](const CitationMatrix& c) { return c.span().last; })
      .def_property_readonly("career_span", [](const CitationMatrix& c) { return c.span().length(); })
      .def_property_readonly("publication_count", &CitationMatrix::publication_count)
      .def("yearly_vector",
           [](const CitationMatrix& c, int year) {
             const auto v = yearly_vector(c, year);
             return std::vector<Count>(v.counts().begin(), v.counts().end());
           },
           py::arg("year"))
      .def("yearly_totals", [](const CitationMatrix& c) {
        const auto v = yearly_totals(c);
        return std::vector<Count>(v.counts().begin(), v.counts().end());
      });

  m.def("matrix_from_years",
        [](const std::vector<std::map<int, Count>>& rows, const std::string& author,
           std::optional<int> author_id, std::optional<std::vector<int>> pub_years) {
          std::vector<Publication> pubs;
          for (std::size_t i = 0; i < rows.size(); ++i) {
            pubs.push_back(Publication{pub_years && i < pub_years->size() ? (*pub_years)[i] : 0, rows[i]});
          }
          return CitationMatrix(author, author_id, std::move(pubs));
        },
        py::arg("rows"), py::arg("author") = "", py::arg("author_id") = py::none(),
        py::arg("pub_years") = py::none(),
        "Build a matrix from one {citing_year: count} mapping per publication.");

  m.def("load_author_matrix",
        [](const std::filesystem::path& path, std::optional<std::string> format, bool lenient) {
          return load_author_matrix(path, to_optional_format(format), to_strictness(lenient)).matrix;
        },
        py::arg("path"), py::arg("format") = py::none(), py::arg("lenient") = false);
  m.def("parse_author_matrix",
        [](const std::string& text, const std::string& format, bool lenient) {
          std::istringstream in(text);
          return load_author_matrix(in, to_format(format), to_strictness(lenient)).matrix;
        },
        py::arg("text"), py::arg("format") = "json", py::arg("lenient") = false);
  m.def("dump_author_matrix",
        [](const CitationMatrix& c, const std::string& format) {
          return write_author_matrix(AuthorMatrixDocument{c, nlohmann::json::object(), {}}, to_format(format));
        },
        py::arg("matrix"), py::arg("format") = "json");

  m.def("h_sequence", [](const CitationMatrix& c) {
    const auto s = h_sequence(c);
    return py::make_tuple(s.per_year, s.value);
  });
  m.def("em_sequence", [](const CitationMatrix& c) {
    const auto s = em_sequence(c);
    return py::make_tuple(s.per_year, s.value);
  });
  m.def("em_prime_sequence", [](const CitationMatrix& c) {
    const auto s = em_prime_sequence(c);
    return py::make_tuple(s.per_year, s.value);
  });
  m.def("excess_tail_totals", [](const CitationMatrix& c) {
    const auto t = excess_tail_totals(c);
    return py::make_tuple(t.excess_total, t.tail_total);
  });
  m.def("year_based_em_index", &year_based_em_index);

  m.def("sequence_report",
        [](const CitationMatrix& c, const std::string& format, int precision, const std::string& index) {
          const auto selection = parse_sequence_selection(index);
          if (!selection) throw InvalidInput("index must be one of h, em, emprime, all");
          return write_report(c, compute_profile(c), to_report_format(format), {precision}, *selection);
        },
        py::arg("matrix"), py::arg("format") = "json", py::arg("precision") = 2, py::arg("index") = "all");

  m.def("load_cohort",
        [](const std::filesystem::path& path, std::optional<std::string> format, bool lenient) {
          py::list out;
          for (const auto& r : load_cohort(path, to_optional_format(format), to_strictness(lenient)).records) {
            out.append(record_dict(r));
          }
          return out;
        },
        py::arg("path"), py::arg("format") = py::none(), py::arg("lenient") = false);
  m.def("rank_cohort",
        [](const py::list& records, const std::string& measure) {
          py::list out;
          for (const auto& r : rank_cohort(records_from(records), to_measure(measure))) out.append(record_dict(r));
          return out;
        },
        py::arg("records"), py::arg("measure"));
  m.def("spearman", [](const std::vector<double>& x, const std::vector<double>& y) { return spearman(x, y); },
        py::arg("x"), py::arg("y"));
  m.def("correlation_matrix",
        [](const py::list& records, const std::vector<std::string>& measures) {
          const auto recs = records_from(records);
          const auto ms = to_measures(measures);
          return correlation_matrix(recs, ms).values;
        },
        py::arg("records"), py::arg("measures"));

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
