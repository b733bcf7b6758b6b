"""h-index, EM-index and EM'-index sequences from per-author citation matrices."""

from ._core import (
    CitationMatrix,
    Decomposition,
    InvalidInput,
    IoError,
    RangeError,
    __version__,
    core_excess_tail,
    correlation_matrix,
    dump_author_matrix,
    em_elements,
    em_index,
    em_prime_elements,
    em_prime_index,
    em_prime_sequence,
    em_sequence,
    excess_tail_totals,
    h_index,
    h_sequence,
    load_author_matrix,
    load_cohort,
    matrix_from_years,
    parse_author_matrix,
    rank_cohort,
    sequence_report,
    spearman,
    year_based_em_index,
)

__all__ = [
    "CitationMatrix",
    "Decomposition",
    "InvalidInput",
    "IoError",
    "RangeError",
    "core_excess_tail",
    "correlation_matrix",
    "dump_author_matrix",
    "em_elements",
    "em_index",
    "em_prime_elements",
    "em_prime_index",
    "em_prime_sequence",
    "em_sequence",
    "excess_tail_totals",
    "h_index",
    "h_sequence",
    "load_author_matrix",
    "load_cohort",
    "matrix_from_years",
    "parse_author_matrix",
    "rank_cohort",
    "sequence_report",
    "spearman",
    "year_based_em_index",
]
