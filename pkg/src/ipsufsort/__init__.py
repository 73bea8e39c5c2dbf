"""In-place suffix array construction algorithms and oracles."""

from .textcore import (
    InvalidInputError,
    Text,
    TypeCounts,
    bwt,
    classify_types,
    compare_suffixes,
    count_types,
    make_text,
    naive_suffix_array,
    next_s_type,
    verify_suffix_array,
)

__all__ = [
    "InvalidInputError",
    "Text",
    "TypeCounts",
    "bwt",
    "classify_types",
    "compare_suffixes",
    "count_types",
    "make_text",
    "naive_suffix_array",
    "next_s_type",
    "verify_suffix_array",
]
