"""Finite-group engine for pi-relative Fitting structure.

Thin wrapper over the C++ core: permutation groups, subgroup lattices,
Dnormality, Fitting sets, radicals, injectors, projectors and the
verification suites.
"""

from ._core import (
    CapError,
    Context,
    DomainError,
    Group,
    MismatchError,
    ParseError,
    default_corpus,
    load_corpus,
    parse_permutation,
    run_suites,
    suite_ids,
)

__all__ = [
    "CapError",
    "Context",
    "DomainError",
    "Group",
    "MismatchError",
    "ParseError",
    "default_corpus",
    "load_corpus",
    "parse_permutation",
    "run_suites",
    "suite_ids",
]
