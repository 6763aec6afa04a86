"""Exact computation with binary matroids.

Thin python surface over the C++ core: the named-matroid catalog,
connectivity, canonical isomorphism keys, minor search, composition
operators, splitter-style enumeration and the classification of
3-connected P9-free binary matroids.
"""

from binmat._core import (
    Matroid,
    are_isomorphic,
    build_starfish,
    canonical_key,
    catalog_names,
    classify,
    coextensions,
    direct_sum,
    extensions,
    first_triangle,
    from_text,
    has_minor,
    has_rooted_minor,
    is_cographic,
    is_graphic,
    is_internally_4_connected,
    is_regular,
    is_three_connected,
    lambda_,
    named,
    parallel_connection,
    run_verification_case,
    tau,
    three_sum,
    two_sum,
    verification_case_ids,
)

__all__ = [
    "Matroid",
    "are_isomorphic",
    "build_starfish",
    "canonical_key",
    "catalog_names",
    "classify",
    "coextensions",
    "direct_sum",
    "extensions",
    "first_triangle",
    "from_text",
    "has_minor",
    "has_rooted_minor",
    "is_cographic",
    "is_graphic",
    "is_internally_4_connected",
    "is_regular",
    "is_three_connected",
    "lambda_",
    "named",
    "parallel_connection",
    "run_verification_case",
    "tau",
    "three_sum",
    "two_sum",
    "verification_case_ids",
]
