"""Violation certificates and exact small cases for rainbow-copy coloring families."""

from ._core import (
    BudgetExhausted,
    Family,
    FormatError,
    Pattern,
    RainbowError,
    ScaleGuardExceeded,
    bipartition_extract,
    check_certificate,
    clique,
    clique_extract,
    cnf,
    complete_bipartite,
    compute_c,
    construct_good_family,
    copy_count,
    cycle,
    decide_good_exists,
    decode_model,
    desk_points,
    detect_h6_member,
    family_is_good,
    find,
    generate,
    generic_find,
    isomorphic,
    matching,
    matching_extract,
    minimum_host,
    path,
    star,
    star_extract,
    sweep,
)

__all__ = [name for name in dir() if not name.startswith("_")]
