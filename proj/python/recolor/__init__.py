"""Recoloring reachability for k-colorings of chordal graphs.

Thin re-export of the compiled ``_recolor`` extension.
"""

from ._recolor import (
    BudgetExceeded,
    Coloring,
    Csg,
    Graph,
    InputError,
    NiceTreeDecomposition,
    PreconditionError,
    csg,
    csg_over_decomposition,
    decompose,
    gen_interval_coloring,
    gen_interval_family,
    gen_quadratic_family,
    gen_random_chordal_mixed,
    gen_random_connected_chordal,
    gen_star_blowup,
    greedy_coloring,
    is_chordal,
    is_l_connected,
    is_proper_coloring,
    labeled_isomorphic,
    max_clique,
    random_coloring,
    random_walk,
    reach,
)

__all__ = [name for name in dir() if not name.startswith("_")]
