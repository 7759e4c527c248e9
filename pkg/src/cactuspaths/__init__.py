"""Exact subpath counting for cactus graphs, with extremal verification.

The subpath number of a graph is the number of its simple paths, including
the single-vertex paths.  On a cactus the count between two vertices is
2^c, where c counts the cycles along the block-cut-tree route, which gives
an O(n^2) exact counter; everything else in the package (closed forms,
rewrites, censuses, extremal sweeps) is checked against the brute-force
enumerator.
"""

from .census import (
    CensusSizeError,
    all_graphs,
    are_isomorphic,
    canonical_key,
    connected_graphs,
    count_automorphisms,
    enumerate_cacti,
    random_cactus,
)
from .counting import (
    BudgetExceededError,
    cactus_count_between,
    cactus_path_count,
    count_paths,
    count_paths_between,
    cycles_on_route,
)
from .extremal import ExtremalReport, extremal_sweep, is_end_triangle_cactus, verify_theorems
from .families import (
    balanced_saw,
    complete_graph,
    cycle_chain,
    cycle_graph,
    end_triangle_cactus,
    path_graph,
    pseudo_friendship,
    pseudo_triangle_chain,
    star_graph,
)
from .formulas import (
    cactus_path_bounds,
    connected_graph_bounds,
    cycle_path_count,
    min_cactus_path_count,
    ptc_printed,
    ptc_summation,
    tree_path_count,
    unicyclic_path_count,
)
from .graphs import (
    Graph,
    GraphError,
    NotCactusError,
    ParseError,
    block_cut_tree,
    cycle_incidence_graph,
    find_bridges,
    is_cactus,
    is_cactus_chain,
    is_connected,
    parse_edge_list,
    to_edge_list_text,
    validate_cactus,
)
from .indices import InvariantTriple, invariant_triple, subtree_count, wiener
from .transforms import (
    TransformError,
    TransformResult,
    balance_end_cycles,
    bridge_slide,
    chain_straighten,
    cycle_to_triangle,
    maximize_to_fixpoint,
    minimize_to_fixpoint,
    shrink_interior_cycle,
    split_interior_triangle,
)

__all__ = [
    "BudgetExceededError",
    "CensusSizeError",
    "ExtremalReport",
    "Graph",
    "GraphError",
    "InvariantTriple",
    "NotCactusError",
    "ParseError",
    "TransformError",
    "TransformResult",
    "all_graphs",
    "are_isomorphic",
    "balance_end_cycles",
    "balanced_saw",
    "block_cut_tree",
    "bridge_slide",
    "cactus_count_between",
    "cactus_path_bounds",
    "cactus_path_count",
    "canonical_key",
    "chain_straighten",
    "complete_graph",
    "connected_graph_bounds",
    "connected_graphs",
    "count_automorphisms",
    "count_paths",
    "count_paths_between",
    "cycle_chain",
    "cycle_graph",
    "cycle_incidence_graph",
    "cycle_path_count",
    "cycle_to_triangle",
    "cycles_on_route",
    "end_triangle_cactus",
    "enumerate_cacti",
    "extremal_sweep",
    "find_bridges",
    "invariant_triple",
    "is_cactus",
    "is_cactus_chain",
    "is_connected",
    "is_end_triangle_cactus",
    "maximize_to_fixpoint",
    "min_cactus_path_count",
    "minimize_to_fixpoint",
    "parse_edge_list",
    "path_graph",
    "pseudo_friendship",
    "pseudo_triangle_chain",
    "ptc_printed",
    "ptc_summation",
    "random_cactus",
    "shrink_interior_cycle",
    "split_interior_triangle",
    "star_graph",
    "subtree_count",
    "to_edge_list_text",
    "tree_path_count",
    "unicyclic_path_count",
    "validate_cactus",
    "verify_theorems",
    "wiener",
]
