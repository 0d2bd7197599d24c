"""List colorings, list packings and constructive packing of complete graphs."""

from ._listpack import (
    Graph,
    InputError,
    InternalError,
    SearchExhausted,
    __version__,
    bipartition,
    cartesian_product,
    chromatic_number,
    complete_bipartite,
    complete_graph,
    edge_color_bipartite,
    enumerate_canonical_assignments,
    extract_packing,
    find_bad_assignment,
    is_proper_coloring,
    is_proper_packing,
    lift_lists,
    line_graph,
    list_chromatic_number,
    list_edge_color,
    list_packing_number,
    pack_complete,
    solve_list_coloring,
    solve_packing,
)

__all__ = [
    "Graph",
    "InputError",
    "InternalError",
    "SearchExhausted",
    "bipartition",
    "cartesian_product",
    "chromatic_number",
    "complete_bipartite",
    "complete_graph",
    "edge_color_bipartite",
    "enumerate_canonical_assignments",
    "extract_packing",
    "find_bad_assignment",
    "is_proper_coloring",
    "is_proper_packing",
    "lift_lists",
    "line_graph",
    "list_chromatic_number",
    "list_edge_color",
    "list_packing_number",
    "pack_complete",
    "solve_list_coloring",
    "solve_packing",
]
