"""Exact solvers for consistent subsets of vertex-colored graphs.

A subset S of vertices is *consistent* when every vertex has, among its
hop-distance-nearest members of S, at least one of its own color; it is
*strictly consistent* when all of them share its color.  This package
finds minimum subsets of both kinds (brute force everywhere, a
polynomial dynamic program on trees), verifies candidates, and builds
instance families whose optima are known by construction.
"""

from .exact import (DEFAULT_VERTEX_CAP, brute_force_mcs, brute_force_mscs,
                    min_dominating_set, min_set_cover, min_vertex_cover)
from .graph import (Blocks, Certificate, ColoredGraph, DistanceMatrix,
                    ParseError, PreconditionError, all_pairs_hop_distances,
                    blocks, format_graph, format_subset, is_consistent,
                    is_strict_consistent, nearest_neighbors, parse_graph,
                    parse_subset)
from .instances import (SplitMix64, random_connected_graph, random_set_cover,
                        random_tree, random_two_sat)
from .reductions import (Interval, IntervalInstance, ReductionMetadata,
                         SetCoverInstance, TwoSatFormula,
                         assignment_certificate, cubic_vc_to_intervals,
                         dominating_set_to_mcs, ds_mscs_certificate,
                         format_intervals, format_metadata, format_set_cover,
                         interval_cover_certificate, intervals_to_graph,
                         max2sat_to_tree, parse_cnf2, parse_intervals,
                         parse_set_cover, planar_ds_to_mscs,
                         predicted_interval_edges, set_cover_to_mscs)
from .treedp import (DEFAULT_COLOR_CAP, DPTable, RootedTree, dp_entry,
                     make_dp_key, reconstruct_witness, root_tree,
                     solve_tree_mcs, solve_tree_mcs_detailed)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_COLOR_CAP", "DEFAULT_VERTEX_CAP",
    "Blocks", "Certificate", "ColoredGraph", "DistanceMatrix", "DPTable",
    "Interval", "IntervalInstance", "ParseError", "PreconditionError",
    "ReductionMetadata", "RootedTree", "SetCoverInstance", "SplitMix64",
    "TwoSatFormula",
    "all_pairs_hop_distances", "assignment_certificate", "blocks",
    "brute_force_mcs", "brute_force_mscs", "cubic_vc_to_intervals",
    "dominating_set_to_mcs", "dp_entry", "ds_mscs_certificate",
    "format_graph", "format_intervals", "format_metadata", "format_set_cover",
    "format_subset", "interval_cover_certificate", "intervals_to_graph",
    "is_consistent", "is_strict_consistent", "make_dp_key", "max2sat_to_tree",
    "min_dominating_set", "min_set_cover", "min_vertex_cover",
    "nearest_neighbors", "parse_cnf2", "parse_graph", "parse_intervals",
    "parse_set_cover", "parse_subset", "planar_ds_to_mscs",
    "predicted_interval_edges", "random_connected_graph", "random_set_cover",
    "random_tree", "random_two_sat", "reconstruct_witness", "root_tree",
    "set_cover_to_mscs", "solve_tree_mcs", "solve_tree_mcs_detailed",
]
