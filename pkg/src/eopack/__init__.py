"""Exact induced matchings, edge open packings and packing invariants.

The package computes nu_I (maximum induced matching), rho_e^o (maximum edge
open packing), independence, open packing, distance packings and domination
exactly on small graphs via one deterministic branch-and-bound core; builds
the four standard graph products plus rooted products and coronas; constructs
certified witnesses for the product lower bounds; and ships a registry of
executable statement checks over exhaustive small-graph corpora.
"""

from .graph import (
    GeneratorSpec,
    Graph,
    GraphError,
    SplitMix64,
    bipartition,
    canonical_form,
    canonical_graph,
    complete,
    complete_bipartite,
    cycle,
    distances,
    empty_graph,
    enumerate_graphs,
    enumerate_trees,
    figure1,
    figure1_xy_edges,
    generate,
    hypercube,
    is_connected,
    iter_graph6,
    parse_graph6,
    path,
    random_graph,
    spider,
    star,
    subdivided_star,
    write_graph6,
)
from .invariants import (
    CapacityError,
    ConflictGraph,
    InvariantResult,
    alpha,
    beta,
    build_conflict_graph,
    distance_packing,
    enumerate_optimal,
    gamma,
    has_perfect_code,
    max_independent_set,
    nu_i,
    rho_eo,
    rho_o,
    verify_witness,
)
from .products import (
    ProductGraph,
    cartesian,
    corona,
    direct,
    join,
    lex,
    product,
    rooted_product,
    strong,
)
from .trees import (
    SpiderPartition,
    generate_family_f,
    is_tree,
    nu_i_tree,
    recognize_family_f,
    verify_spider_partition,
)
from . import constructions, harness

__all__ = [
    "CapacityError",
    "ConflictGraph",
    "GeneratorSpec",
    "Graph",
    "GraphError",
    "InvariantResult",
    "ProductGraph",
    "SpiderPartition",
    "SplitMix64",
    "alpha",
    "beta",
    "bipartition",
    "build_conflict_graph",
    "canonical_form",
    "canonical_graph",
    "cartesian",
    "complete",
    "complete_bipartite",
    "constructions",
    "corona",
    "cycle",
    "direct",
    "distance_packing",
    "distances",
    "empty_graph",
    "enumerate_graphs",
    "enumerate_optimal",
    "enumerate_trees",
    "figure1",
    "figure1_xy_edges",
    "gamma",
    "generate",
    "generate_family_f",
    "harness",
    "has_perfect_code",
    "hypercube",
    "is_connected",
    "is_tree",
    "iter_graph6",
    "join",
    "lex",
    "max_independent_set",
    "nu_i",
    "nu_i_tree",
    "parse_graph6",
    "path",
    "product",
    "random_graph",
    "recognize_family_f",
    "rho_eo",
    "rho_o",
    "rooted_product",
    "spider",
    "star",
    "strong",
    "subdivided_star",
    "verify_spider_partition",
    "verify_witness",
    "write_graph6",
]

__version__ = "0.1.0"
