"""Cross-checks against networkx, used purely as an independent oracle.

Skipped when networkx is not installed; the package itself never imports it.
"""

import math

import pytest

nx = pytest.importorskip("networkx")

from eopack.graph import (
    Graph,
    bipartition,
    canonical_form,
    distances,
    enumerate_graphs,
    enumerate_trees,
    parse_graph6,
    random_graph,
    write_graph6,
)


def to_nx(g: Graph):
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges)
    return out


def from_nx(h) -> Graph:
    mapping = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(
        h.number_of_nodes(), [(mapping[u], mapping[v]) for u, v in h.edges()]
    )


def corpus():
    for n in range(1, 6):
        yield from enumerate_graphs(n, dedup=True)
    for i in range(50):
        yield random_graph(4 + i % 9, "1/2", seed=3000 + i)


def test_graph6_encoding_matches_networkx():
    for g in corpus():
        ours = write_graph6(g)
        theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert ours == theirs


def test_graph6_decoding_matches_networkx():
    for g in corpus():
        s = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert parse_graph6(s) == g


def test_distances_match_networkx():
    for i in range(10):
        g = random_graph(9, "1/4", seed=4000 + i)
        ours = distances(g)
        theirs = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
        for u in range(g.n):
            for v in range(g.n):
                want = theirs.get(u, {}).get(v, math.inf)
                assert ours[u][v] == want


def test_bipartiteness_matches_networkx():
    for g in corpus():
        assert (bipartition(g) is not None) == nx.is_bipartite(to_nx(g))


def test_unlabeled_tree_enumeration_matches_networkx():
    for n in range(2, 10):
        ours = {canonical_form(t) for t in enumerate_trees(n, dedup=True)}
        theirs = {canonical_form(from_nx(t)) for t in nx.nonisomorphic_trees(n)}
        assert ours == theirs


def test_unlabeled_graph_counts_match_networkx_atlas():
    # the graph atlas holds all unlabeled graphs on up to 7 vertices
    from networkx.generators.atlas import graph_atlas_g

    by_order = {}
    for h in graph_atlas_g()[1:]:
        by_order.setdefault(h.number_of_nodes(), 0)
        by_order[h.number_of_nodes()] += 1
    for n in range(1, 6):
        assert sum(1 for _ in enumerate_graphs(n, dedup=True)) == by_order[n]
