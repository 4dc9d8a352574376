import pytest

from eopack.graph import (
    Graph,
    GraphError,
    canonical_form,
    canonical_graph,
    complete,
    enumerate_graphs,
    enumerate_trees,
    is_connected,
    random_graph,
    spider,
)


def test_labeled_counts():
    assert sum(1 for _ in enumerate_graphs(3)) == 8
    assert sum(1 for _ in enumerate_graphs(1)) == 1
    assert sum(1 for _ in enumerate_graphs(4)) == 64


def test_unlabeled_counts_small():
    expected = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34}
    for n, want in expected.items():
        assert sum(1 for _ in enumerate_graphs(n, dedup=True)) == want


def test_unlabeled_count_n6():
    assert sum(1 for _ in enumerate_graphs(6, dedup=True)) == 156


def test_enumeration_range_checks():
    with pytest.raises(GraphError):
        list(enumerate_graphs(7))
    with pytest.raises(GraphError):
        list(enumerate_graphs(8, dedup=True))


def test_canonical_form_matches_orbit_minimum():
    # dedup reps are orbit minima; every labeled graph must canonize onto one
    for n in (3, 4):
        reps = {canonical_form(g) for g in enumerate_graphs(n, dedup=True)}
        for g in enumerate_graphs(n):
            assert canonical_form(g) in reps
        assert len(reps) == len(list(enumerate_graphs(n, dedup=True)))


def test_canonical_form_is_invariant_under_relabeling():
    g = spider(3)
    perm = [3, 5, 0, 6, 1, 4, 2]
    relabeled = Graph.from_edges(7, [(perm[u], perm[v]) for u, v in g.edges])
    assert canonical_form(relabeled) == canonical_form(g)
    assert canonical_graph(relabeled) == canonical_graph(g)


def test_labeled_tree_counts():
    assert sum(1 for _ in enumerate_trees(2)) == 1
    assert sum(1 for _ in enumerate_trees(4)) == 16
    assert sum(1 for _ in enumerate_trees(5)) == 125


def test_prufer_trees_are_trees():
    for n in (4, 5, 6):
        for t in enumerate_trees(n):
            assert t.n == n and t.m == n - 1 and is_connected(t)


def test_unlabeled_tree_counts():
    expected = {2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47}
    for n, want in expected.items():
        assert sum(1 for _ in enumerate_trees(n, dedup=True)) == want


def test_tree_dedup_agrees_with_prufer_dedup():
    for n in (4, 5, 6):
        via_prufer = {canonical_form(t) for t in enumerate_trees(n)}
        via_reps = {canonical_form(t) for t in enumerate_trees(n, dedup=True)}
        assert via_prufer == via_reps


def test_random_graph_extremes():
    assert random_graph(6, 0, seed=9).m == 0
    assert random_graph(6, 1, seed=9) == complete(6)


def test_random_graph_deterministic():
    a = random_graph(8, "1/2", seed=1)
    b = random_graph(8, "1/2", seed=1)
    assert a.edges == b.edges
    c = random_graph(8, "1/2", seed=2)
    assert a.edges != c.edges


def test_random_graph_probability_range():
    with pytest.raises(GraphError):
        random_graph(4, 2, seed=0)


def test_canonical_form_matches_brute_force_permutation_minimum():
    from itertools import permutations

    from eopack.graph import _pack_bits

    def brute_min(g):
        best = None
        for perm in permutations(range(g.n)):
            relabeled = Graph.from_edges(
                g.n, [(perm[u], perm[v]) for u, v in g.edges]
            )
            packed = _pack_bits(relabeled)
            if best is None or packed < best:
                best = packed
        return best

    for seed in range(12):
        g = random_graph(6, "1/2", seed=500 + seed)
        assert canonical_form(g) == brute_min(g)
    for seed in range(6):
        g = random_graph(5, "1/4", seed=600 + seed)
        assert canonical_form(g) == brute_min(g)
