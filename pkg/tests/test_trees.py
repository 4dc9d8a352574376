import pytest

from eopack.graph import (
    Graph,
    GraphError,
    cycle,
    enumerate_trees,
    path,
    spider,
    star,
    subdivided_star,
)
from eopack.invariants import (
    build_conflict_graph,
    enumerate_optimal,
    nu_i,
    rho_eo,
    verify_witness,
)
from eopack.trees import (
    generate_family_f,
    is_tree,
    nu_i_tree,
    recognize_family_f,
    verify_spider_partition,
)


def test_nu_i_tree_examples():
    assert nu_i_tree(path(7)).value == 2
    assert nu_i_tree(spider(4)).value == 4
    assert nu_i_tree(star(5)).value == 1


def test_nu_i_tree_rejects_non_trees():
    with pytest.raises(GraphError):
        nu_i_tree(cycle(4))
    with pytest.raises(GraphError):
        nu_i_tree(Graph(2, [0, 0]))


def test_nu_i_tree_matches_solver_on_all_small_trees():
    from eopack.harness import _trees_upto

    for t in _trees_upto(9):
        if t.n < 2:
            continue
        res = nu_i_tree(t)
        assert res.value == nu_i(t).value
        assert len(res.witness) == res.value
        assert verify_witness(t, res.witness, "induced_matching")


def test_path_formula_via_tree_dp():
    for n in range(1, 21):
        assert nu_i_tree(path(n)).value == (n + 1) // 3


def test_recognize_trivial_and_small():
    assert recognize_family_f(path(1)).trivial
    assert recognize_family_f(path(2)).trivial
    part = recognize_family_f(path(5))
    assert part is not None and not part.trivial
    assert part.leg_counts == (2,)
    assert verify_spider_partition(path(5), part)


def test_recognize_p7_absent():
    assert recognize_family_f(path(7)) is None


def test_recognize_two_spiders_joined_at_centers():
    tree, cert = generate_family_f([2, 2], wiring=[(0, 5)])
    part = recognize_family_f(tree)
    assert part is not None
    assert len(part.spiders) == 2 and len(part.extra_edges) == 1
    assert verify_spider_partition(tree, part)
    assert nu_i(tree).value == rho_eo(tree).value == 4


def test_recognize_rejects_non_tree():
    with pytest.raises(GraphError):
        recognize_family_f(cycle(6))


def test_generate_single_spider():
    tree, cert = generate_family_f([3])
    assert tree == spider(3)
    assert cert.leg_counts == (3,)
    assert cert.extra_edges == ()


def test_generate_validates_wiring():
    with pytest.raises(GraphError, match="no center"):
        generate_family_f([2, 2], wiring=[(1, 6)])
    with pytest.raises(GraphError, match="cycle|one edge"):
        generate_family_f([2, 2], wiring=[(0, 5), (0, 6)])
    with pytest.raises(GraphError, match="untouched leaves"):
        generate_family_f([2, 2], wiring=[(0, 7)])  # hits a leaf of a 2-leg spider...


def test_generate_c2_leaf_wiring_allowed_with_three_legs():
    # wiring a center into a leaf of a 3-leg spider keeps two untouched leaves
    tree, cert = generate_family_f([3, 2], wiring=[(7, 2)])
    assert verify_spider_partition(tree, cert)
    assert recognize_family_f(tree) is not None


def test_generate_random_round_trip():
    for seed in range(8):
        tree, cert = generate_family_f([2, 2, 2], seed=seed)
        assert is_tree(tree)
        assert verify_spider_partition(tree, cert)
        part = recognize_family_f(tree)
        assert part is not None
        assert verify_spider_partition(tree, part)


def test_family_value_and_unique_optimum():
    for ks, seed in [([2, 2], 0), ([3, 2], 1), ([2, 2, 2], 7)]:
        tree, cert = generate_family_f(ks, seed=seed)
        assert nu_i(tree).value == sum(ks)
        optima = enumerate_optimal(build_conflict_graph(tree, "induced_matching"))
        assert len(optima) == 1
        pendant = tuple(sorted(tree.edge_index[e] for e in cert.pendant_edges()))
        assert optima[0] == pendant


def test_characterization_small_trees():
    # family membership (or P1/P2) iff the two invariants agree
    for n in range(2, 8):
        for t in enumerate_trees(n, dedup=True):
            part = recognize_family_f(t)
            equal = nu_i(t).value == rho_eo(t).value
            assert (part is not None) == equal


def test_subdivided_star_equality_cases():
    # equality holds exactly for P_2, P_5 and spiders with >= 3 legs
    cases = {
        (1,): True,  # P_2
        (4,): True,  # P_5
        (2, 2): True,  # P_5 again
        (1, 3): True,  # P_5 rooted off-center
        (2,): False,  # P_3
        (3,): False,  # P_4
        (1, 1): False,  # P_3
        (2, 2, 2): True,  # spider
        (1, 2, 2): False,
        (2, 2, 2, 2): True,
        (1, 1, 2): False,
        (3, 2, 2): False,
    }
    for lens, want in cases.items():
        g = subdivided_star(list(lens))
        assert (nu_i(g).value == rho_eo(g).value) == want, lens


def test_recognizer_agrees_with_solvers_on_random_trees():
    # beyond the exhaustive <= 9 corpus: seeded random labeled trees
    from eopack.graph import SplitMix64, _prufer_tree

    rng = SplitMix64(77)
    for _ in range(150):
        seq = [rng.below(12) for _ in range(10)]
        t = _prufer_tree(seq, 12)
        part = recognize_family_f(t)
        equal = nu_i(t).value == rho_eo(t).value
        assert (part is not None) == equal
        if part is not None:
            assert verify_spider_partition(t, part)


def test_recognizer_scales_to_thirty_vertices():
    tree, cert = generate_family_f([3, 3, 3, 3], seed=5)
    part = recognize_family_f(tree)
    assert part is not None and verify_spider_partition(tree, part)
    # hanging one extra leaf off a spider leaf breaks the two-free-leaves rule
    n = tree.n
    near = Graph.from_edges(n + 1, list(tree.edges) + [(2, n)])
    assert recognize_family_f(near) is None
    assert recognize_family_f(path(30)) is None
