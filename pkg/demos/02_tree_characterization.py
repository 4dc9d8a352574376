"""Which trees have equal induced matching and edge open packing numbers?

Exactly P_1, P_2, and the spider assemblies: disjoint spiders (stars with
every edge subdivided once, at least two legs each) glued by extra edges that
all touch spider centers, with two untouched leaves per spider.  This script
sweeps every unlabeled tree on up to 8 vertices, compares the solver equality
with the structural recognizer, and then builds random members to show the
certificate round trip.

Run with:  python demos/02_tree_characterization.py
"""

from eopack import (
    build_conflict_graph,
    enumerate_optimal,
    enumerate_trees,
    generate_family_f,
    nu_i,
    nu_i_tree,
    recognize_family_f,
    rho_eo,
    verify_spider_partition,
    write_graph6,
)

print("n  trees  members  (equality always matches recognition)")
for n in range(2, 9):
    total = members = 0
    for t in enumerate_trees(n, dedup=True):
        total += 1
        part = recognize_family_f(t)
        equal = nu_i(t).value == rho_eo(t).value
        assert (part is not None) == equal, write_graph6(t)
        assert nu_i_tree(t).value == nu_i(t).value
        if part is not None:
            members += 1
    print(f"{n}  {total:5d}  {members:7d}")

print()
print("A random assembly with leg counts (3, 2, 2):")
tree, cert = generate_family_f([3, 2, 2], seed=11)
print(f"  g6 = {write_graph6(tree)}")
print(f"  spiders at centers {[c for c, _ in cert.spiders]}, extra edges {list(cert.extra_edges)}")
print(f"  certificate valid: {verify_spider_partition(tree, cert)}")
print(f"  nu_I = rho_eo = {nu_i(tree).value} (= 3+2+2)")

optima = enumerate_optimal(build_conflict_graph(tree, "induced_matching"))
pendant = tuple(sorted(tree.edge_index[e] for e in cert.pendant_edges()))
print(f"  maximum induced matchings: {len(optima)} (unique), pendant edges: {optima[0] == pendant}")
