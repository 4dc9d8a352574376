"""Product formulas, bounds and the witnesses that certify them.

Run with:  python demos/03_product_bounds.py
"""

from eopack import (
    alpha,
    beta,
    complete,
    cycle,
    lex,
    nu_i,
    path,
    rho_eo,
    rooted_product,
    star,
    verify_witness,
)
from eopack.constructions import (
    box_eop_witness,
    direct_eop_witness,
    direct_im_witness,
    lex_im_witness,
    rooted_im_witness,
)

print("Lexicographic: nu_I(G lex H) = alpha(G) nu_I(H) (H with an edge)")
for g, h, gname, hname in [
    (path(4), path(3), "P_4", "P_3"),
    (cycle(5), star(3), "C_5", "K_1,3"),
    (complete(3), path(5), "K_3", "P_5"),
]:
    p = lex(g, h)
    exact = nu_i(p.graph).value
    print(f"  {gname} lex {hname}: exact {exact} = {alpha(g).value} * {nu_i(h).value}")
    _, w = lex_im_witness(g, h)
    assert len(w) == exact and verify_witness(p.graph, w, "induced_matching")

print()
print("Direct product: nu_I(G x H) >= 2 nu_I(G) nu_I(H) via doubled diagonals")
for g, h, gname, hname in [(path(4), path(4), "P_4", "P_4"), (cycle(5), path(3), "C_5", "P_3")]:
    p, w = direct_im_witness(g, h)
    exact = nu_i(p.graph).value
    print(f"  {gname} x {hname}: witness {len(w)}, exact {exact}")
    assert verify_witness(p.graph, w, "induced_matching") and exact >= len(w)

print()
print("Direct product EOP: K_4 x K_3 attains the degree-weighted bound")
p, w = direct_eop_witness(complete(4), complete(3))
print(f"  witness {len(w)}, exact {rho_eo(p.graph).value}")

print()
print("Cartesian stars: rho_eo(K_1,2 box K_1,3) = 6 = rs")
p, w = box_eop_witness(star(2), star(3), "cartesian")
print(f"  witness {len(w)}, exact {rho_eo(p.graph).value}, valid {verify_witness(p.graph, w, 'eop')}")

print()
print("Rooted product: nu_I lands in a three-value set")
g, h = cycle(4), star(2)
for root in range(h.n):
    val = nu_i(rooted_product(g, h, root).graph).value
    n, nh = g.n, nu_i(h).value
    allowed = sorted({n * nh - beta(g).value, n * nh, n * nh + nu_i(g).value})
    print(f"  C_4 rooted K_1,2 at {root}: {val}, allowed {allowed}")
    _, w = rooted_im_witness(g, h, root)
    assert val >= len(w) >= n * nh - beta(g).value
