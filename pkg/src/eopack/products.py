"""Graph products with fixed coordinate bookkeeping.

Every product vertex (a, b) is encoded as ``a * hn + b`` where ``hn`` is the
per-fiber block size, so witnesses built by the construction module address
product vertices without lookup tables.  For the corona the block also holds
the host vertex: fiber slot 0 is the host, slots 1..hn-1 the private copy.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError

PRODUCT_KINDS = ("cartesian", "direct", "strong", "lex")


@dataclass(frozen=True)
class ProductGraph:
    """A product with its factor orders and the (a, b) <-> a*hn+b bijection."""

    graph: Graph
    gn: int
    hn: int

    def encode(self, a: int, b: int) -> int:
        return a * self.hn + b

    def decode(self, v: int) -> tuple:
        return divmod(v, self.hn)

    def h_fiber(self, a: int) -> list:
        return [self.encode(a, b) for b in range(self.hn)]

    def g_fiber(self, b: int) -> list:
        return [self.encode(a, b) for a in range(self.gn)]


def product(kind: str, g: Graph, h: Graph) -> ProductGraph:
    """One of the four standard products of nonempty factors."""
    if kind not in PRODUCT_KINDS:
        raise GraphError(f"unknown product kind {kind!r}")
    if g.n == 0 or h.n == 0:
        raise GraphError("product factors must be nonempty")
    gn, hn = g.n, h.n
    edges = []
    if kind in ("cartesian", "strong"):
        for a, b in g.edges:
            for x in range(hn):
                edges.append((a * hn + x, b * hn + x))
        for a in range(gn):
            for x, y in h.edges:
                edges.append((a * hn + x, a * hn + y))
    if kind in ("direct", "strong"):
        for a, b in g.edges:
            for x, y in h.edges:
                edges.append((a * hn + x, b * hn + y))
                edges.append((a * hn + y, b * hn + x))
    if kind == "lex":
        for a, b in g.edges:
            for x in range(hn):
                for y in range(hn):
                    edges.append((a * hn + x, b * hn + y))
        for a in range(gn):
            for x, y in h.edges:
                edges.append((a * hn + x, a * hn + y))
    return ProductGraph(Graph.from_edges(gn * hn, edges), gn, hn)


def cartesian(g: Graph, h: Graph) -> ProductGraph:
    return product("cartesian", g, h)


def direct(g: Graph, h: Graph) -> ProductGraph:
    return product("direct", g, h)


def strong(g: Graph, h: Graph) -> ProductGraph:
    return product("strong", g, h)


def lex(g: Graph, h: Graph) -> ProductGraph:
    return product("lex", g, h)


def rooted_product(g: Graph, h: Graph, root: int) -> ProductGraph:
    """A copy of h glued onto every vertex of g by identifying the root.

    Fiber i is a copy of h; the root slices across fibers induce g.
    """
    if not 0 <= root < h.n:
        raise GraphError(f"root {root} out of range for factor of order {h.n}")
    gn, hn = g.n, h.n
    edges = []
    for a in range(gn):
        for x, y in h.edges:
            edges.append((a * hn + x, a * hn + y))
    for a, b in g.edges:
        edges.append((a * hn + root, b * hn + root))
    return ProductGraph(Graph.from_edges(gn * hn, edges), gn, hn)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two sides; h is shifted by g.n."""
    edges = list(g.edges)
    edges.extend((g.n + x, g.n + y) for x, y in h.edges)
    edges.extend((a, g.n + x) for a in range(g.n) for x in range(h.n))
    return Graph.from_edges(g.n + h.n, edges)


def corona(g: Graph, h: Graph) -> ProductGraph:
    """Every vertex of g joined to all vertices of a private copy of h.

    Built as the rooted product of g with K_1 joined to h, rooted at the K_1
    vertex, so fiber slot 0 of block i is the host vertex i.
    """
    cone = join(Graph(1, [0]), h)
    return rooted_product(g, cone, 0)
