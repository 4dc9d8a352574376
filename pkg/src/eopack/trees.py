"""Tree algorithms: induced matching DP and the spider-assembly family.

A spider is a star with every edge subdivided once.  The family recognized
here consists of trees obtained from disjoint spiders (each with at least two
legs) by adding connecting extra edges such that every extra edge touches a
spider center and every spider keeps at least two leaves of tree-degree 1.
Together with P_1 and P_2 these are exactly the trees whose induced matching
number equals their edge open packing number, which is what the harness
checks against the exact solvers.
"""

from __future__ import annotations

import sys
from collections import defaultdict
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph, GraphError, SplitMix64, is_connected
from .invariants import InvariantResult


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


@dataclass(frozen=True)
class SpiderPartition:
    """Certificate of family membership.

    ``spiders`` is a tuple of ``(center, ((support, leaf), ...))`` entries
    partitioning the vertex set; ``extra_edges`` are the tree edges in no
    spider.  ``trivial`` marks the P_1/P_2 outcome, where both tuples are
    empty.
    """

    spiders: tuple
    extra_edges: tuple
    trivial: bool = False

    @property
    def leg_counts(self) -> tuple:
        return tuple(len(legs) for _, legs in self.spiders)

    def pendant_edges(self) -> tuple:
        return tuple(
            (min(s, l), max(s, l)) for _, legs in self.spiders for s, l in legs
        )


def verify_spider_partition(t: Graph, part: SpiderPartition) -> bool:
    """Validate a certificate against the family conditions, from scratch."""
    if part.trivial:
        return is_tree(t) and t.n <= 2
    seen: set = set()
    spider_edges = set()
    centers = set()
    for center, legs in part.spiders:
        if len(legs) < 2:
            return False
        centers.add(center)
        group = {center}
        for s, l in legs:
            if not (t.has_edge(center, s) and t.has_edge(s, l)):
                return False
            group.update((s, l))
            spider_edges.add((min(center, s), max(center, s)))
            spider_edges.add((min(s, l), max(s, l)))
        if len(group) != 1 + 2 * len(legs) or group & seen:
            return False
        seen |= group
        inside = sum(1 for u, v in t.edges if u in group and v in group)
        if inside != 2 * len(legs):
            return False
        free = sum(1 for _, l in legs if t.degree(l) == 1)
        if free < 2:
            return False
    if len(seen) != t.n:
        return False
    extras = tuple(e for e in t.edges if e not in spider_edges)
    if extras != tuple(part.extra_edges):
        return False
    if len(extras) != len(part.spiders) - 1:
        return False
    return all(u in centers or v in centers for u, v in extras)


# ---------------------------------------------------------------------------
# linear induced-matching DP
# ---------------------------------------------------------------------------

def nu_i_tree(t: Graph) -> InvariantResult:
    """Exact induced matching number of a tree by rooted dynamic programming.

    Per-vertex states: A = vertex unmatched and no child matched (parent may
    match into it), B = vertex unmatched (parent is matched elsewhere),
    C = unconstrained.
    """
    if not is_tree(t):
        raise GraphError("input is not a tree")
    n = t.n
    if n == 1:
        return InvariantResult("nu_i_tree", 0, (), 0)

    parent = [-1] * n
    order = [0]
    seen = 1
    for v in order:
        for u in t.neighbors(v):
            if not (seen >> u) & 1:
                seen |= 1 << u
                parent[u] = v
                order.append(u)
    children = [[] for _ in range(n)]
    for v in order[1:]:
        children[parent[v]].append(v)

    A = [0] * n
    B = [0] * n
    C = [0] * n
    match_child = [-1] * n  # C-state choice; -1 means all children take C
    for v in reversed(order):
        ch = children[v]
        sum_b = sum(B[c] for c in ch)
        sum_c = sum(C[c] for c in ch)
        A[v] = sum_b
        B[v] = sum_c
        best, pick = sum_c, -1
        for c in ch:
            cand = 1 + A[c] + sum_b - B[c]
            if cand > best:
                best, pick = cand, c
        C[v] = best
        match_child[v] = pick

    chosen = []
    stack = [(0, "C")]
    while stack:
        v, state = stack.pop()
        if state == "A":
            stack.extend((c, "B") for c in children[v])
        elif state == "B":
            stack.extend((c, "C") for c in children[v])
        else:
            pick = match_child[v]
            if pick == -1:
                stack.extend((c, "C") for c in children[v])
            else:
                chosen.append((min(v, pick), max(v, pick)))
                stack.append((pick, "A"))
                stack.extend((c, "B") for c in children[v] if c != pick)
    witness = tuple(sorted(t.edge_index[e] for e in chosen))
    return InvariantResult("nu_i_tree", C[0], witness, n)


# ---------------------------------------------------------------------------
# family recognition
# ---------------------------------------------------------------------------

def recognize_family_f(t: Graph) -> Optional[SpiderPartition]:
    """Certificate-producing membership test.

    Backtracks over role assignments (center / support / leaf), visiting
    vertices by ascending degree so tree leaves force their legs early.
    Edges between assigned vertices are classified incrementally and an edge
    that is neither a spider edge nor a center-touching extra edge fails the
    branch at once.
    """
    if not is_tree(t):
        raise GraphError("input is not a tree")
    n = t.n
    if n <= 2:
        return SpiderPartition((), (), trivial=True)
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n + 100))

    role = [None] * n
    cen = [-1] * n  # supports: owning center
    lf = [-1] * n  # supports: owned leaf
    order = sorted(range(n), key=lambda v: (t.degree(v), v))

    def edge_ok(u: int, v: int) -> bool:
        ru, rv = role[u], role[v]
        if ru == "c" and rv == "s" and cen[v] == u:
            return True
        if rv == "c" and ru == "s" and cen[u] == v:
            return True
        if ru == "s" and rv == "l" and lf[u] == v:
            return True
        if rv == "s" and ru == "l" and lf[v] == u:
            return True
        return ru == "c" or rv == "c"

    def edges_ok(u: int) -> bool:
        return all(
            role[w] is None or edge_ok(u, w) for w in t.neighbors(u)
        )

    def center_feasible(c: int) -> bool:
        pool = 0
        for w in t.neighbors(c):
            if role[w] is None or (role[w] == "s" and cen[w] == c):
                pool += 1
        return pool >= 2

    def finalize() -> Optional[SpiderPartition]:
        supports_of = defaultdict(list)
        for v in range(n):
            if role[v] == "s":
                supports_of[cen[v]].append(v)
        spiders = []
        for v in range(n):
            if role[v] != "c":
                continue
            legs = supports_of.get(v, [])
            if len(legs) < 2:
                return None
            if sum(1 for s in legs if t.degree(lf[s]) == 1) < 2:
                return None
            spiders.append((v, tuple((s, lf[s]) for s in sorted(legs))))
        spider_edges = set()
        for center, legs in spiders:
            for s, l in legs:
                spider_edges.add((min(center, s), max(center, s)))
                spider_edges.add((min(s, l), max(s, l)))
        extras = tuple(e for e in t.edges if e not in spider_edges)
        return SpiderPartition(tuple(spiders), extras)

    def solve(idx: int) -> Optional[SpiderPartition]:
        while idx < n and role[order[idx]] is not None:
            idx += 1
        if idx == n:
            return finalize()
        u = order[idx]
        if t.degree(u) >= 2:
            # center
            role[u] = "c"
            if center_feasible(u) and edges_ok(u):
                res = solve(idx + 1)
                if res is not None:
                    return res
            role[u] = None
            # support with chosen center and leaf
            nbrs = t.neighbors(u)
            for c in nbrs:
                if role[c] in ("s", "l"):
                    continue
                new_center = role[c] is None
                if new_center and t.degree(c) < 2:
                    continue
                for l in nbrs:
                    if l == c or role[l] is not None:
                        continue
                    role[u], cen[u], lf[u] = "s", c, l
                    role[l] = "l"
                    if new_center:
                        role[c] = "c"
                    ok = edges_ok(u) and edges_ok(l)
                    if ok and new_center:
                        ok = edges_ok(c) and center_feasible(c)
                    if ok:
                        res = solve(idx + 1)
                        if res is not None:
                            return res
                    role[u], cen[u], lf[u] = None, -1, -1
                    role[l] = None
                    if new_center:
                        role[c] = None
        # leaf with chosen support and its center
        for s in t.neighbors(u):
            if role[s] is not None or t.degree(s) < 2:
                continue
            for c in t.neighbors(s):
                if c == u or role[c] in ("s", "l"):
                    continue
                new_center = role[c] is None
                if new_center and t.degree(c) < 2:
                    continue
                role[u] = "l"
                role[s], cen[s], lf[s] = "s", c, u
                if new_center:
                    role[c] = "c"
                ok = edges_ok(u) and edges_ok(s)
                if ok and new_center:
                    ok = edges_ok(c) and center_feasible(c)
                if ok:
                    res = solve(idx + 1)
                    if res is not None:
                        return res
                role[u] = None
                role[s], cen[s], lf[s] = None, -1, -1
                if new_center:
                    role[c] = None
        return None

    return solve(0)


# ---------------------------------------------------------------------------
# family generation
# ---------------------------------------------------------------------------

def generate_family_f(
    ks: Sequence[int], wiring: Optional[Sequence] = None, seed: int = 0
):
    """Build a family member from spider leg counts plus connecting edges.

    Spider i occupies a contiguous block: center first, then support/leaf
    pairs per leg.  ``wiring`` is a list of vertex pairs joining the spiders
    into a tree (each touching a center, leaving two untouched leaves per
    spider); when omitted, a seeded random wiring is drawn, rejecting
    attachments that would break the two-free-leaves condition.
    Returns ``(tree, certificate)``.
    """
    ks = list(ks)
    if not ks or any(k < 2 for k in ks):
        raise GraphError("every spider needs at least 2 legs")
    offsets = []
    edges = []
    base = 0
    for k in ks:
        offsets.append(base)
        for leg in range(k):
            s, l = base + 1 + 2 * leg, base + 2 + 2 * leg
            edges.append((base, s))
            edges.append((s, l))
        base += 2 * k + 1
    nverts = base
    nspiders = len(ks)
    centers = set(offsets)

    def spider_of(v: int) -> int:
        for i in range(nspiders - 1, -1, -1):
            if v >= offsets[i]:
                return i
        raise GraphError(f"vertex {v} out of range")

    leaves_of = [
        {offsets[i] + 2 + 2 * leg for leg in range(ks[i])} for i in range(nspiders)
    ]

    if wiring is None:
        rng = SplitMix64(seed)
        touched = [set() for _ in range(nspiders)]
        wiring = []
        for i in range(1, nspiders):
            j = rng.below(i)
            pick = None
            for _ in range(30):
                if rng.below(2) == 0:
                    u, v = offsets[i], offsets[j] + rng.below(2 * ks[j] + 1)
                else:
                    u, v = offsets[j], offsets[i] + rng.below(2 * ks[i] + 1)
                bad = False
                for w in (u, v):
                    sw = spider_of(w)
                    if w in leaves_of[sw]:
                        if len(leaves_of[sw] - touched[sw] - {w}) < 2:
                            bad = True
                if not bad:
                    pick = (u, v)
                    break
            if pick is None:
                pick = (offsets[i], offsets[j])
            u, v = pick
            for w in (u, v):
                sw = spider_of(w)
                if w in leaves_of[sw]:
                    touched[sw].add(w)
            wiring.append((min(u, v), max(u, v)))
    else:
        wiring = [(min(u, v), max(u, v)) for u, v in wiring]

    if len(wiring) != nspiders - 1:
        raise GraphError("wiring must contain exactly one edge per added spider")
    comp = list(range(nspiders))

    def find(i: int) -> int:
        while comp[i] != i:
            comp[i] = comp[comp[i]]
            i = comp[i]
        return i

    for u, v in wiring:
        if not (0 <= u < nverts and 0 <= v < nverts):
            raise GraphError(f"wiring edge ({u},{v}) out of range")
        if u not in centers and v not in centers:
            raise GraphError(f"wiring edge ({u},{v}) touches no center")
        su, sv = spider_of(u), spider_of(v)
        ru, rv = find(su), find(sv)
        if ru == rv:
            raise GraphError(f"wiring edge ({u},{v}) closes a cycle")
        comp[ru] = rv

    tree = Graph.from_edges(nverts, edges + list(wiring))
    for i in range(nspiders):
        free = sum(1 for l in leaves_of[i] if tree.degree(l) == 1)
        if free < 2:
            raise GraphError(f"spider {i} keeps fewer than two untouched leaves")

    spiders = tuple(
        (
            offsets[i],
            tuple(
                (offsets[i] + 1 + 2 * leg, offsets[i] + 2 + 2 * leg)
                for leg in range(ks[i])
            ),
        )
        for i in range(nspiders)
    )
    cert = SpiderPartition(spiders, tuple(sorted(wiring)))
    assert verify_spider_partition(tree, cert)
    return tree, cert
