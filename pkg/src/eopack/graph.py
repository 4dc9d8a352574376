"""Immutable bitset graphs: graph6 codec, named generators, exhaustive enumeration.

Vertices are dense integers 0..n-1 and every vertex set in this package is a
Python int used as a bitset.  Graphs are immutable after construction, so they
can be shared freely between solvers and enumerated corpora can be cached.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

_G6_HEADER = ">>graph6<<"
_MASK64 = (1 << 64) - 1


class GraphError(ValueError):
    """Malformed encoding or invalid generator parameters."""


class Graph:
    """Immutable simple graph: order, adjacency bitsets, canonical edge list.

    ``adj[v]`` is the neighbor bitset of ``v``; ``edges`` is the sorted tuple
    of pairs ``(u, v)`` with ``u < v``; ``edge_index`` maps each such pair to
    its position in ``edges``.
    """

    __slots__ = ("n", "adj", "edges", "edge_index")

    def __init__(self, n: int, adj: Sequence[int]):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        if len(adj) != n:
            raise GraphError("adjacency list length does not match vertex count")
        full = (1 << n) - 1
        edges = []
        for v in range(n):
            row = adj[v]
            if row & ~full:
                raise GraphError(f"neighbor out of range at vertex {v}")
            if row & (1 << v):
                raise GraphError(f"loop at vertex {v}")
            rest = row >> (v + 1)
            while rest:
                low = rest & -rest
                u = v + 1 + low.bit_length() - 1
                if not (adj[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
                edges.append((v, u))
                rest ^= low
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(adj))
        object.__setattr__(self, "edges", tuple(sorted(edges)))
        object.__setattr__(
            self, "edge_index", {e: i for i, e in enumerate(self.edges)}
        )

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple:
        return tuple(bits(self.adj[v]))

    def min_degree(self) -> int:
        return min((self.degree(v) for v in range(self.n)), default=0)

    def max_degree(self) -> int:
        return max((self.degree(v) for v in range(self.n)), default=0)

    def without_edges(self, drop) -> "Graph":
        """Copy with the given edges removed; edges absent from the graph are an error."""
        dropset = {(min(u, v), max(u, v)) for u, v in drop}
        for u, v in dropset:
            if not self.has_edge(u, v):
                raise GraphError(f"edge ({u},{v}) not present")
        keep = [e for e in self.edges if e not in dropset]
        return Graph.from_edges(self.n, keep)

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# graph6 codec (headerless, standard 6-bit encoding)
# ---------------------------------------------------------------------------

def _pair_index(i: int, j: int) -> int:
    # column-major upper triangle: x(0,1), x(0,2), x(1,2), x(0,3), ...
    return j * (j - 1) // 2 + i


def _pack_bits(g: Graph) -> int:
    """Adjacency bitstring of g packed into an int, first pair most significant."""
    nbits = g.n * (g.n - 1) // 2
    out = 0
    for u, v in g.edges:
        out |= 1 << (nbits - 1 - _pair_index(u, v))
    return out


def _graph_from_bits(n: int, packed: int) -> Graph:
    nbits = n * (n - 1) // 2
    adj = [0] * n
    p = 0
    for j in range(1, n):
        for i in range(j):
            if (packed >> (nbits - 1 - p)) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            p += 1
    return Graph(n, adj)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (optional ``>>graph6<<`` header tolerated)."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise GraphError(f"non-ASCII character at byte {exc.start}") from None
    if not data:
        raise GraphError("empty graph6 string")

    def val(k: int) -> int:
        c = data[k]
        if not 63 <= c <= 126:
            raise GraphError(f"out-of-range character at byte {k}")
        return c - 63

    pos = 0
    if data[0] != 126:  # '~'
        n = val(0)
        pos = 1
    else:
        if len(data) < 2:
            raise GraphError("truncated length field at byte 1")
        if data[1] != 126:
            if len(data) < 4:
                raise GraphError(f"truncated length field at byte {len(data)}")
            n = (val(1) << 12) | (val(2) << 6) | val(3)
            pos = 4
        else:
            if len(data) < 8:
                raise GraphError(f"truncated length field at byte {len(data)}")
            n = 0
            for k in range(2, 8):
                n = (n << 6) | val(k)
            pos = 8

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise GraphError(f"truncated edge data at byte {len(data)}")
    if len(data) - pos > nbytes:
        raise GraphError(f"trailing bytes at byte {pos + nbytes}")
    packed = 0
    for k in range(nbytes):
        packed = (packed << 6) | val(pos + k)
    pad = 6 * nbytes - nbits
    if pad and packed & ((1 << pad) - 1):
        raise GraphError(f"nonzero padding bits at byte {pos + nbytes - 1}")
    return _graph_from_bits(n, packed >> pad)


def write_graph6(g: Graph) -> str:
    """Encode g as a headerless graph6 string."""
    n = g.n
    if n >= 1 << 36:
        raise GraphError("graph too large for graph6")
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    else:
        head = [126, 126] + [((n >> (6 * k)) & 63) + 63 for k in range(5, -1, -1)]
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    packed = _pack_bits(g) << (6 * nbytes - nbits)
    body = [((packed >> (6 * (nbytes - 1 - k))) & 63) + 63 for k in range(nbytes)]
    return bytes(head + body).decode("ascii")


def iter_graph6(text: str) -> Iterator[Graph]:
    """Parse a newline-separated multi-graph file body."""
    for line in text.splitlines():
        line = line.strip()
        if line:
            yield parse_graph6(line)


# ---------------------------------------------------------------------------
# named generators
# ---------------------------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise GraphError("complete bipartite needs positive sides")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def subdivided_star(lengths: Sequence[int]) -> Graph:
    """Center vertex 0 joined to one leaf of each of k disjoint paths.

    Path i occupies a consecutive vertex block; the center attaches to the
    first vertex of each block.
    """
    if not lengths or any(l < 1 for l in lengths):
        raise GraphError("subdivided star needs positive path lengths")
    edges = []
    base = 1
    for l in lengths:
        edges.append((0, base))
        edges.extend((base + t, base + t + 1) for t in range(l - 1))
        base += l
    return Graph.from_edges(base, edges)


def star(r: int) -> Graph:
    if r < 1:
        raise GraphError("star needs r >= 1")
    return subdivided_star([1] * r)


def spider(k: int) -> Graph:
    if k < 1:
        raise GraphError("spider needs k >= 1")
    return subdivided_star([2] * k)


def hypercube(n: int) -> Graph:
    """n-fold Cartesian power of an edge: vertices are n-bit masks."""
    if n < 1:
        raise GraphError("hypercube needs n >= 1")
    edges = []
    for v in range(1 << n):
        for b in range(n):
            u = v | (1 << b)
            if u != v:
                edges.append((v, u))
    return Graph.from_edges(1 << n, edges)


def figure1(r: int) -> Graph:
    """Chain of 2r+1 gadget-decorated vertices on 4(2r+1) vertices.

    The chain vertices t_0..t_2r form a P3 followed by r-1 disjoint P2
    segments (t_0t_1, t_1t_2, then t_3t_4, t_5t_6, ...).  Each t_i carries a
    pendant 4-cycle t_i - a_i - x_i - y_i - t_i whose vertex opposite t_i is
    x_i.  Deleting the 2r+1 edges x_i y_i (see :func:`figure1_xy_edges`)
    drops the edge open packing number from 4r+2 to 3r+2.
    """
    if r < 1:
        raise GraphError("figure1 needs r >= 1")
    k = 2 * r + 1
    edges = [(0, 1), (1, 2)]
    edges.extend((2 * j + 1, 2 * j + 2) for j in range(1, r))
    for i in range(k):
        a, y, x = k + 3 * i, k + 3 * i + 1, k + 3 * i + 2
        edges.extend([(i, a), (i, y), (a, x), (y, x)])
    return Graph.from_edges(4 * k, edges)


def figure1_xy_edges(r: int) -> list:
    """The deletable x_i y_i edges of :func:`figure1` (bottom to right corner)."""
    k = 2 * r + 1
    return [(k + 3 * i + 1, k + 3 * i + 2) for i in range(k)]


@dataclass(frozen=True)
class GeneratorSpec:
    """Named graph family with parameters, e.g. ``GeneratorSpec("path", (7,))``."""

    family: str
    params: tuple


_FAMILIES = {
    "path": (1, lambda p: path(p[0])),
    "cycle": (1, lambda p: cycle(p[0])),
    "complete": (1, lambda p: complete(p[0])),
    "complete_bipartite": (2, lambda p: complete_bipartite(p[0], p[1])),
    "star": (1, lambda p: star(p[0])),
    "subdivided_star": (None, lambda p: subdivided_star(list(p))),
    "spider": (1, lambda p: spider(p[0])),
    "hypercube": (1, lambda p: hypercube(p[0])),
    "figure1": (1, lambda p: figure1(p[0])),
}


def generate(spec: GeneratorSpec) -> Graph:
    if spec.family not in _FAMILIES:
        raise GraphError(f"unknown family {spec.family!r}")
    arity, fn = _FAMILIES[spec.family]
    params = tuple(spec.params)
    if arity is not None and len(params) != arity:
        raise GraphError(f"family {spec.family!r} takes {arity} parameter(s)")
    if not params or any((not isinstance(p, int)) or p < 1 for p in params):
        raise GraphError(f"family {spec.family!r} needs positive integer parameters")
    return fn(params)


# ---------------------------------------------------------------------------
# metrics
# ---------------------------------------------------------------------------

def _bfs_dist(g: Graph, src: int) -> list:
    dist = [math.inf] * g.n
    dist[src] = 0
    seen = 1 << src
    frontier = 1 << src
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        for v in bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def distances(g: Graph) -> list:
    """All-pairs hop distances; unreachable pairs are ``math.inf``."""
    return [_bfs_dist(g, v) for v in range(g.n)]


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = 1 << 0
    frontier = 1 << 0
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
    return seen == (1 << g.n) - 1


def bipartition(g: Graph) -> Optional[tuple]:
    """Two-coloring ``(A1, A2)`` or None if an odd cycle exists.

    Within each connected component the side holding its lowest-index vertex
    goes to A1, so the answer is deterministic.
    """
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        frontier = [root]
        while frontier:
            nxt = []
            for v in frontier:
                for u in bits(g.adj[v]):
                    if color[u] == -1:
                        color[u] = color[v] ^ 1
                        nxt.append(u)
                    elif color[u] == color[v]:
                        return None
            frontier = nxt
    a1 = tuple(v for v in range(g.n) if color[v] == 0)
    a2 = tuple(v for v in range(g.n) if color[v] == 1)
    return a1, a2


# ---------------------------------------------------------------------------
# canonical form and enumeration
# ---------------------------------------------------------------------------

def canonical_form(g: Graph) -> int:
    """Lexicographically least adjacency bitstring over all vertex orderings.

    Branch-and-bound over partial orderings: placing vertex v at position j
    appends j bits (adjacency of v to the already placed vertices, oldest
    first); branches whose prefix exceeds the best complete string are cut.
    Intended for small graphs (n <= ~10).
    """
    n = g.n
    nbits = n * (n - 1) // 2
    if n <= 1:
        return 0
    adj = g.adj
    best = (1 << nbits) - 1  # all-ones string is an upper bound for any graph
    placed = [0] * n

    def extend(depth: int, used: int, prefix: int, done: int):
        nonlocal best
        if depth == n:
            if prefix < best:
                best = prefix
            return
        cands = []
        for v in range(n):
            if (used >> v) & 1:
                continue
            word = 0
            row = adj[v]
            for i in range(depth):
                word = (word << 1) | ((row >> placed[i]) & 1)
            cands.append((word, v))
        cands.sort()
        for word, v in cands:
            new_prefix = (prefix << depth) | word
            new_done = done + depth
            if new_prefix > (best >> (nbits - new_done)):
                continue
            placed[depth] = v
            extend(depth + 1, used | (1 << v), new_prefix, new_done)
        placed[depth] = 0

    extend(0, 0, 0, 0)
    return best


def canonical_graph(g: Graph) -> Graph:
    return _graph_from_bits(g.n, canonical_form(g))


def _perm_bit_table(n: int, perm: Sequence[int]) -> list:
    """For each pair position p, the position of the image pair under perm."""
    nbits = n * (n - 1) // 2
    table = [0] * nbits
    p = 0
    for j in range(1, n):
        for i in range(j):
            a, b = perm[i], perm[j]
            if a > b:
                a, b = b, a
            table[p] = _pair_index(a, b)
            p += 1
    return table


def _orbit_min_masks(n: int) -> Iterator[int]:
    """Minimum packed bitstring of every isomorphism orbit, ascending.

    Closes each orbit under two generators of the symmetric group; the least
    element of an orbit equals the canonical form of its members.
    """
    nbits = n * (n - 1) // 2
    if n == 1:
        yield 0
        return
    gens = [_perm_bit_table(n, [1, 0] + list(range(2, n)))]
    if n > 2:
        gens.append(_perm_bit_table(n, list(range(1, n)) + [0]))

    def apply(table, mask):
        out = 0
        rest = mask
        while rest:
            low = rest & -rest
            p = nbits - low.bit_length()
            out |= 1 << (nbits - 1 - table[p])
            rest ^= low
        return out

    seen = bytearray(1 << nbits)
    for mask in range(1 << nbits):
        if seen[mask]:
            continue
        yield mask
        stack = [mask]
        seen[mask] = 1
        while stack:
            cur = stack.pop()
            for table in gens:
                img = apply(table, cur)
                if not seen[img]:
                    seen[img] = 1
                    stack.append(img)


def enumerate_graphs(n: int, dedup: bool = False) -> Iterator[Graph]:
    """All labeled graphs on n vertices, or one representative per class."""
    if dedup:
        if not 1 <= n <= 7:
            raise GraphError("dedup enumeration supports 1 <= n <= 7")
        for mask in _orbit_min_masks(n):
            yield _graph_from_bits(n, mask)
    else:
        if not 1 <= n <= 6:
            raise GraphError("labeled enumeration supports 1 <= n <= 6")
        for mask in range(1 << (n * (n - 1) // 2)):
            yield _graph_from_bits(n, mask)


def _prufer_tree(seq: Sequence[int], n: int) -> Graph:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    ptr = 0
    while degree[ptr] != 1:
        ptr += 1
    leaf = ptr
    edges = []
    for x in seq:
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while degree[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return Graph.from_edges(n, edges)


def enumerate_trees(n: int, dedup: bool = False) -> Iterator[Graph]:
    """All labeled trees on n vertices, or one representative per class.

    The labeled stream decodes every length-(n-2) sequence over 0..n-1.  The
    deduped stream grows representatives by leaf attachment instead (every
    unlabeled tree arises from a smaller one by adding a leaf), which avoids
    canonicalizing all n^(n-2) labeled trees.
    """
    if not 2 <= n <= 9:
        raise GraphError("tree enumeration supports 2 <= n <= 9")
    if not dedup:
        if n == 2:
            yield path(2)
            return
        seq = [0] * (n - 2)
        while True:
            yield _prufer_tree(seq, n)
            k = n - 3
            while k >= 0 and seq[k] == n - 1:
                seq[k] = 0
                k -= 1
            if k < 0:
                return
            seq[k] += 1
    else:
        reps = [path(2)]
        for size in range(3, n + 1):
            grown = {}
            for t in reps:
                for v in range(t.n):
                    bigger = Graph.from_edges(size, list(t.edges) + [(v, size - 1)])
                    key = canonical_form(bigger)
                    if key not in grown:
                        grown[key] = bigger
            reps = [grown[k] for k in sorted(grown)]
        for t in reps:
            yield t


# ---------------------------------------------------------------------------
# seeded random graphs
# ---------------------------------------------------------------------------

def _splitmix64(state: int) -> tuple:
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


class SplitMix64:
    """Deterministic 64-bit stream; identical output for a seed on every platform."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next64(self) -> int:
        self._state, out = _splitmix64(self._state)
        return out

    def below(self, bound: int) -> int:
        """Uniform-ish value in [0, bound) via fixed-point multiply."""
        return (self.next64() * bound) >> 64


def random_graph(n: int, p, seed: int) -> Graph:
    """Edge-independent random graph; each pair drawn from one splitmix64 stream."""
    frac = Fraction(p)
    if not 0 <= frac <= 1:
        raise GraphError("edge probability must lie in [0, 1]")
    threshold = (frac.numerator << 64) // frac.denominator
    rng = SplitMix64(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.next64() < threshold:
                edges.append((u, v))
    return Graph.from_edges(n, edges)
