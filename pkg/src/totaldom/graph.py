"""Immutable bitset-backed simple graphs and their structural predicates.

Vertices are 0..n-1.  A ``Graph`` stores one adjacency bitmask per vertex
(``adj[v]`` is the open neighborhood N(v)); all predicates below are pure
functions of that representation.  Tie-breaking is deterministic
everywhere: lowest vertex index first, lexicographic over tuples.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator, Optional, Sequence

from .bitset import bits, lowest, vset
from .errors import SelfLoopError, VertexIndexError


class Graph:
    """Undirected simple graph; immutable after construction."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise VertexIndexError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n: int = n
        self.adj: tuple[int, ...] = tuple(adj)

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> "Graph":
        """Wrap precomputed adjacency masks (trusted: symmetric, loop-free)."""
        g = cls.__new__(cls)
        g.n = len(adj)
        g.adj = tuple(adj)
        return g

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def check_vertex(self, v: int) -> int:
        if not (0 <= v < self.n):
            raise VertexIndexError(f"vertex {v} out of range for n={self.n}")
        return v

    def neighborhood(self, v: int) -> int:
        """Open neighborhood N(v) as a bitmask."""
        return self.adj[self.check_vertex(v)]

    def closed_neighborhood(self, v: int) -> int:
        """Closed neighborhood N[v] = N(v) | {v}."""
        return self.adj[self.check_vertex(v)] | (1 << v)

    def degree(self, v: int) -> int:
        return self.adj[self.check_vertex(v)].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            for off in bits(rest):
                yield u, u + 1 + off

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def isolated_vertices(g: Graph) -> int:
    """Bitmask of vertices with empty neighborhood."""
    return vset(v for v in range(g.n) if not g.adj[v])


def induced_subgraph(g: Graph, keep: int) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the vertex set ``keep``; returns (graph, old->new map)."""
    kept = list(bits(keep))
    relabel = {old: new for new, old in enumerate(kept)}
    adj = [0] * len(kept)
    for new, old in enumerate(kept):
        for w in bits(g.adj[old] & keep):
            adj[new] |= 1 << relabel[w]
    return Graph.from_adjacency(adj), relabel


def remove_vertices(g: Graph, drop: int) -> tuple[Graph, dict[int, int]]:
    """Delete the vertex set ``drop``; survivors are re-indexed in increasing order.

    The returned map sends old indices of surviving vertices to new ones.
    """
    if drop & ~g.full_mask:
        raise VertexIndexError("vertex set to remove contains indices >= n")
    return induced_subgraph(g, g.full_mask & ~drop)


def connected_components(g: Graph) -> list[int]:
    """Vertex-set masks of the components, ordered by lowest member."""
    seen = 0
    comps = []
    while seen != g.full_mask:
        comp = 1 << lowest(g.full_mask & ~seen)
        frontier = comp
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= g.adj[v]
            frontier = grow & ~comp
            comp |= grow
        comps.append(comp)
        seen |= comp
    return comps


def is_connected(g: Graph) -> bool:
    return g.n >= 1 and len(connected_components(g)) == 1


def is_bipartite(g: Graph) -> Optional[tuple[int, int]]:
    """Two-coloring (X, Y) as masks, or None if an odd cycle exists.

    The lowest-indexed vertex of each component goes to X.
    """
    x = y = 0
    for comp in connected_components(g):
        start = lowest(comp)
        x |= 1 << start
        frontier, colored = 1 << start, 1 << start
        side = 0
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= g.adj[v]
            if side == 0:
                y |= grow & ~colored
            else:
                x |= grow & ~colored
            frontier = grow & ~colored
            colored |= grow
            side ^= 1
    for v in bits(x):
        if g.adj[v] & x:
            return None
    for v in bits(y):
        if g.adj[v] & y:
            return None
    return x, y


def is_regular(g: Graph) -> Optional[int]:
    """The common degree, or None if degrees differ (or the graph is empty)."""
    if g.n == 0:
        return None
    degs = {a.bit_count() for a in g.adj}
    return degs.pop() if len(degs) == 1 else None


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle; None for forests.

    BFS from every start vertex; a non-tree edge seen at depths d(u), d(w)
    witnesses a closed walk of length d(u)+d(w)+1, and the minimum over all
    starts is exactly the girth.
    """
    best: Optional[int] = None
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        for u in queue:
            if best is not None and 2 * dist[u] >= best:
                break
            for w in bits(g.adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    cand = dist[u] + dist[w] + 1
                    if best is None or cand < best:
                        best = cand
    return best


def perfect_elimination_ordering(g: Graph) -> Optional[tuple[int, ...]]:
    """A perfect elimination ordering if the graph is chordal, else None.

    Maximum-cardinality search (ties to the lowest index) produces a
    candidate ordering; the standard later-neighbor check validates it.
    """
    n = g.n
    weight = [0] * n
    visited = 0
    visit_order = []
    for _ in range(n):
        v = max((w for w in range(n) if not visited >> w & 1),
                key=lambda w: (weight[w], -w))
        visit_order.append(v)
        visited |= 1 << v
        for w in bits(g.adj[v] & ~visited):
            weight[w] += 1
    order = tuple(reversed(visit_order))
    rank = {v: i for i, v in enumerate(order)}
    later = [0] * n
    acc = 0
    for v in reversed(order):
        later[rank[v]] = acc
        acc |= 1 << v
    for i, v in enumerate(order):
        s = g.adj[v] & later[i]
        if s:
            u = min(bits(s), key=lambda w: rank[w])
            if s & ~((1 << u) | g.adj[u]):
                return None
    return order


def is_chordal(g: Graph) -> bool:
    """True iff every cycle of length >= 4 has a chord."""
    return perfect_elimination_ordering(g) is not None


def false_twin_partition(g: Graph) -> list[int]:
    """Maximal classes of vertices with identical open neighborhoods.

    Classes are masks, ordered by their lowest member; singletons included.
    """
    by_nbhd: dict[int, int] = {}
    for v in range(g.n):
        by_nbhd[g.adj[v]] = by_nbhd.get(g.adj[v], 0) | (1 << v)
    return sorted(by_nbhd.values(), key=lowest)


def is_false_twin_free(g: Graph) -> bool:
    """No two distinct vertices share the same open neighborhood."""
    return all(c.bit_count() == 1 for c in false_twin_partition(g))


def collapse_false_twins(g: Graph) -> Graph:
    """Keep only the lowest-indexed vertex of each false-twin class."""
    keep = vset(lowest(c) for c in false_twin_partition(g))
    return induced_subgraph(g, keep)[0]


def _cycle_order(g: Graph, verts: tuple[int, ...]) -> Optional[tuple[int, ...]]:
    """Order ``verts`` along the induced cycle, or None if they induce no cycle.

    Every vertex must have exactly two neighbors inside the set and the set
    must be connected.  The result starts at the lowest vertex and proceeds
    toward its lower-indexed cycle neighbor.
    """
    inside = vset(verts)
    local = {v: g.adj[v] & inside for v in verts}
    if any(m.bit_count() != 2 for m in local.values()):
        return None
    start = min(verts)
    seq = [start]
    prev, cur = -1, start
    for _ in range(len(verts) - 1):
        a, b = sorted(bits(local[cur]))
        nxt = a if a != prev else b
        seq.append(nxt)
        prev, cur = cur, nxt
    if len(set(seq)) != len(verts) or not local[cur] >> start & 1:
        return None
    return tuple(seq)


def has_induced_c5_or_c6(g: Graph) -> Optional[tuple[int, ...]]:
    """A vertex tuple inducing a 5-cycle or 6-cycle, in cycle order, or None.

    Searches 5-subsets then 6-subsets, lexicographically.
    """
    for size in (5, 6):
        for verts in combinations(range(g.n), size):
            cyc = _cycle_order(g, verts)
            if cyc is not None:
                return cyc
    return None


def is_complete_multipartite(g: Graph) -> Optional[list[int]]:
    """Parts (as masks, ordered by lowest member) if u~v iff different parts.

    Equivalently the complement is a disjoint union of cliques; the parts
    are the complement's components.
    """
    full = g.full_mask
    co = Graph.from_adjacency([full & ~g.adj[v] & ~(1 << v) for v in range(g.n)])
    parts = connected_components(co)
    for part in parts:
        for v in bits(part):
            if (co.adj[v] & part) != part & ~(1 << v):
                return None
    return parts
