"""Constructors for the graph families the library works with.

Index layouts are fixed and documented per constructor so that witnesses
are reproducible across runs.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .bitset import bits
from .errors import InvalidSizeError
from .graph import Graph


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidSizeError(f"complete graph needs n >= 1, got {n}")
    return Graph(n, combinations(range(n), 2))


def complete_multipartite(part_sizes: Sequence[int]) -> Graph:
    """Parts occupy consecutive index blocks in the given order."""
    if not part_sizes or any(s < 1 for s in part_sizes):
        raise InvalidSizeError(f"part sizes must be nonempty and >= 1, got {part_sizes!r}")
    bounds = [0]
    for s in part_sizes:
        bounds.append(bounds[-1] + s)
    n = bounds[-1]
    edges = []
    for i in range(len(part_sizes)):
        for j in range(i + 1, len(part_sizes)):
            edges.extend(
                (u, v)
                for u in range(bounds[i], bounds[i + 1])
                for v in range(bounds[j], bounds[j + 1])
            )
    return Graph(n, edges)


def star(leaves: int) -> Graph:
    """K_{1,leaves}: center 0, leaves 1..leaves."""
    if leaves < 1:
        raise InvalidSizeError(f"star needs >= 1 leaf, got {leaves}")
    return Graph(leaves + 1, ((0, v) for v in range(1, leaves + 1)))


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidSizeError(f"path needs n >= 1, got {n}")
    return Graph(n, ((v, v + 1) for v in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidSizeError(f"cycle needs n >= 3, got {n}")
    return Graph(n, ((v, (v + 1) % n) for v in range(n)))


def crown(n: int) -> Graph:
    """K_{n,n} minus a perfect matching: a_i = i, b_i = n+i, a_i ~ b_j iff i != j."""
    if n < 2:
        raise InvalidSizeError(f"crown needs n >= 2, got {n}")
    return Graph(2 * n, ((i, n + j) for i in range(n) for j in range(n) if i != j))


def line_graph(g: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """Line graph plus its vertex labels (the edges of g, lexicographic).

    Vertex k of the result is labels[k]; two vertices are adjacent iff the
    labelled edges share an endpoint.
    """
    labels = list(g.edges())
    if not labels:
        raise InvalidSizeError("line graph needs a graph with at least one edge")
    lg_edges = [
        (i, j)
        for i, j in combinations(range(len(labels)), 2)
        if set(labels[i]) & set(labels[j])
    ]
    return Graph(len(labels), lg_edges), labels


def line_of_complete(n: int) -> tuple[Graph, list[tuple[int, int]]]:
    """Line graph of K_n; vertices are the 2-subsets of 0..n-1."""
    return line_graph(complete_graph(n))


def direct_product(g: Graph, h: Graph) -> Graph:
    """Tensor product: (a,b) ~ (c,d) iff ac in E(g) and bd in E(h).

    Vertex (a, b) gets index a*|V(h)| + b.
    """
    nh = h.n
    edges = []
    for a, c in g.edges():
        for b, d in h.edges():
            edges.append((a * nh + b, c * nh + d))
            edges.append((a * nh + d, c * nh + b))
    return Graph(g.n * nh, edges)


def bipartite_double_cover(g: Graph) -> Graph:
    """Direct product with K_2, laid out as v_i' = i, v_i'' = n+i."""
    return Graph(2 * g.n, ((u, g.n + v) for u in range(g.n) for v in bits(g.adj[u])))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Vertices of h are shifted up by |V(g)|."""
    shifted = [m << g.n for m in h.adj]
    return Graph.from_adjacency(list(g.adj) + shifted)
