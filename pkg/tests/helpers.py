"""Shared test utilities: graph isomorphism search and invariant helpers."""

from __future__ import annotations

from typing import Optional

from totaldom.bitset import bits
from totaldom.graph import Graph


def _refined_colors(g: Graph, rounds: int = 3) -> list[tuple]:
    """Stable vertex invariants: degree refined by neighbor color multisets."""
    colors: list = [g.adj[v].bit_count() for v in range(g.n)]
    for _ in range(rounds):
        colors = [
            (colors[v], tuple(sorted(colors[w] for w in bits(g.adj[v]))))
            for v in range(g.n)
        ]
    return colors


def find_isomorphism(g: Graph, h: Graph) -> Optional[list[int]]:
    """A vertex bijection g->h preserving adjacency, or None.

    Backtracking over vertices in decreasing-degree order, pruned by
    refined color classes; fine for the graph sizes used in tests.
    """
    if g.n != h.n or g.edge_count != h.edge_count:
        return None
    gc = _refined_colors(g)
    hc = _refined_colors(h)
    if sorted(gc) != sorted(hc):
        return None
    order = sorted(range(g.n), key=lambda v: (-g.adj[v].bit_count(), v))
    mapping = [-1] * g.n
    used = [False] * h.n

    def extend(i: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        for w in range(h.n):
            if used[w] or gc[v] != hc[w]:
                continue
            if any(
                (g.adj[v] >> order[j] & 1) != (h.adj[w] >> mapping[order[j]] & 1)
                for j in range(i)
            ):
                continue
            mapping[v] = w
            used[w] = True
            if extend(i + 1):
                return True
            mapping[v] = -1
            used[w] = False
        return False

    return mapping if extend(0) else None


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def relabel(g: Graph, mapping: list[int]) -> Graph:
    """Apply a vertex bijection (list: old -> new) to a graph."""
    adj = [0] * g.n
    for u, v in g.edges():
        adj[mapping[u]] |= 1 << mapping[v]
        adj[mapping[v]] |= 1 << mapping[u]
    return Graph.from_adjacency(adj)
