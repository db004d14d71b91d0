"""Slow, obviously-correct baselines.

Everything here recomputes legality and domination from the definitions
using plain Python sets, on purpose: the fast bitmask solvers are checked
against these, so the two sides must not share code.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterable, Iterator

from .errors import BruteForceLimitError, IsolatedVertexError
from .graph import Graph

BRUTE_GRUNDY_MAX_N = 10
BRUTE_GAMMA_T_MAX_N = 20
ENUMERATION_MAX_N = 7


def _neighbor_sets(g: Graph) -> list[set[int]]:
    return [{w for w in range(g.n) if g.adj[v] >> w & 1} for v in range(g.n)]


def _check_no_isolated(nbrs: list[set[int]]) -> None:
    if not nbrs or any(not s for s in nbrs):
        raise IsolatedVertexError("total domination is undefined: empty graph or isolated vertex")


def brute_grundy(g: Graph) -> int:
    """Maximum total dominating sequence length, by enumerating every legal
    sequence explicitly (no memoization)."""
    if g.n > BRUTE_GRUNDY_MAX_N:
        raise BruteForceLimitError(f"brute_grundy guard is n <= {BRUTE_GRUNDY_MAX_N}")
    nbrs = _neighbor_sets(g)
    _check_no_isolated(nbrs)
    everything = set(range(g.n))
    best = 0

    def extend(used: list[int], covered: set[int]) -> None:
        nonlocal best
        if covered == everything and len(used) > best:
            best = len(used)
        for v in range(g.n):
            if v not in used and not nbrs[v] <= covered:
                used.append(v)
                extend(used, covered | nbrs[v])
                used.pop()

    extend([], set())
    return best


def brute_gamma_t(g: Graph) -> int:
    """Minimum total dominating set size, scanning subsets by increasing size."""
    if g.n > BRUTE_GAMMA_T_MAX_N:
        raise BruteForceLimitError(f"brute_gamma_t guard is n <= {BRUTE_GAMMA_T_MAX_N}")
    nbrs = _neighbor_sets(g)
    _check_no_isolated(nbrs)
    everything = set(range(g.n))
    for size in range(1, g.n + 1):
        for subset in combinations(range(g.n), size):
            covered: set[int] = set()
            for v in subset:
                covered |= nbrs[v]
            if covered == everything:
                return size
    raise AssertionError("unreachable: the whole vertex set totally dominates")


def edge_pairs(n: int) -> list[tuple[int, int]]:
    """The C(n,2) vertex pairs in lexicographic order; bit i of an edge mask
    in enumerate_labeled_graphs corresponds to edge_pairs(n)[i]."""
    return list(combinations(range(n), 2))


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    pairs = edge_pairs(n)
    adj = [0] * n
    for i in range(len(pairs)):
        if mask >> i & 1:
            u, v = pairs[i]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph.from_adjacency(adj)


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """All 2^C(n,2) labeled graphs on n vertices, in edge-mask order."""
    if n > ENUMERATION_MAX_N:
        raise BruteForceLimitError(f"labeled enumeration guard is n <= {ENUMERATION_MAX_N}")
    pairs = edge_pairs(n)
    for mask in range(1 << len(pairs)):
        yield graph_from_edge_mask(n, mask)


def filter_graphs(
    stream: Iterable[Graph],
    *,
    no_isolated: bool = False,
    connected: bool = False,
    false_twin_free: bool = False,
    chordal: bool = False,
) -> Iterator[Graph]:
    """Lazily apply the requested structural predicates to a graph stream."""
    from . import graph as ops

    for g in stream:
        if no_isolated and any(a == 0 for a in g.adj):
            continue
        if connected and not ops.is_connected(g):
            continue
        if false_twin_free and not ops.is_false_twin_free(g):
            continue
        if chordal and not ops.is_chordal(g):
            continue
        yield g


def brute_girth(g: Graph) -> int | None:
    """Shortest cycle length by checking every vertex subset for an induced
    cycle-with-chords-allowed; None for forests."""
    best = None
    for size in range(3, g.n + 1):
        if best is not None:
            return best
        for verts in combinations(range(g.n), size):
            if _has_spanning_cycle(g, verts):
                best = size
                break
    return best


def _has_spanning_cycle(g: Graph, verts: tuple[int, ...]) -> bool:
    """Is there a cycle visiting exactly ``verts``? (chords permitted)"""
    if len(verts) < 3:
        return False
    first, rest = verts[0], verts[1:]
    for perm in permutations(rest):
        walk = (first, *perm)
        ok = g.adj[walk[-1]] >> first & 1 and all(
            g.adj[walk[i]] >> walk[i + 1] & 1 for i in range(len(walk) - 1)
        )
        if ok:
            return True
    return False


def brute_is_chordal(g: Graph) -> bool:
    """Chordality from the definition: every induced cycle has length 3."""
    for size in range(4, g.n + 1):
        for verts in combinations(range(g.n), size):
            inside = 0
            for v in verts:
                inside |= 1 << v
            degs = [(g.adj[v] & inside).bit_count() for v in verts]
            if all(d == 2 for d in degs) and _has_spanning_cycle(g, verts):
                return False
    return True
