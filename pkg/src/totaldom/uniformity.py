"""Uniformity verdicts and the structure theorems as executable predicates.

A graph is total k-uniform when its total domination number and Grundy
total domination number are both k, i.e. every total dominating sequence
has length exactly k.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from typing import Optional

from .domination import DEFAULT_MEMO_BYTES, _solve_gamma_t, _solve_grundy
from .errors import HypothesisViolatedError, NotAnEdgeError
from .families import bipartite_double_cover
from .graph import (
    Graph,
    connected_components,
    girth,
    induced_subgraph,
    is_bipartite,
    is_complete_multipartite,
    is_connected,
    is_false_twin_free,
    is_regular,
    remove_vertices,
)


@dataclass(frozen=True)
class UniformityVerdict:
    """Outcome of a uniformity decision.

    ``gamma_t``/``grundy`` are None exactly when total domination is
    undefined (empty graph or isolated vertex present).
    """

    gamma_t: Optional[int]
    grundy: Optional[int]

    @property
    def defined(self) -> bool:
        return self.gamma_t is not None

    @property
    def k(self) -> Optional[int]:
        """The uniform length, or None when not uniform or undefined."""
        if self.defined and self.gamma_t == self.grundy:
            return self.gamma_t
        return None

    @property
    def uniform(self) -> bool:
        return self.k is not None

    @property
    def kind(self) -> str:
        if not self.defined:
            return "undefined"
        return "uniform" if self.uniform else "not_uniform"


def total_uniformity(
    g: Graph,
    *,
    time_limit: Optional[float] = None,
    memo_limit_bytes: int = DEFAULT_MEMO_BYTES,
) -> UniformityVerdict:
    """Decide uniformity from the two solvers.

    Both numbers are additive over connected components, so each component
    is solved on its own; the sums equal whole-graph solving.
    """
    if g.n == 0 or any(a == 0 for a in g.adj):
        return UniformityVerdict(None, None)
    deadline = None if time_limit is None else time.monotonic() + time_limit
    gamma_total = 0
    grundy_total = 0
    for comp in connected_components(g):
        sub, _ = induced_subgraph(g, comp)
        gamma_total += _solve_gamma_t(sub, deadline)[0]
        grundy_total += _solve_grundy(sub, deadline, memo_limit_bytes)[0]
    return UniformityVerdict(gamma_total, grundy_total)


def reduction(g: Graph, u: int, v: int) -> tuple[Graph, dict[int, int]]:
    """Delete N[u] | N[v] for an edge uv; total k-uniform graphs drop to
    total (k-2)-uniform under this operation."""
    if not g.has_edge(u, v):
        raise NotAnEdgeError(f"({u}, {v}) is not an edge")
    drop = g.closed_neighborhood(u) | g.closed_neighborhood(v)
    return remove_vertices(g, drop)


def g_k_membership(
    g: Graph,
    *,
    time_limit: Optional[float] = None,
    memo_limit_bytes: int = DEFAULT_MEMO_BYTES,
) -> Optional[int]:
    """k when the graph is false twin-free and total k-uniform, else None."""
    if not is_false_twin_free(g):
        return None
    return total_uniformity(g, time_limit=time_limit, memo_limit_bytes=memo_limit_bytes).k


def chordal_uniform_classification(g: Graph) -> bool:
    """The structural side of the chordal characterization: every component
    is complete multipartite with at most one part of size > 1.

    For graphs without isolated vertices this holds iff the graph is total
    k-uniform and chordal, with k twice the component count.
    """
    for comp in connected_components(g):
        sub, _ = induced_subgraph(g, comp)
        parts = is_complete_multipartite(sub)
        if parts is None:
            return False
        if sum(1 for p in parts if p.bit_count() > 1) > 1:
            return False
    return True


class GirthBranch(enum.Enum):
    STARS_UNION = "stars-union"
    GIRTH_AT_MOST_6 = "girth-at-most-6"


def _is_star(g: Graph) -> bool:
    if g.n < 2:
        return False
    degs = sorted(g.adj[v].bit_count() for v in range(g.n))
    return degs[:-1] == [1] * (g.n - 1) and degs[-1] == g.n - 1


def girth_dichotomy(g: Graph, k: int) -> GirthBranch:
    """Which branch of the girth alternative a total k-uniform graph satisfies:
    a disjoint union of k/2 stars, or girth at most 6."""
    comps = connected_components(g)
    if 2 * len(comps) == k:
        stars = True
        for comp in comps:
            sub, _ = induced_subgraph(g, comp)
            if not _is_star(sub):
                stars = False
                break
        if stars:
            return GirthBranch.STARS_UNION
    cyc = girth(g)
    if cyc is not None and cyc <= 6:
        return GirthBranch.GIRTH_AT_MOST_6
    raise HypothesisViolatedError(
        "neither branch holds; the graph cannot be total k-uniform for this k"
    )


def regularity_theorem_check(
    g: Graph,
    *,
    time_limit: Optional[float] = None,
    memo_limit_bytes: int = DEFAULT_MEMO_BYTES,
) -> bool:
    """The implication 'connected, false twin-free and total k-uniform implies
    regular', evaluated on this graph (vacuously true when a hypothesis fails)."""
    if not is_connected(g) or not is_false_twin_free(g):
        return True
    verdict = total_uniformity(g, time_limit=time_limit, memo_limit_bytes=memo_limit_bytes)
    if not verdict.uniform:
        return True
    return is_regular(g) is not None


def double_cover_uniformity(
    g: Graph,
    *,
    time_limit: Optional[float] = None,
    memo_limit_bytes: int = DEFAULT_MEMO_BYTES,
) -> Optional[int]:
    """Uniform length of the bipartite double cover of a connected,
    non-bipartite, total k-uniform graph (the contract value is 2k)."""
    if not is_connected(g):
        raise HypothesisViolatedError("the graph must be connected")
    if is_bipartite(g) is not None:
        raise HypothesisViolatedError("the graph must be non-bipartite")
    verdict = total_uniformity(g, time_limit=time_limit, memo_limit_bytes=memo_limit_bytes)
    if not verdict.uniform:
        raise HypothesisViolatedError("the graph must be total k-uniform")
    cover = bipartite_double_cover(g)
    return total_uniformity(
        cover, time_limit=time_limit, memo_limit_bytes=memo_limit_bytes
    ).k
