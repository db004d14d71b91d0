"""Total domination and Grundy total domination: validators and exact solvers.

A sequence of distinct vertices is legal when every entry after the first
has a neighbor not yet covered by the open neighborhoods of the earlier
entries; it is total dominating when it is legal and those neighborhoods
cover every vertex.  The solvers are exact and deterministic: witnesses
use the lowest-index / lexicographic tie-break.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .bitset import bits
from .errors import (
    BruteForceLimitError,
    DuplicateVertexError,
    IllegalPrefixError,
    IsolatedVertexError,
)
from .graph import Graph
from .kernels import kernel_for, memo_entries

DEFAULT_MEMO_BYTES = 2 << 30  # 2 GiB
OPEN_LENGTHS_MAX_N = 12


def require_solvable(g: Graph) -> None:
    """Raise unless the graph is nonempty and free of isolated vertices."""
    if g.n == 0:
        raise IsolatedVertexError("total domination is undefined for the empty graph")
    if any(a == 0 for a in g.adj):
        raise IsolatedVertexError("total domination is undefined: isolated vertex present")


def _deadline(time_limit: Optional[float]) -> Optional[float]:
    return None if time_limit is None else time.monotonic() + time_limit


def is_dominating_set(g: Graph, members: int) -> bool:
    """Every vertex outside ``members`` has a neighbor inside it."""
    closed = 0
    for v in bits(members):
        g.check_vertex(v)
        closed |= g.adj[v] | (1 << v)
    return closed == g.full_mask


def is_total_dominating_set(g: Graph, members: int) -> bool:
    """The open neighborhoods of ``members`` cover every vertex."""
    if g.n == 0:
        raise IsolatedVertexError("total domination is undefined for the empty graph")
    covered = 0
    for v in bits(members):
        g.check_vertex(v)
        covered |= g.adj[v]
    return covered == g.full_mask


def _footprint_walk(g: Graph, seq: Sequence[int]) -> Optional[int]:
    """Final footprint of a legal sequence, or None if the sequence is illegal.

    Raises on out-of-range or repeated vertices.
    """
    seen = 0
    fp = 0
    for i, v in enumerate(seq):
        g.check_vertex(v)
        if seen >> v & 1:
            raise DuplicateVertexError(f"vertex {v} repeats in the sequence")
        seen |= 1 << v
        if i > 0 and not g.adj[v] & ~fp:
            return None
        fp |= g.adj[v]
    return fp


def is_legal_sequence(g: Graph, seq: Sequence[int]) -> bool:
    return _footprint_walk(g, seq) is not None


def is_total_dominating_sequence(g: Graph, seq: Sequence[int]) -> bool:
    if g.n == 0:
        raise IsolatedVertexError("total domination is undefined for the empty graph")
    fp = _footprint_walk(g, seq)
    return fp is not None and fp == g.full_mask


def total_domination_number(
    g: Graph, *, time_limit: Optional[float] = None
) -> tuple[int, int]:
    """Exact total domination number with its lexicographically least witness set."""
    require_solvable(g)
    return _solve_gamma_t(g, _deadline(time_limit))


def _solve_gamma_t(g: Graph, deadline: Optional[float]) -> tuple[int, int]:
    value, witness = kernel_for(g.n).gamma_t(g.adj, deadline)
    return value, witness


def grundy_total_domination_number(
    g: Graph,
    *,
    time_limit: Optional[float] = None,
    memo_limit_bytes: int = DEFAULT_MEMO_BYTES,
) -> tuple[int, tuple[int, ...]]:
    """Exact Grundy total domination number with a witness sequence."""
    require_solvable(g)
    return _solve_grundy(g, _deadline(time_limit), memo_limit_bytes)


def _solve_grundy(
    g: Graph, deadline: Optional[float], memo_limit_bytes: int
) -> tuple[int, tuple[int, ...]]:
    module = kernel_for(g.n)
    value, seq = module.grundy(g.adj, memo_entries(module, memo_limit_bytes), deadline)
    return value, tuple(seq)


def exists_tds_of_length(
    g: Graph,
    length: int,
    *,
    time_limit: Optional[float] = None,
    memo_limit_bytes: int = DEFAULT_MEMO_BYTES,
) -> Optional[tuple[int, ...]]:
    """A total dominating sequence of exactly ``length``, or None.

    Independent exact-length search; it does not assume the interpolation
    property of sequence lengths.
    """
    require_solvable(g)
    return _solve_tds_of_length(g, length, _deadline(time_limit), memo_limit_bytes)


def _solve_tds_of_length(
    g: Graph, length: int, deadline: Optional[float], memo_limit_bytes: int
) -> Optional[tuple[int, ...]]:
    if length < 0 or length > g.n:
        return None
    module = kernel_for(g.n, length=length)
    seq = module.tds_of_length(g.adj, length, memo_entries(module, memo_limit_bytes), deadline)
    return None if seq is None else tuple(seq)


def extend_to_total_dominating_sequence(
    g: Graph, prefix: Iterable[int] = ()
) -> tuple[int, ...]:
    """Greedily complete a legal prefix, always playing the lowest playable
    vertex, until the footprint covers the whole graph."""
    require_solvable(g)
    seq = list(prefix)
    fp = _footprint_walk(g, seq)
    if fp is None:
        raise IllegalPrefixError(f"prefix {seq!r} is not a legal sequence")
    while fp != g.full_mask:
        for v in range(g.n):
            if g.adj[v] & ~fp:
                seq.append(v)
                fp |= g.adj[v]
                break
    return tuple(seq)


def even_length_tds(
    g: Graph,
    *,
    time_limit: Optional[float] = None,
    memo_limit_bytes: int = DEFAULT_MEMO_BYTES,
) -> tuple[int, ...]:
    """A total dominating sequence of even length (one always exists)."""
    require_solvable(g)
    deadline = _deadline(time_limit)
    value, _ = _solve_gamma_t(g, deadline)
    length = value + (value & 1)
    while length <= g.n:
        seq = _solve_tds_of_length(g, length, deadline, memo_limit_bytes)
        if seq is not None:
            return seq
        length += 2
    raise AssertionError("no even-length total dominating sequence found")


def open_uniformity_lengths(g: Graph, *, max_n: int = OPEN_LENGTHS_MAX_N) -> frozenset[int]:
    """Lengths of all legal sequences whose vertex set is a dominating set.

    Exhaustive DFS without footprint memoization: whether the played set
    dominates depends on the set itself, not only on the footprint.
    """
    if g.n > max_n:
        raise BruteForceLimitError(f"open-uniformity enumeration guard is n <= {max_n}")
    require_solvable(g)
    full = g.full_mask
    closed = [g.adj[v] | (1 << v) for v in range(g.n)]
    lengths: set[int] = set()

    def search(fp: int, dominated: int, depth: int) -> None:
        for v in range(g.n):
            if g.adj[v] & ~fp:
                now = dominated | closed[v]
                if now == full:
                    lengths.add(depth + 1)
                search(fp | g.adj[v], now, depth + 1)

    search(0, 0, 0)
    return frozenset(lengths)


@dataclass(frozen=True)
class DominationReport:
    """Both domination numbers with verifying witnesses."""

    gamma_t: int
    gamma_t_witness: int
    grundy: int
    grundy_witness: tuple[int, ...]


def domination_report(
    g: Graph,
    *,
    time_limit: Optional[float] = None,
    memo_limit_bytes: int = DEFAULT_MEMO_BYTES,
) -> DominationReport:
    require_solvable(g)
    deadline = _deadline(time_limit)
    gamma, gamma_witness = _solve_gamma_t(g, deadline)
    grundy, grundy_witness = _solve_grundy(g, deadline, memo_limit_bytes)
    return DominationReport(gamma, gamma_witness, grundy, grundy_witness)
