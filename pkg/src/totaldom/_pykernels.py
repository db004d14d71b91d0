"""Pure-Python search kernels.

Same interface as the compiled module ``_kernels``; masks are Python ints,
so any vertex count works.  ``adj`` is a sequence of neighborhood masks,
``deadline`` an absolute time.monotonic() value or None, memo limits are
entry counts.  Callers guarantee the graph has no isolated vertices.
"""

from __future__ import annotations

import time
from typing import Optional, Sequence

from .errors import MemoLimitError, TimeLimitError

# Rough per-entry cost of a Python dict with int keys/values, used by the
# dispatch layer to turn a byte budget into an entry budget.
MEMO_ENTRY_BYTES = 104

_TICK = 2048  # deadline poll interval, in expanded states


def _expired(deadline: Optional[float]) -> bool:
    return deadline is not None and time.monotonic() > deadline


def grundy(adj: Sequence[int], memo_limit: int, deadline: Optional[float]) -> tuple[int, list[int]]:
    """Longest total dominating sequence via DFS over footprints.

    A vertex is playable iff its neighborhood leaves the footprint, which
    makes the optimal continuation a function of the footprint alone; the
    memo stores that value per footprint.
    """
    n = len(adj)
    if _expired(deadline):
        raise TimeLimitError("deadline exceeded before the search started")
    memo: dict[int, int] = {}
    ticker = 0

    def best_from(fp: int) -> int:
        nonlocal ticker
        cached = memo.get(fp)
        if cached is not None:
            return cached
        ticker += 1
        if ticker % _TICK == 0 and _expired(deadline):
            raise TimeLimitError("deadline exceeded")
        best = 0
        for v in range(n):
            if adj[v] & ~fp:
                d = 1 + best_from(fp | adj[v])
                if d > best:
                    best = d
        if len(memo) >= memo_limit:
            raise MemoLimitError(f"memo table hit its cap of {memo_limit} entries")
        memo[fp] = best
        return best

    value = best_from(0)
    seq: list[int] = []
    fp = 0
    remaining = value
    while remaining:
        for v in range(n):
            if adj[v] & ~fp and 1 + memo[fp | adj[v]] == remaining:
                seq.append(v)
                fp |= adj[v]
                remaining -= 1
                break
        else:
            raise AssertionError("memo reconstruction failed")
    return value, seq


def gamma_t(adj: Sequence[int], deadline: Optional[float]) -> tuple[int, int]:
    """Minimum total dominating set; witness is the lexicographically least
    minimum-size set, found by size-iterated DFS in subset-lex order."""
    n = len(adj)
    full = (1 << n) - 1
    if _expired(deadline):
        raise TimeLimitError("deadline exceeded before the search started")

    max_deg = max(a.bit_count() for a in adj)
    upper = _greedy_cover_size(adj, full)
    lower = max(2, -(-n // max_deg))

    suffix = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        suffix[v] = suffix[v + 1] | adj[v]

    ticker = 0

    def search(start: int, need: int, covered: int) -> int:
        # Returns a witness mask, or 0 if no completion exists.
        nonlocal ticker
        if need == 0:
            return 0 if covered != full else -1  # -1: empty completion
        ticker += 1
        if ticker % _TICK == 0 and _expired(deadline):
            raise TimeLimitError("deadline exceeded")
        missing = full & ~covered
        if missing & ~suffix[start]:
            return 0
        if missing.bit_count() > need * max_deg:
            return 0
        for v in range(start, n - need + 1):
            sub = search(v + 1, need - 1, covered | adj[v])
            if sub:
                return (1 << v) | (sub if sub != -1 else 0)
        return 0

    for size in range(lower, upper + 1):
        witness = search(0, size, 0)
        if witness:
            return size, witness
    raise AssertionError("greedy upper bound was not realized")


def _greedy_cover_size(adj: Sequence[int], full: int) -> int:
    covered = 0
    count = 0
    while covered != full:
        gain, pick = 0, -1
        for v in range(len(adj)):
            g = (adj[v] & ~covered).bit_count()
            if g > gain:
                gain, pick = g, v
        covered |= adj[pick]
        count += 1
    return count


def tds_of_length(
    adj: Sequence[int], length: int, memo_limit: int, deadline: Optional[float]
) -> Optional[list[int]]:
    """Lexicographically first total dominating sequence of exactly the given
    length, or None.  Failures are memoized per (footprint, moves left)."""
    n = len(adj)
    full = (1 << n) - 1
    if _expired(deadline):
        raise TimeLimitError("deadline exceeded before the search started")
    infeasible: dict[int, int] = {}  # footprint -> bitmask of dead remaining-counts
    seq: list[int] = []
    ticker = 0

    def search(fp: int, left: int) -> bool:
        nonlocal ticker
        if left == 0:
            return fp == full
        if infeasible.get(fp, 0) >> left & 1:
            return False
        ticker += 1
        if ticker % _TICK == 0 and _expired(deadline):
            raise TimeLimitError("deadline exceeded")
        for v in range(n):
            if adj[v] & ~fp:
                seq.append(v)
                if search(fp | adj[v], left - 1):
                    return True
                seq.pop()
        if len(infeasible) >= memo_limit:
            raise MemoLimitError(f"memo table hit its cap of {memo_limit} entries")
        infeasible[fp] = infeasible.get(fp, 0) | (1 << left)
        return False

    return seq if search(0, length) else None
