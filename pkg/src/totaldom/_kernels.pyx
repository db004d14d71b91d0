# cython: language_level=3, boundscheck=False, wraparound=False
# distutils: language = c++
"""Compiled search kernels for graphs on up to 64 vertices.

Mirror of ``_pykernels``: same functions, same tie-breaking, same
exceptions, with uint64 masks and a C++ hash map for the memo tables.
"""

from cython.operator cimport dereference as deref
from libc.stdint cimport uint64_t
from libcpp.unordered_map cimport unordered_map

import time

from .errors import MemoLimitError, TimeLimitError

# unordered_map node: 8B key + 8B value + next pointer + bucket share.
MEMO_ENTRY_BYTES = 48

cdef extern from *:
    int __builtin_popcountll(unsigned long long x)


cdef struct Ctx:
    uint64_t adj[64]
    int n
    uint64_t full
    size_t memo_cap
    double deadline          # monotonic seconds; negative means none
    unsigned long long ticker
    int chosen[65]


cdef int _check_time(Ctx* ctx) except -1:
    ctx.ticker += 1
    if ctx.deadline >= 0 and (ctx.ticker & 2047) == 0:
        if time.monotonic() > ctx.deadline:
            raise TimeLimitError("deadline exceeded")
    return 0


cdef int _init_ctx(Ctx* ctx, adj, memo_limit, deadline) except -1:
    cdef int n = len(adj)
    cdef int v
    if n > 64:
        raise ValueError("compiled kernels handle at most 64 vertices")
    ctx.n = n
    ctx.full = (<uint64_t>0 - 1) if n == 64 else ((<uint64_t>1 << n) - 1)
    ctx.memo_cap = <size_t>min(int(memo_limit), (1 << 62))
    ctx.deadline = -1.0 if deadline is None else float(deadline)
    ctx.ticker = 0
    for v in range(n):
        ctx.adj[v] = adj[v]
    if ctx.deadline >= 0 and time.monotonic() > ctx.deadline:
        raise TimeLimitError("deadline exceeded before the search started")
    return 0


# ---------------------------------------------------------------- grundy

cdef int _grundy_best(Ctx* ctx, unordered_map[uint64_t, int]* memo, uint64_t fp) except -2:
    cdef unordered_map[uint64_t, int].iterator it = memo.find(fp)
    cdef int best = 0
    cdef int v, d
    if it != memo.end():
        return deref(it).second
    _check_time(ctx)
    for v in range(ctx.n):
        if ctx.adj[v] & ~fp:
            d = 1 + _grundy_best(ctx, memo, fp | ctx.adj[v])
            if d > best:
                best = d
    if memo.size() >= ctx.memo_cap:
        raise MemoLimitError(f"memo table hit its cap of {ctx.memo_cap} entries")
    deref(memo)[fp] = best
    return best


def grundy(adj, memo_limit, deadline):
    """Longest total dominating sequence: (value, witness list)."""
    cdef Ctx ctx
    cdef unordered_map[uint64_t, int] memo
    cdef uint64_t fp = 0
    cdef int value, remaining, v
    _init_ctx(&ctx, adj, memo_limit, deadline)
    value = _grundy_best(&ctx, &memo, 0)
    seq = []
    remaining = value
    while remaining:
        for v in range(ctx.n):
            if (ctx.adj[v] & ~fp) and 1 + memo.at(fp | ctx.adj[v]) == remaining:
                seq.append(v)
                fp |= ctx.adj[v]
                remaining -= 1
                break
    return value, seq


# ---------------------------------------------------------------- gamma_t

cdef int _gamma_search(Ctx* ctx, uint64_t* suffix, int max_deg,
                       int depth, int start, int need, uint64_t covered) except -2:
    cdef uint64_t missing
    cdef int v
    if need == 0:
        return covered == ctx.full
    _check_time(ctx)
    missing = ctx.full & ~covered
    if missing & ~suffix[start]:
        return 0
    if __builtin_popcountll(missing) > need * max_deg:
        return 0
    for v in range(start, ctx.n - need + 1):
        ctx.chosen[depth] = v
        if _gamma_search(ctx, suffix, max_deg, depth + 1, v + 1, need - 1,
                         covered | ctx.adj[v]):
            return 1
    return 0


def gamma_t(adj, deadline):
    """Minimum total dominating set: (value, lexicographically least mask)."""
    cdef Ctx ctx
    cdef uint64_t suffix[65]
    cdef uint64_t covered, witness
    cdef int v, max_deg, upper, lower, size, pick, gain, g
    _init_ctx(&ctx, adj, 1, deadline)

    max_deg = 0
    for v in range(ctx.n):
        g = __builtin_popcountll(ctx.adj[v])
        if g > max_deg:
            max_deg = g

    covered = 0
    upper = 0
    while covered != ctx.full:
        gain = 0
        pick = -1
        for v in range(ctx.n):
            g = __builtin_popcountll(ctx.adj[v] & ~covered)
            if g > gain:
                gain = g
                pick = v
        covered |= ctx.adj[pick]
        upper += 1

    lower = (ctx.n + max_deg - 1) // max_deg
    if lower < 2:
        lower = 2

    suffix[ctx.n] = 0
    for v in range(ctx.n - 1, -1, -1):
        suffix[v] = suffix[v + 1] | ctx.adj[v]

    for size in range(lower, upper + 1):
        if _gamma_search(&ctx, suffix, max_deg, 0, 0, size, 0):
            witness = 0
            for v in range(size):
                witness |= <uint64_t>1 << ctx.chosen[v]
            return size, witness
    raise AssertionError("greedy upper bound was not realized")


# ---------------------------------------------------------------- exact length

cdef int _tds_search(Ctx* ctx, unordered_map[uint64_t, uint64_t]* dead,
                     uint64_t fp, int left, int depth) except -2:
    cdef unordered_map[uint64_t, uint64_t].iterator it
    cdef int v
    if left == 0:
        return fp == ctx.full
    it = dead.find(fp)
    if it != dead.end() and (deref(it).second >> left) & 1:
        return 0
    _check_time(ctx)
    for v in range(ctx.n):
        if ctx.adj[v] & ~fp:
            ctx.chosen[depth] = v
            if _tds_search(ctx, dead, fp | ctx.adj[v], left - 1, depth + 1):
                return 1
    if dead.size() >= ctx.memo_cap:
        raise MemoLimitError(f"memo table hit its cap of {ctx.memo_cap} entries")
    deref(dead)[fp] = deref(dead)[fp] | (<uint64_t>1 << left)
    return 0


def tds_of_length(adj, length, memo_limit, deadline):
    """Lexicographically first total dominating sequence of exactly
    ``length``, or None."""
    cdef Ctx ctx
    cdef unordered_map[uint64_t, uint64_t] dead
    cdef int v
    cdef int l = length
    if l < 0 or l > 63:
        raise ValueError("compiled kernel handles lengths 0..63")
    _init_ctx(&ctx, adj, memo_limit, deadline)
    if _tds_search(&ctx, &dead, 0, l, 0):
        return [ctx.chosen[v] for v in range(l)]
    return None
