"""Labeled-graph sweeps and seeded corpora for the theorem checks.

The exhaustive side enumerates every labeled graph on n vertices (edge-mask
order, see ``oracles.edge_pairs``); the sampled side draws deterministic
pseudo-random graphs from fixed seeds so the suite is reproducible.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterator, NamedTuple, Optional, Sequence

from .domination import DEFAULT_MEMO_BYTES
from .graph import Graph
from .kernels import kernel_for, memo_entries
from .oracles import edge_pairs, graph_from_edge_mask

CORPUS_SEED = 1729
CORPUS_N7_SAMPLE = 3000


class SweepRecord(NamedTuple):
    n: int
    edge_mask: int
    gamma_t: int
    grundy: int

    @property
    def uniform_k(self) -> Optional[int]:
        return self.gamma_t if self.gamma_t == self.grundy else None

    def graph(self) -> Graph:
        return graph_from_edge_mask(self.n, self.edge_mask)


def solve_pair(adj: Sequence[int], memo_limit_bytes: int = DEFAULT_MEMO_BYTES) -> tuple[int, int]:
    """(gamma_t, grundy) straight from the kernels; adj must have no zeros."""
    module = kernel_for(len(adj))
    gamma = module.gamma_t(adj, None)[0]
    grundy = module.grundy(adj, memo_entries(module, memo_limit_bytes), None)[0]
    return gamma, grundy


def iter_uniformity(n: int) -> Iterator[SweepRecord]:
    """Solve every labeled graph on n vertices that has no isolated vertex."""
    pairs = edge_pairs(n)
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        m = mask
        while m:
            low = m & -m
            u, v = pairs[low.bit_length() - 1]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            m ^= low
        if 0 in adj:
            continue
        gamma, grundy = solve_pair(adj)
        yield SweepRecord(n, mask, gamma, grundy)


@lru_cache(maxsize=8)
def uniformity_table(n: int) -> tuple[SweepRecord, ...]:
    """Cached exhaustive sweep; meant for n <= 6."""
    return tuple(iter_uniformity(n))


def sample_edge_masks(n: int, count: int, seed: int = CORPUS_SEED) -> list[int]:
    """Deterministic sample of edge masks over all labeled graphs on n vertices."""
    rng = random.Random(seed)
    width = len(edge_pairs(n))
    return [rng.getrandbits(width) for _ in range(count)]


def corpus_n7(count: int = CORPUS_N7_SAMPLE, seed: int = CORPUS_SEED) -> list[Graph]:
    """The fixed pseudo-random slice of 7-vertex labeled graphs used wherever
    an exhaustive n=7 pass would be too slow."""
    return [graph_from_edge_mask(7, m) for m in sample_edge_masks(7, count, seed)]


def random_graphs_no_isolated(
    count: int,
    sizes: Sequence[int],
    densities: Sequence[float],
    seed: int,
) -> list[Graph]:
    """Deterministic G(n, p) graphs with no isolated vertices: cycle through
    the given sizes and densities, resampling any graph with an isolated
    vertex."""
    rng = random.Random(seed)
    out: list[Graph] = []
    while len(out) < count:
        n = sizes[len(out) % len(sizes)]
        p = densities[len(out) % len(densities)]
        for _ in range(10_000):
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
            g = Graph(n, pairs)
            if 0 not in g.adj:
                out.append(g)
                break
        else:
            raise AssertionError("resampling failed to produce an isolated-free graph")
    return out
