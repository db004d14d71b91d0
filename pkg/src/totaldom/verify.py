"""Built-in verification suite.

Each check re-derives one concrete fact the library must reproduce
exactly; quick-level checks run in seconds, full-level ones cover the
exhaustive 7-vertex sweep and the 30-vertex double-cover computation.
The CLI ``verify`` command and the acceptance tests both run this
registry.
"""

from __future__ import annotations

import io
import time
from contextlib import redirect_stdout
from dataclasses import dataclass
from typing import Callable, Optional

from . import formats
from .domination import (
    even_length_tds,
    exists_tds_of_length,
    grundy_total_domination_number,
    is_total_dominating_sequence,
    is_total_dominating_set,
    total_domination_number,
)
from .families import (
    bipartite_double_cover,
    complete_graph,
    complete_multipartite,
    crown,
    line_of_complete,
)
from .graph import (
    Graph,
    connected_components,
    girth,
    is_bipartite,
    is_chordal,
    is_complete_multipartite,
    is_connected,
    is_false_twin_free,
    is_regular,
)
from .oracles import brute_gamma_t, brute_grundy, graph_from_edge_mask
from .sweeps import (
    CORPUS_SEED,
    iter_uniformity,
    random_graphs_no_isolated,
    sample_edge_masks,
    uniformity_table,
)
from .uniformity import (
    GirthBranch,
    chordal_uniform_classification,
    double_cover_uniformity,
    girth_dichotomy,
    reduction,
    total_uniformity,
)

QUICK = "quick"
FULL = "full"


@dataclass(frozen=True)
class Check:
    name: str
    level: str
    budget: Optional[float]
    fn: Callable[[], tuple[bool, str]]


@dataclass(frozen=True)
class CheckResult:
    name: str
    level: str
    ok: bool
    detail: str
    seconds: float


CHECKS: list[Check] = []


def _check(name: str, *, level: str = QUICK, budget: Optional[float] = None):
    def register(fn):
        CHECKS.append(Check(name, level, budget, fn))
        return fn

    return register


def run_check(check: Check) -> CheckResult:
    start = time.monotonic()
    try:
        ok, detail = check.fn()
    except Exception as exc:  # a crashed check is a failed check
        elapsed = time.monotonic() - start
        return CheckResult(check.name, check.level, False, f"raised {exc!r}", elapsed)
    elapsed = time.monotonic() - start
    if ok and check.budget is not None and elapsed > check.budget:
        ok = False
        detail += f" (exceeded {check.budget:.0f}s budget)"
    return CheckResult(check.name, check.level, ok, detail, elapsed)


def run_suite(level: str = QUICK) -> list[CheckResult]:
    wanted = (QUICK,) if level == QUICK else (QUICK, FULL)
    return [run_check(c) for c in CHECKS if c.level in wanted]


def checks_for(level: str) -> list[Check]:
    wanted = (QUICK,) if level == QUICK else (QUICK, FULL)
    return [c for c in CHECKS if c.level in wanted]


# ------------------------------------------------------------------ checks


@_check("01-lk6-uniform-4", budget=10.0)
def _lk6_uniform() -> tuple[bool, str]:
    lk6, _ = line_of_complete(6)
    gamma, set_witness = total_domination_number(lk6)
    grundy, seq_witness = grundy_total_domination_number(lk6)
    verdict = total_uniformity(lk6)
    ok = (
        gamma == 4
        and grundy == 4
        and verdict.k == 4
        and set_witness.bit_count() == 4
        and is_total_dominating_set(lk6, set_witness)
        and is_total_dominating_sequence(lk6, seq_witness)
    )
    return ok, f"gamma_t={gamma} grundy={grundy} verdict={verdict.kind}"


@_check("02-lk6-structure")
def _lk6_structure() -> tuple[bool, str]:
    lk6, _ = line_of_complete(6)
    connected = is_connected(lk6)
    twin_free = is_false_twin_free(lk6)
    bipartite = is_bipartite(lk6)
    ok = connected and twin_free and bipartite is None
    return ok, (
        f"connected={connected} false_twin_free={twin_free} "
        f"bipartite={bipartite is not None}"
    )


@_check("03-lk9-sequence-lengths", budget=300.0)
def _lk9_sequences() -> tuple[bool, str]:
    lk9, labels = line_of_complete(9)
    index = {pair: i for i, pair in enumerate(labels)}
    # The two explicit witnesses, written as 1-based element pairs.
    seq6 = [(1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (7, 8)]
    seq7 = [(a, 9) for a in range(1, 8)]
    six = [index[(a - 1, b - 1)] for a, b in seq6]
    seven = [index[(a - 1, b - 1)] for a, b in seq7]
    ok = is_total_dominating_sequence(lk9, six)
    ok &= is_total_dominating_sequence(lk9, seven)
    found7 = exists_tds_of_length(lk9, 7)
    gamma, _ = total_domination_number(lk9)
    ok &= found7 is not None and is_total_dominating_sequence(lk9, found7)
    ok &= gamma <= 6
    # gamma_t <= 6 < 7 <= grundy, so the two numbers differ: not uniform.
    return ok, f"len6 ok, len7 ok, solver len7 found, gamma_t={gamma}"


@_check("04-crown-and-multipartite-families", budget=30.0)
def _crown_family() -> tuple[bool, str]:
    import random

    for n in range(3, 9):
        if total_uniformity(crown(n)).k != 4:
            return False, f"crown({n}) not uniform(4)"
    rng = random.Random(CORPUS_SEED)
    profiles = []
    while len(profiles) < 20:
        parts = [rng.randint(1, 5) for _ in range(rng.randint(2, 5))]
        if sum(parts) <= 14:
            profiles.append(parts)
    for parts in profiles:
        if total_uniformity(complete_multipartite(parts)).k != 2:
            return False, f"multipartite {parts} not uniform(2)"
    return True, f"crown(3..8) uniform(4); {len(profiles)} multipartite profiles uniform(2)"


@_check("05-odd-k-nonexistence-n6", budget=300.0)
def _odd_k_small() -> tuple[bool, str]:
    scanned = 0
    for n in range(2, 7):
        for rec in uniformity_table(n):
            scanned += 1
            k = rec.uniform_k
            if k is not None and k % 2 == 1:
                return False, f"odd uniform graph: n={n} mask={rec.edge_mask} k={k}"
    return True, f"{scanned} isolated-free graphs on up to 6 vertices, no odd k"


@_check("05-odd-k-nonexistence-n7", level=FULL, budget=7200.0)
def _odd_k_full() -> tuple[bool, str]:
    scanned = 0
    for rec in iter_uniformity(7):
        scanned += 1
        if rec.gamma_t > rec.grundy:
            return False, f"gamma_t > grundy at mask={rec.edge_mask}"
        k = rec.uniform_k
        if k is not None and k % 2 == 1:
            return False, f"odd uniform graph: mask={rec.edge_mask} k={k}"
    return True, f"{scanned} isolated-free graphs on 7 vertices, no odd k"


@_check("06-even-length-sequences-n6", budget=300.0)
def _even_length() -> tuple[bool, str]:
    count = 0
    for n in range(2, 7):
        for rec in uniformity_table(n):
            g = rec.graph()
            seq = even_length_tds(g)
            if len(seq) % 2 or not is_total_dominating_sequence(g, seq):
                return False, f"bad even sequence for n={n} mask={rec.edge_mask}"
            count += 1
    return True, f"even-length sequence found on all {count} graphs"


@_check("07-reduction-lemma-n6", budget=300.0)
def _reduction_lemma() -> tuple[bool, str]:
    tested = 0
    for n in range(2, 7):
        for rec in uniformity_table(n):
            k = rec.uniform_k
            if k is None or k < 3:
                continue
            g = rec.graph()
            in_family = is_false_twin_free(g)
            for u, v in g.edges():
                sub, _ = reduction(g, u, v)
                if sub.n == 0 or 0 in sub.adj:
                    return False, f"reduction left isolated vertices: mask={rec.edge_mask}"
                if total_uniformity(sub).k != k - 2:
                    return False, f"reduction not uniform(k-2): mask={rec.edge_mask} edge=({u},{v})"
                if in_family and not is_false_twin_free(sub):
                    return False, f"reduction lost twin-freeness: mask={rec.edge_mask}"
                tested += 1
    return True, f"{tested} edge reductions all drop k by exactly 2"


@_check("08-double-cover-small", budget=60.0)
def _double_cover_small() -> tuple[bool, str]:
    k3 = double_cover_uniformity(complete_graph(3))
    k5 = double_cover_uniformity(complete_graph(5))
    ok = k3 == 4 and k5 == 4
    return ok, f"K3 cover uniform({k3}), K5 cover uniform({k5})"


@_check("08-double-cover-lk6", level=FULL, budget=1800.0)
def _double_cover_lk6() -> tuple[bool, str]:
    lk6, _ = line_of_complete(6)
    cover = bipartite_double_cover(lk6)
    verdict = total_uniformity(cover)
    ok = is_connected(cover) and verdict.k == 8
    return ok, f"30-vertex cover connected, verdict uniform({verdict.k})"


@_check("09-regularity-n6", budget=300.0)
def _regularity() -> tuple[bool, str]:
    checked = 0
    for n in range(2, 7):
        for rec in uniformity_table(n):
            if rec.uniform_k is None:
                continue
            g = rec.graph()
            if not is_connected(g) or not is_false_twin_free(g):
                continue
            if is_regular(g) is None:
                return False, f"irregular member: n={n} mask={rec.edge_mask}"
            checked += 1
    lk6, _ = line_of_complete(6)
    extras = [crown(n) for n in range(3, 9)] + [lk6]
    for g in extras:
        if is_regular(g) is None:
            return False, "irregular named construction"
    return True, f"{checked} sweep graphs + {len(extras)} named graphs all regular"


@_check("10-chordal-classification-n6", budget=300.0)
def _chordal_classification() -> tuple[bool, str]:
    chordal_count = 0
    for n in range(2, 7):
        for rec in uniformity_table(n):
            g = rec.graph()
            if not is_chordal(g):
                continue
            chordal_count += 1
            k = rec.uniform_k
            structural = chordal_uniform_classification(g)
            if (k is not None) != structural:
                return False, f"classification mismatch: n={n} mask={rec.edge_mask}"
            if k is not None:
                if k != 2 * len(connected_components(g)):
                    return False, f"wrong k: n={n} mask={rec.edge_mask}"
                if k >= 4 and is_connected(g):
                    return False, f"connected chordal uniform({k}): mask={rec.edge_mask}"
    return True, f"{chordal_count} chordal graphs classified consistently"


@_check("11-girth-dichotomy-n6", budget=300.0)
def _girth_dichotomy() -> tuple[bool, str]:
    checked = 0
    for n in range(2, 7):
        for rec in uniformity_table(n):
            k = rec.uniform_k
            if k is None:
                continue
            g = rec.graph()
            branch = girth_dichotomy(g, k)  # raises if neither branch holds
            if branch is GirthBranch.GIRTH_AT_MOST_6:
                cyc = girth(g)
                if cyc is None or cyc > 6:
                    return False, f"girth claim wrong: n={n} mask={rec.edge_mask}"
            checked += 1
    return True, f"{checked} uniform graphs satisfy the star/girth alternative"


@_check("12-solver-oracle-agreement", budget=600.0)
def _oracle_agreement() -> tuple[bool, str]:
    count = 0
    for n in range(2, 7):
        for rec in uniformity_table(n):
            g = rec.graph()
            if brute_gamma_t(g) != rec.gamma_t or brute_grundy(g) != rec.grundy:
                return False, f"oracle mismatch: n={n} mask={rec.edge_mask}"
            count += 1
    randoms = random_graphs_no_isolated(500, (7, 8, 9, 10), (0.35, 0.5, 0.65), seed=90125)
    for g in randoms:
        gamma, wset = total_domination_number(g)
        grundy, wseq = grundy_total_domination_number(g)
        ok = (
            gamma == brute_gamma_t(g)
            and grundy == brute_grundy(g)
            and gamma <= grundy
            and is_total_dominating_set(g, wset)
            and is_total_dominating_sequence(g, wseq)
        )
        if not ok:
            return False, f"oracle mismatch on random graph {list(g.edges())}"
        count += 1
    return True, f"solvers match oracles on {count} graphs"


@_check("13-graph6-roundtrip-scan", budget=300.0)
def _graph6_and_scan() -> tuple[bool, str]:
    import random

    from . import cli

    count = 0
    for n in range(0, 7):
        masks = range(1 << (n * (n - 1) // 2)) if n <= 6 else []
        for mask in masks:
            g = graph_from_edge_mask(n, mask)
            line = formats.encode_graph6(g)
            if formats.decode_graph6(line) != g or formats.encode_graph6(formats.decode_graph6(line)) != line:
                return False, f"roundtrip failed for n={n} mask={mask}"
            count += 1
    for mask in sample_edge_masks(7, 500):
        g = graph_from_edge_mask(7, mask)
        if formats.decode_graph6(formats.encode_graph6(g)) != g:
            return False, f"roundtrip failed for n=7 mask={mask}"
        count += 1
    rng = random.Random(CORPUS_SEED)
    for _ in range(1000):
        n = rng.randint(1, 62)
        g = graph_from_edge_mask(n, rng.getrandbits(n * (n - 1) // 2))
        if formats.decode_graph6(formats.encode_graph6(g)) != g:
            return False, f"roundtrip failed for random n={n}"
        count += 1

    # Scanner determinism: identical stdout for any worker count.
    import os
    import tempfile

    lines = [formats.encode_graph6(graph_from_edge_mask(4, m)) for m in range(64)]
    with tempfile.NamedTemporaryFile("w", suffix=".g6", delete=False) as handle:
        handle.write("\n".join(lines) + "\n")
        fixture = handle.name
    outputs = []
    try:
        for workers in (1, 2, 3):
            buf = io.StringIO()
            with redirect_stdout(buf):
                code = cli.main(["scan", "--k", "2", "--parallel", str(workers), fixture])
            if code != 0:
                return False, f"scan exited {code}"
            outputs.append(buf.getvalue())
    finally:
        os.unlink(fixture)
    if len(set(outputs)) != 1:
        return False, "scan output varies with worker count"
    matched = [line for line in outputs[0].splitlines() if not line.startswith("summary")]
    expected = []
    for mask in range(64):
        g = graph_from_edge_mask(4, mask)
        if 0 not in g.adj and is_complete_multipartite(g) is not None:
            expected.append(formats.encode_graph6(g))
    if matched != expected:
        return False, "scan k=2 disagrees with the multipartite characterization"
    return True, f"{count} roundtrips; scan byte-identical across 1..3 workers"
