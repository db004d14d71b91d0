"""Command-line interface.

Commands: ``construct`` (emit a named family), ``compute`` (both domination
numbers, witnesses and the uniformity verdict for one graph), ``scan``
(filter a graph6 stream down to the total k-uniform members) and
``verify`` (run the built-in verification suite).

Every command ends its stdout with one machine-parsable line of the form
``summary key=value ...``; such lines are ignored when they appear in
input streams, so commands compose through pipes.  Exit codes: 0 ok,
1 verification failure, 2 bad input, 3 undefined (isolated vertices),
4 time limit, 5 memo limit.
"""

from __future__ import annotations

import argparse
import os
import sys
from multiprocessing import Pool
from typing import Iterable, Iterator, Optional

from . import formats
from .domination import DEFAULT_MEMO_BYTES, domination_report
from .errors import (
    InvalidSizeError,
    IsolatedVertexError,
    MemoLimitError,
    ParseError,
    TimeLimitError,
)
from .families import (
    bipartite_double_cover,
    complete_graph,
    complete_multipartite,
    crown,
    cycle,
    direct_product,
    line_of_complete,
    path,
    star,
)
from .graph import Graph
from .uniformity import total_uniformity

STRUCTURAL_MAX_N = 512
SOLVER_MAX_N = 64
THREADS_ENV = "TOTALDOM_THREADS"


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def _is_summary(line: str) -> bool:
    return line.startswith("summary ") or line == "summary"


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="ascii") as handle:
            return handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None


def _graph_lines(text: str) -> Iterator[str]:
    for raw in text.splitlines():
        line = raw.strip()
        if line and not _is_summary(line):
            yield line


# ---------------------------------------------------------------- construct


def _emit_graph(g: Graph, fmt: str) -> None:
    if fmt == "g6":
        print(formats.encode_graph6(g))
    elif fmt == "edges":
        print(formats.write_edge_list(g), end="")
    else:
        print(formats.write_dot(g), end="")


def _cmd_construct(args: argparse.Namespace) -> int:
    sizes = args.sizes
    name = args.family

    def one_size(minimum: int) -> int:
        if len(sizes) != 1:
            raise ParseError(f"{name} takes exactly one size parameter")
        if sizes[0] < minimum:
            raise InvalidSizeError(f"{name} needs a size of at least {minimum}")
        return sizes[0]

    if name == "complete":
        g = complete_graph(one_size(1))
    elif name == "multipartite":
        if not sizes:
            raise ParseError("multipartite needs at least one part size")
        g = complete_multipartite(sizes)
    elif name == "star":
        g = star(one_size(1))
    elif name == "path":
        g = path(one_size(1))
    elif name == "cycle":
        g = cycle(one_size(3))
    elif name == "crown":
        g = crown(one_size(2))
    elif name == "line-complete":
        g = line_of_complete(one_size(2))[0]
    elif name == "double-cover":
        g = bipartite_double_cover(_single_input_graph(args.input))
    else:  # product
        left, right = _two_input_graphs(args.input)
        g = direct_product(left, right)

    if g.n > args.max_n:
        raise ParseError(f"construction has n={g.n}, beyond --max-n {args.max_n}")
    _emit_graph(g, args.format)
    print(f"summary graphs=1 n={g.n} m={g.edge_count}")
    return 0


def _single_input_graph(path: str) -> Graph:
    lines = list(_graph_lines(_read_text(path)))
    if len(lines) != 1:
        raise ParseError(f"expected exactly one graph6 line on input, got {len(lines)}")
    return formats.decode_graph6(lines[0])


def _two_input_graphs(path: str) -> tuple[Graph, Graph]:
    lines = list(_graph_lines(_read_text(path)))
    if len(lines) != 2:
        raise ParseError(f"product expects two graph6 lines on input, got {len(lines)}")
    return formats.decode_graph6(lines[0]), formats.decode_graph6(lines[1])


# ------------------------------------------------------------------ compute


def _cmd_compute(args: argparse.Namespace) -> int:
    text = _read_text(args.path)
    if args.edges:
        g = formats.read_edge_list(text)
    else:
        lines = list(_graph_lines(text))
        if not lines:
            raise ParseError("no graph6 line on input")
        g = formats.decode_graph6(lines[0])
    if g.n > args.max_n:
        raise ParseError(f"graph has n={g.n}, beyond --max-n {args.max_n}")
    print(f"n={g.n} m={g.edge_count}")
    memo_bytes = int(args.memo_limit_mib * (1 << 20))
    try:
        report = domination_report(
            g, time_limit=args.time_limit, memo_limit_bytes=memo_bytes
        )
    except IsolatedVertexError:
        print("verdict=undefined")
        print(f"summary status=undefined n={g.n}")
        return 3
    except TimeLimitError:
        print(f"summary status=timeout n={g.n}")
        return 4
    except MemoLimitError:
        print(f"summary status=resource-limit n={g.n}")
        return 5
    uniform = report.gamma_t == report.grundy
    verdict = "uniform" if uniform else "not_uniform"
    gamma_vertices = " ".join(str(v) for v in _mask_vertices(report.gamma_t_witness))
    grundy_vertices = " ".join(str(v) for v in report.grundy_witness)
    print(f"gamma_t={report.gamma_t}")
    print(f"gamma_t_witness={gamma_vertices}")
    print(f"grundy={report.grundy}")
    print(f"grundy_witness={grundy_vertices}")
    print(f"verdict={verdict}" + (f" k={report.gamma_t}" if uniform else ""))
    tail = f" k={report.gamma_t}" if uniform else ""
    print(
        f"summary status=ok n={g.n} gamma_t={report.gamma_t} "
        f"grundy={report.grundy} verdict={verdict}{tail}"
    )
    return 0


def _mask_vertices(mask: int) -> Iterable[int]:
    v = 0
    while mask:
        if mask & 1:
            yield v
        mask >>= 1
        v += 1


# --------------------------------------------------------------------- scan


def _scan_classify(item: tuple[int, str, Optional[int], int]) -> tuple[int, str, str]:
    number, line, wanted_k, max_n = item
    text = line.strip()
    if not text:
        return number, "blank", ""
    if _is_summary(text):
        return number, "skipped", ""
    try:
        g = formats.decode_graph6(text)
    except ParseError as exc:
        return number, "malformed", str(exc)
    if g.n > max_n:
        return number, "oversize", f"n={g.n}"
    verdict = total_uniformity(g)
    if not verdict.defined:
        return number, "undefined", ""
    if verdict.k is None or (wanted_k is not None and verdict.k != wanted_k):
        return number, "nomatch", ""
    return number, "match", text


def _cmd_scan(args: argparse.Namespace) -> int:
    if args.path == "-":
        source: Iterable[str] = sys.stdin
    else:
        try:
            source = open(args.path, "r", encoding="ascii")
        except OSError as exc:
            raise ParseError(f"cannot read {args.path}: {exc}") from None
    counts = {"scanned": 0, "matched": 0, "malformed": 0, "undefined": 0,
              "oversize": 0, "skipped": 0}
    items = ((i, line, args.k, args.max_n) for i, line in enumerate(source, start=1))
    workers = args.parallel
    if workers > 1:
        pool = Pool(workers)
        results: Iterator[tuple[int, str, str]] = pool.imap(_scan_classify, items, chunksize=16)
    else:
        pool = None
        results = map(_scan_classify, items)
    try:
        for number, status, payload in results:
            if status == "blank" or status == "skipped":
                counts["skipped"] += status == "skipped"
                continue
            if status == "malformed":
                counts["malformed"] += 1
                print(f"line {number}: {payload}", file=sys.stderr)
                continue
            counts["scanned"] += 1
            if status == "oversize":
                counts["oversize"] += 1
                print(f"line {number}: skipped ({payload} beyond --max-n)", file=sys.stderr)
            elif status == "undefined":
                counts["undefined"] += 1
            elif status == "match":
                counts["matched"] += 1
                print(payload)
            if args.progress_every and number % args.progress_every == 0:
                print(f"progress: {number} lines", file=sys.stderr)
    finally:
        if pool is not None:
            pool.close()
            pool.join()
        if source is not sys.stdin:
            source.close()
    print(
        "summary scanned={scanned} matched={matched} malformed={malformed} "
        "undefined={undefined} oversize={oversize} skipped={skipped}".format(**counts)
    )
    return 0


# ------------------------------------------------------------------- verify


def _cmd_verify(args: argparse.Namespace) -> int:
    from . import verify

    results = []
    for check in verify.checks_for(args.level):
        result = verify.run_check(check)
        results.append(result)
        mark = "PASS" if result.ok else "FAIL"
        print(f"{mark} {result.name} ({result.seconds:.2f}s) {result.detail}")
    failed = sum(1 for r in results if not r.ok)
    print(f"summary level={args.level} checks={len(results)} "
          f"passed={len(results) - failed} failed={failed}")
    return 0 if failed == 0 else 1


# --------------------------------------------------------------------- main


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="totaldom",
        description="Exact total domination, Grundy total domination and "
                    "total k-uniformity computations on small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", help="emit a named graph family")
    construct.add_argument("family", choices=[
        "complete", "multipartite", "star", "path", "cycle", "crown",
        "line-complete", "double-cover", "product",
    ])
    construct.add_argument("sizes", nargs="*", type=int)
    construct.add_argument("--format", choices=["g6", "edges", "dot"], default="g6")
    construct.add_argument("--input", default="-",
                           help="graph6 input for double-cover/product (default stdin)")
    construct.add_argument("--max-n", type=int, default=STRUCTURAL_MAX_N)
    construct.set_defaults(handler=_cmd_construct)

    compute = sub.add_parser("compute", help="solve one graph exactly")
    compute.add_argument("path", nargs="?", default="-",
                         help="graph6 file, or - for stdin (default)")
    compute.add_argument("--edges", action="store_true",
                         help="read an 'n m' edge list instead of graph6")
    compute.add_argument("--time-limit", type=float, default=None)
    compute.add_argument("--max-n", type=int, default=SOLVER_MAX_N)
    compute.add_argument("--memo-limit-mib", type=float,
                         default=DEFAULT_MEMO_BYTES / (1 << 20))
    compute.set_defaults(handler=_cmd_compute)

    scan = sub.add_parser("scan", help="filter a graph6 stream to uniform graphs")
    scan.add_argument("path", nargs="?", default="-")
    scan.add_argument("--k", type=int, default=None,
                      help="keep only total k-uniform graphs for this k")
    scan.add_argument("--parallel", type=int, default=_default_threads())
    scan.add_argument("--progress-every", type=int, default=0)
    scan.add_argument("--max-n", type=int, default=SOLVER_MAX_N)
    scan.set_defaults(handler=_cmd_scan)

    verify = sub.add_parser("verify", help="run the built-in verification suite")
    verify.add_argument("--level", choices=["quick", "full"], default="quick")
    verify.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ParseError, InvalidSizeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except IsolatedVertexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except TimeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except MemoLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5


if __name__ == "__main__":
    sys.exit(main())
