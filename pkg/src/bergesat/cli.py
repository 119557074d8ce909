"""Command line front end.

Subcommands
-----------
enumerate   search one (n, m) cell and write representative + summary files
check       classify exchange-format lines as free / saturated
construct   build a member of an extremal family and verify it
satnum      least edge count admitting a saturated hypergraph
canon       canonicalize exchange-format lines, optionally deduplicating

stdout carries only machine-parseable results; progress goes to stderr.
Exit codes: 0 success, 1 invalid parameters, 2 input parse error,
3 canonicalization budget exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Callable

from .berge import is_berge_free, is_saturated
from .canon import canonical_form
from .constructions import _EVEN_BASE_EDGES, attach_gadgets, construction_even, construction_odd, tight_cycle
from .errors import BadParity, BergesatError, InvalidSpec, ParseError, TooLarge
from .hypergraph import Hypergraph, format_line, parse_line
from .search import SearchSpec, find_saturated, saturation_number

__all__ = ["main", "build_parser"]


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad flags; the contract reserves 2 for input
    parse errors, so flag errors are remapped to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _add_common(sub: argparse.ArgumentParser, *, threads: bool = True) -> None:
    sub.add_argument("--ell", type=int, default=4, help="clique order to block (default 4)")
    sub.add_argument(
        "--legacy-goodpair-threshold",
        action="store_true",
        help="demand ell-1 qualifying common neighbours instead of ell-2 (stricter, misses some good pairs)",
    )
    if threads:
        sub.add_argument("--threads", type=int, default=None, help="worker processes (default: BERGESAT_THREADS or 1)")
    sub.add_argument("--quiet", action="store_true", help="suppress progress output on stderr")


def build_parser() -> _Parser:
    parser = _Parser(prog="bergesat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("enumerate", help="search one (n, m) cell for saturated hypergraphs")
    p.add_argument("--n", type=int, required=True, help="number of vertices")
    p.add_argument("--edges", type=int, required=True, help="number of edges")
    p.add_argument("--uniform", type=int, default=3, help="edge size (default 3)")
    p.add_argument("--min-degree", type=int, default=0, help="restrict to minimum degree >= this")
    p.add_argument("--free-incremental", action="store_true", help="prune prefixes already containing a Berge clique")
    p.add_argument("--outdir", default=".", help="directory for the representative and summary files")
    _add_common(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("check", help="classify exchange-format lines")
    p.add_argument("input", help="file of exchange-format lines, or - for stdin")
    _add_common(p, threads=False)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("construct", help="build one extremal hypergraph and verify it")
    p.add_argument("--n", type=int, required=True, help="number of vertices")
    p.add_argument("--family", choices=("odd", "even"), required=True)
    p.add_argument("--copies-pair", default=None, metavar="U,V", help="attach gadgets on this pair instead of 0,1")
    p.add_argument("--out", default=None, help="write the exchange line here instead of stdout")
    p.add_argument("--quiet", action="store_true", help="suppress progress output on stderr")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("satnum", help="least edge count admitting a saturated hypergraph")
    p.add_argument("--n", type=int, required=True, help="number of vertices")
    p.add_argument("--uniform", type=int, default=3, help="edge size (default 3)")
    p.add_argument("--max-edges", type=int, required=True, help="largest edge count to try")
    p.add_argument(
        "--min-degree-from-lemma",
        action="store_true",
        help="restrict to minimum degree 2; refused unless n >= 7 and --max-edges <= n, "
        "the regime where that loses no minimum saturated hypergraph",
    )
    p.add_argument("--free-incremental", action="store_true", help="prune prefixes already containing a Berge clique")
    p.add_argument("--outdir", default=None, help="also write per-m representative and summary files here")
    _add_common(p)
    p.set_defaults(func=_cmd_satnum)

    p = sub.add_parser("canon", help="canonicalize exchange-format lines")
    p.add_argument("input", help="file of exchange-format lines, or - for stdin")
    p.add_argument("--dedup", action="store_true", help="drop isomorphic duplicates and sort")
    p.add_argument("--out", default=None, help="write results here instead of stdout")
    p.set_defaults(func=_cmd_canon)

    return parser


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------

def _threads(args) -> int:
    if getattr(args, "threads", None) is not None:
        if args.threads < 1:
            raise InvalidSpec(f"worker count must be >= 1, got {args.threads}")
        return args.threads
    env = os.environ.get("BERGESAT_THREADS")
    if env is None:
        return 1
    try:
        value = int(env)
    except ValueError:
        raise InvalidSpec(f"BERGESAT_THREADS={env!r} is not an integer") from None
    if value < 1:
        raise InvalidSpec(f"BERGESAT_THREADS must be >= 1, got {value}")
    return value


def _progress(args) -> Callable[[str], None] | None:
    if getattr(args, "quiet", False):
        return None

    def emit(msg: str) -> None:
        print(msg, file=sys.stderr, flush=True)

    return emit


def _read_lines(path: str):
    """Yield (lineno, text) pairs with trailing newlines stripped."""
    if path == "-":
        for i, raw in enumerate(sys.stdin, 1):
            yield i, raw.rstrip("\n")
        return
    with open(path) as fh:
        for i, raw in enumerate(fh, 1):
            yield i, raw.rstrip("\n")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_enumerate(args) -> int:
    spec = SearchSpec(
        n_vertices=args.n,
        n_edges=args.edges,
        uniform=args.uniform,
        min_degree=args.min_degree,
        ell=args.ell,
        workers=_threads(args),
        free_incremental=args.free_incremental,
        legacy_threshold=args.legacy_goodpair_threshold,
        output_dir=args.outdir,
    )
    report = find_saturated(spec, progress=_progress(args))
    for line in report.summary_lines():
        print(line)
    return 0


def _cmd_check(args) -> int:
    for lineno, text in _read_lines(args.input):
        H = parse_line(text, lineno)
        free = is_berge_free(H, args.ell)
        sat = free and is_saturated(H, args.ell, legacy_threshold=args.legacy_goodpair_threshold)
        print(("FREE" if free else "NOTFREE") + " " + ("SATURATED" if sat else "NOTSATURATED"))
    return 0


def _parse_pair(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise InvalidSpec(f"pair must be two comma-separated vertices, got {text!r}")
    try:
        u, v = int(parts[0]), int(parts[1])
    except ValueError:
        raise InvalidSpec(f"pair must be two comma-separated vertices, got {text!r}") from None
    return u, v


def _build_construction(n: int, family: str, pair: tuple[int, int] | None) -> Hypergraph:
    if pair is None:
        return construction_odd(n) if family == "odd" else construction_even(n)
    u, v = pair
    if family == "odd":
        if n % 2 == 0 or n < 5:
            raise BadParity(f"odd construction needs odd n >= 5, got {n}")
        if n == 5:
            raise InvalidSpec("n=5 attaches no gadgets, so there is no pair to choose")
        return attach_gadgets(tight_cycle(3, 5), u, v, (n - 5) // 2)
    if n % 2 == 1 or n < 8:
        raise BadParity(f"even construction needs even n >= 8, got {n}")
    base = Hypergraph(6, 3, _EVEN_BASE_EDGES)
    return attach_gadgets(base, u, v, (n - 6) // 2)


def _cmd_construct(args) -> int:
    pair = None if args.copies_pair is None else _parse_pair(args.copies_pair)
    H = _build_construction(args.n, args.family, pair)
    ok = is_saturated(H, 4)
    line = format_line(H)
    if args.out is not None:
        with open(args.out, "w") as fh:
            fh.write(line + "\n")
    else:
        print(line)
    print(f"saturated={'true' if ok else 'false'}")
    return 0 if ok else 1


def _cmd_satnum(args) -> int:
    if args.min_degree_from_lemma:
        if args.n < 7 or args.max_edges > args.n:
            raise InvalidSpec(
                "--min-degree-from-lemma needs n >= 7 and --max-edges <= n; "
                f"got n={args.n}, max-edges={args.max_edges}"
            )
        min_degree = 2
    else:
        min_degree = 0
    m, _reps = saturation_number(
        args.n,
        args.uniform,
        args.ell,
        0,
        args.max_edges,
        min_degree=min_degree,
        workers=_threads(args),
        free_incremental=args.free_incremental,
        legacy_threshold=args.legacy_goodpair_threshold,
        output_dir=args.outdir,
        progress=_progress(args),
    )
    print(f"sat={'none' if m is None else m}")
    return 0


def _cmd_canon(args) -> int:
    out_lines = []
    for lineno, text in _read_lines(args.input):
        H = parse_line(text, lineno)
        out_lines.append(canonical_form(H))
    if args.dedup:
        out_lines = sorted(set(out_lines))
    if args.out is not None:
        with open(args.out, "w") as fh:
            for line in out_lines:
                fh.write(line + "\n")
    else:
        for line in out_lines:
            print(line)
    return 0


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "func"):
        parser.print_usage(sys.stderr)
        return 1
    try:
        return args.func(args)
    except ParseError as exc:
        where = f"line {exc.lineno}: " if exc.lineno is not None else ""
        print(f"error: {where}{exc}", file=sys.stderr)
        return 2
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except BergesatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
