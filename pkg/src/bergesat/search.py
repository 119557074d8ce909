"""Exhaustive search for saturated hypergraphs.

Pipeline: backtracking enumeration of all (n, k, m, min-degree) candidates
-> freeness filter -> saturation filter -> isomorphism dedup.  Candidates
are strictly increasing index sequences into the lex-ordered list of all
C(n, k) possible edges, so every qualifying hypergraph appears exactly once.

Pruning is admissible only:

* a partial sequence dies when its remaining edge slots cannot cover the
  total outstanding min-degree deficit, or when some deficient vertex has
  fewer remaining candidate edges (lex order) than it still needs;
* the optional incremental-freeness mode additionally kills any prefix that
  already contains a Berge-K_ell, which loses no saturated hypergraph since
  freeness is monotone under edge removal.

Parallel runs split the tree by its first few levels into prefix jobs; each
worker runs the full pipeline on its subtrees, and the merged result is
sorted canonically, so the representative list does not depend on the worker
count.  Counts exclude nothing: candidates/free/saturated are sums over
subtrees of the same pruned tree (under identical mode flags).
"""

from __future__ import annotations

import multiprocessing as mp
import os
import time
from bisect import bisect_left
from dataclasses import dataclass, field, replace
from itertools import combinations
from math import comb
from typing import Callable, Iterator

from .berge import every_addition_blocked, find_berge_clique, is_berge_free
from .canon import canonical_form
from .errors import InvalidSpec
from .hypergraph import MAX_VERTICES, Hypergraph, parse_line

__all__ = [
    "SearchSpec",
    "SearchReport",
    "enumerate_hypergraphs",
    "find_saturated",
    "saturation_number",
    "representative_filename",
    "write_report",
]

PREFIX_FACTOR = 32  # target prefix jobs per worker


@dataclass(frozen=True)
class SearchSpec:
    """Parameters of one enumeration run."""

    n_vertices: int
    n_edges: int
    uniform: int = 3
    min_degree: int = 0
    ell: int = 4
    workers: int = 1
    free_incremental: bool = False
    legacy_threshold: bool = False
    output_dir: str | None = None

    def validate(self) -> None:
        n, m, k = self.n_vertices, self.n_edges, self.uniform
        if not (1 <= n <= MAX_VERTICES):
            raise InvalidSpec(f"need 1 <= n <= {MAX_VERTICES}, got n={n}")
        if k < 2 or k > n:
            raise InvalidSpec(f"need 2 <= k <= n, got k={k} with n={n}")
        if m < 0 or m > comb(n, k):
            raise InvalidSpec(f"need 0 <= m <= C({n},{k})={comb(n, k)}, got m={m}")
        if self.min_degree < 0:
            raise InvalidSpec(f"min degree must be >= 0, got {self.min_degree}")
        if self.ell < 3:
            raise InvalidSpec(f"clique order must be >= 3, got {self.ell}")
        if self.workers < 1:
            raise InvalidSpec(f"worker count must be >= 1, got {self.workers}")


@dataclass
class SearchReport:
    """Outcome of find_saturated."""

    spec: SearchSpec
    candidates: int
    free: int
    saturated: int
    representatives: list[Hypergraph]
    seconds: float
    per_worker: dict[str, int] = field(default_factory=dict)

    @property
    def classes(self) -> int:
        return len(self.representatives)

    def summary_lines(self) -> list[str]:
        return [
            f"candidates={self.candidates}",
            f"free={self.free}",
            f"saturated={self.saturated}",
            f"classes={self.classes}",
            f"seconds={self.seconds:.3f}",
        ]


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def _edge_pool(n: int, k: int) -> list[tuple[int, ...]]:
    return list(combinations(range(n), k))


def _vertex_slots(pool: list[tuple[int, ...]], n: int) -> list[list[int]]:
    """For each vertex, the ascending pool indices of edges containing it."""
    slots: list[list[int]] = [[] for _ in range(n)]
    for i, e in enumerate(pool):
        for v in e:
            slots[v].append(i)
    return slots


def _iter_index_tuples(
    spec: SearchSpec,
    pool: list[tuple[int, ...]],
    slots: list[list[int]],
    prefix: tuple[int, ...],
    depth_limit: int | None = None,
) -> Iterator[tuple[int, ...]]:
    """All pruning-valid extensions of ``prefix`` to depth_limit (default m)."""
    n, m, k, delta = spec.n_vertices, spec.n_edges, spec.uniform, spec.min_degree
    limit = m if depth_limit is None else depth_limit
    E = len(pool)
    deg = [0] * n
    for i in prefix:
        for v in pool[i]:
            deg[v] += 1
    chosen = list(prefix)
    incremental = spec.free_incremental and depth_limit is None

    def viable(start: int) -> bool:
        remaining = limit - len(chosen)
        if E - start < remaining:
            return False
        if delta > 0:
            deficit = 0
            for v in range(n):
                if deg[v] < delta:
                    deficit += delta - deg[v]
            # deficits are paid from the slots of the full m-edge sequence,
            # not just those up to a splitting depth_limit
            if deficit > (m - len(chosen)) * k:
                return False
            if deficit:
                for v in range(n):
                    need = delta - deg[v]
                    if need > 0:
                        remaining_here = len(slots[v]) - bisect_left(slots[v], start)
                        if remaining_here < need:
                            return False
        return True

    def rec(start: int) -> Iterator[tuple[int, ...]]:
        if len(chosen) == limit:
            # the lookahead bound tolerates a deficit the last edges might
            # have paid; completed sequences need the exact degree condition
            if depth_limit is None and delta > 0 and any(d < delta for d in deg):
                return
            yield tuple(chosen)
            return
        if not viable(start):
            return
        last = E - (limit - len(chosen))
        for i in range(start, last + 1):
            e = pool[i]
            chosen.append(i)
            for v in e:
                deg[v] += 1
            if not (incremental and len(chosen) >= _pairs_of(spec.ell) and _prefix_has_clique(spec, pool, chosen)):
                yield from rec(i + 1)
            for v in e:
                deg[v] -= 1
            chosen.pop()

    start0 = prefix[-1] + 1 if prefix else 0
    yield from rec(start0)


def _pairs_of(ell: int) -> int:
    return ell * (ell - 1) // 2


def _prefix_has_clique(spec: SearchSpec, pool: list[tuple[int, ...]], chosen: list[int]) -> bool:
    H = Hypergraph(spec.n_vertices, spec.uniform, [pool[i] for i in chosen])
    return find_berge_clique(H, spec.ell) is not None


def enumerate_hypergraphs(spec: SearchSpec) -> Iterator[Hypergraph]:
    """Stream every qualifying hypergraph exactly once, lex order of index
    sequences.  Infeasible degree demands yield an empty stream."""
    spec.validate()
    pool = _edge_pool(spec.n_vertices, spec.uniform)
    slots = _vertex_slots(pool, spec.n_vertices)
    base = replace(spec, free_incremental=False)
    for idx in _iter_index_tuples(base, pool, slots, ()):
        yield Hypergraph(spec.n_vertices, spec.uniform, [pool[i] for i in idx])


# ---------------------------------------------------------------------------
# saturation pipeline
# ---------------------------------------------------------------------------

def _scan_subtree(
    spec: SearchSpec, ell: int, prefix: tuple[int, ...]
) -> tuple[int, int, int, set[str], str]:
    pool = _edge_pool(spec.n_vertices, spec.uniform)
    slots = _vertex_slots(pool, spec.n_vertices)
    candidates = free = saturated = 0
    lines: set[str] = set()
    # keep prefix jobs aligned with the serial tree: a clique-bearing prefix
    # would have been cut at its final append
    if (
        spec.free_incremental
        and len(prefix) >= _pairs_of(ell)
        and _prefix_has_clique(spec, pool, list(prefix))
    ):
        return 0, 0, 0, lines, mp.current_process().name
    for idx in _iter_index_tuples(spec, pool, slots, prefix):
        candidates += 1
        H = Hypergraph(spec.n_vertices, spec.uniform, [pool[i] for i in idx])
        if not is_berge_free(H, ell):
            continue
        free += 1
        if every_addition_blocked(H, ell, legacy_threshold=spec.legacy_threshold):
            saturated += 1
            lines.add(canonical_form(H))
    return candidates, free, saturated, lines, mp.current_process().name


def _scan_subtree_star(args: tuple) -> tuple[int, int, int, set[str], str]:
    return _scan_subtree(*args)


def _split_prefixes(spec: SearchSpec, want: int) -> list[tuple[int, ...]]:
    """Partition the tree at the shallowest depth giving >= want prefixes."""
    pool = _edge_pool(spec.n_vertices, spec.uniform)
    slots = _vertex_slots(pool, spec.n_vertices)
    depth = 0
    prefixes: list[tuple[int, ...]] = [()]
    base = replace(spec, free_incremental=False)
    while depth < spec.n_edges and len(prefixes) < want:
        depth += 1
        nxt: list[tuple[int, ...]] = []
        for p in prefixes:
            nxt.extend(_iter_index_tuples(base, pool, slots, p, depth_limit=depth))
        prefixes = nxt
        if not prefixes:
            break
    return prefixes


def find_saturated(
    spec: SearchSpec,
    ell: int | None = None,
    progress: Callable[[str], None] | None = None,
) -> SearchReport:
    """Enumerate, filter to saturated, dedup canonically.

    The representative list depends only on the spec's mathematical fields,
    never on worker count or job order.
    """
    spec.validate()
    ell = spec.ell if ell is None else ell
    t0 = time.perf_counter()
    candidates = free = saturated = 0
    lines: set[str] = set()
    per_worker: dict[str, int] = {}

    if spec.workers == 1:
        tick = _Ticker(progress)
        pool = _edge_pool(spec.n_vertices, spec.uniform)
        slots = _vertex_slots(pool, spec.n_vertices)
        for idx in _iter_index_tuples(spec, pool, slots, ()):
            candidates += 1
            H = Hypergraph(spec.n_vertices, spec.uniform, [pool[i] for i in idx])
            ok_free = is_berge_free(H, ell)
            if ok_free:
                free += 1
                if every_addition_blocked(H, ell, legacy_threshold=spec.legacy_threshold):
                    saturated += 1
                    lines.add(canonical_form(H))
            tick.bump(candidates)
        per_worker[mp.current_process().name] = candidates
    else:
        prefixes = _split_prefixes(spec, PREFIX_FACTOR * spec.workers)
        jobs = [(spec, ell, p) for p in prefixes]
        done = 0
        t_last = time.perf_counter()
        with mp.get_context("fork").Pool(spec.workers) as workers:
            for c, f, s, ls, who in workers.imap_unordered(_scan_subtree_star, jobs):
                candidates += c
                free += f
                saturated += s
                lines |= ls
                per_worker[who] = per_worker.get(who, 0) + c
                done += 1
                now = time.perf_counter()
                if progress is not None and (now - t_last >= 2.0 or done == len(jobs)):
                    progress(f"subtrees={done}/{len(jobs)} candidates={candidates} saturated={saturated}")
                    t_last = now

    reps = [parse_line(line) for line in sorted(lines)]
    report = SearchReport(
        spec=spec,
        candidates=candidates,
        free=free,
        saturated=saturated,
        representatives=reps,
        seconds=time.perf_counter() - t0,
        per_worker=per_worker,
    )
    if spec.output_dir is not None:
        write_report(report, spec.output_dir, ell)
    return report


class _Ticker:
    """Rate-limited progress callback for the serial path."""

    __slots__ = ("fn", "t_last", "t0")

    def __init__(self, fn: Callable[[str], None] | None):
        self.fn = fn
        self.t0 = time.perf_counter()
        self.t_last = self.t0

    def bump(self, candidates: int) -> None:
        if self.fn is None or candidates % 4096:
            return
        now = time.perf_counter()
        if now - self.t_last >= 2.0:
            rate = candidates / max(now - self.t0, 1e-9)
            self.fn(f"candidates={candidates} rate={rate:.0f}/s")
            self.t_last = now


# ---------------------------------------------------------------------------
# persistence and the saturation-number driver
# ---------------------------------------------------------------------------

def representative_filename(spec: SearchSpec, ell: int | None = None) -> str:
    ell = spec.ell if ell is None else ell
    return f"sat_n{spec.uniform}u_{spec.n_vertices}v_{spec.n_edges}e_l{ell}.txt"


def write_report(report: SearchReport, out_dir: str, ell: int | None = None) -> tuple[str, str]:
    """Write sorted canonical lines plus the key=value sidecar; returns paths."""
    name = representative_filename(report.spec, ell)
    os.makedirs(out_dir, exist_ok=True)
    rep_path = os.path.join(out_dir, name)
    with open(rep_path, "w") as fh:
        for H in report.representatives:
            fh.write(canonical_form(H) + "\n")
    side_path = rep_path[:-4] + ".summary"
    with open(side_path, "w") as fh:
        for line in report.summary_lines():
            fh.write(line + "\n")
    return rep_path, side_path


def saturation_number(
    n: int,
    k: int,
    ell: int,
    m_lo: int,
    m_hi: int,
    min_degree: int = 0,
    workers: int = 1,
    free_incremental: bool = False,
    legacy_threshold: bool = False,
    output_dir: str | None = None,
    progress: Callable[[str], None] | None = None,
) -> tuple[int | None, list[Hypergraph]]:
    """Least m in [m_lo, m_hi] admitting a saturated hypergraph, or None.

    The min-degree constraint is applied as given for every m; its
    mathematical validity (losing no minimum saturated hypergraph) is the
    caller's responsibility.
    """
    if m_lo > m_hi:
        raise InvalidSpec(f"empty edge range [{m_lo}, {m_hi}]")
    for m in range(m_lo, m_hi + 1):
        spec = SearchSpec(
            n_vertices=n,
            n_edges=m,
            uniform=k,
            min_degree=min_degree,
            ell=ell,
            workers=workers,
            free_incremental=free_incremental,
            legacy_threshold=legacy_threshold,
        )
        if progress is not None:
            progress(f"m={m} starting")
        report = find_saturated(spec, ell, progress=progress)
        if output_dir is not None:
            write_report(report, output_dir, ell)
        if report.representatives:
            return m, report.representatives
    return None, []
