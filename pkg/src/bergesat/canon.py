"""Canonical forms, isomorphism, and deduplication.

The canonical form of H is the exchange-format line of the lexicographically
least edge list obtainable by relabelling H's vertices -- the least over all
n! permutations, found exactly by a pruned backtracking search:

* labels are assigned one vertex at a time, candidates ordered by a colour
  refinement of the incidence graph so the greedy first descent is already a
  strong incumbent;
* a branch dies when even its optimistic completion (determined edges plus
  each unfinished edge filled with the smallest labels still free) is no
  better than the incumbent;
* a candidate is skipped when swapping it with an already-tried sibling is an
  automorphism, so interchangeable vertices are branched on once.

The search is exact but budgeted: pathological symmetry (many interchangeable
blocks of vertices at once) can exhaust the node budget, which raises
TooLarge rather than returning a wrong answer.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable

from .errors import TooLarge
from .hypergraph import Hypergraph, format_line, parse_line

__all__ = [
    "DEFAULT_NODE_BUDGET",
    "canonical_form",
    "canonical_hypergraph",
    "brute_force_canonical_form",
    "are_isomorphic",
    "dedup",
]

DEFAULT_NODE_BUDGET = 2_000_000


def canonical_form(H: Hypergraph, node_budget: int = DEFAULT_NODE_BUDGET) -> str:
    """Exchange-format line of the lexicographically least relabelling."""
    return format_line(canonical_hypergraph(H, node_budget))


def canonical_hypergraph(H: Hypergraph, node_budget: int = DEFAULT_NODE_BUDGET) -> Hypergraph:
    """The least relabelling itself."""
    if H.m == 0:
        return H
    return Hypergraph(H.n, H.k, _lex_min_edges(H, node_budget))


def brute_force_canonical_form(H: Hypergraph) -> str:
    """Reference route: minimum over every permutation explicitly.  Small n only."""
    best = None
    for perm in permutations(range(H.n)):
        relab = sorted(tuple(sorted(perm[v] for v in e)) for e in H.edges)
        if best is None or relab < best:
            best = relab
    return format_line(Hypergraph(H.n, H.k, best or []))


def are_isomorphic(H1: Hypergraph, H2: Hypergraph) -> bool:
    """Invariant prefilters first, canonical-form equality as the decider."""
    if (H1.n, H1.k, H1.m) != (H2.n, H2.k, H2.m):
        return False
    if sorted(H1.degrees) != sorted(H2.degrees):
        return False
    if _pair_degree_multiset(H1) != _pair_degree_multiset(H2):
        return False
    return canonical_form(H1) == canonical_form(H2)


def dedup(hypergraphs: Iterable[Hypergraph]) -> list[Hypergraph]:
    """One representative (the canonical-least labelling) per isomorphism
    class, sorted by canonical line."""
    lines = {canonical_form(H) for H in hypergraphs}
    return [parse_line(line) for line in sorted(lines)]


# ---------------------------------------------------------------------------
# exact search
# ---------------------------------------------------------------------------

def _lex_min_edges(H: Hypergraph, node_budget: int) -> list[tuple[int, ...]]:
    n, k = H.n, H.k
    edges = H.edges
    incident = H._incident
    colors = _refine_colors(H)
    twins = _twin_masks(H)

    assigned = [-1] * n
    edge_labels: list[list[int]] = [[] for _ in edges]  # assigned labels per edge
    best: list[tuple[int, ...]] | None = None
    nodes = 0

    def lower_bound() -> list[tuple[int, ...]]:
        t = sum(1 for a in assigned if a >= 0)
        out = []
        for labs in edge_labels:
            missing = k - len(labs)
            if missing:
                out.append(tuple(sorted(labs) + list(range(t, t + missing))))
            else:
                out.append(tuple(sorted(labs)))
        out.sort()
        return out

    def candidate_key(v: int):
        # prefer vertices whose edges are closest to fully labelled, then
        # high degree, then refinement colour; index breaks the last ties
        progress = sum(len(edge_labels[j]) for j in incident[v])
        return (-progress, -H.degrees[v], colors[v], v)

    def dfs(t: int) -> None:
        nonlocal best, nodes
        if t == n:
            final = lower_bound()
            if best is None or final < best:
                best = final
            return
        if best is not None and lower_bound() >= best:
            return
        cands = sorted((v for v in range(n) if assigned[v] < 0), key=candidate_key)
        tried = 0
        for v in cands:
            if twins[v] & tried:
                tried |= 1 << v
                continue
            nodes += 1
            if nodes > node_budget:
                raise TooLarge(f"canonical search exceeded {node_budget} nodes at n={n}, m={H.m}")
            assigned[v] = t
            for j in incident[v]:
                edge_labels[j].append(t)
            dfs(t + 1)
            for j in incident[v]:
                edge_labels[j].pop()
            assigned[v] = -1
            tried |= 1 << v

    dfs(0)
    assert best is not None
    return best


def _refine_colors(H: Hypergraph) -> list[int]:
    """Colour refinement on the incidence graph; returns per-vertex colours.

    Colour ids are ranks of sorted signatures, so they are stable under
    relabelling of the input.
    """
    n, m = H.n, H.m
    vcol = [0] * n
    ecol = [0] * m
    v_classes, e_classes = 1, 1
    while True:
        vsig = [
            (vcol[v], tuple(sorted(ecol[j] for j in H._incident[v]))) for v in range(n)
        ]
        esig = [
            (ecol[j], tuple(sorted(vcol[v] for v in H.edges[j]))) for j in range(m)
        ]
        vranks = {sig: i for i, sig in enumerate(sorted(set(vsig)))}
        eranks = {sig: i for i, sig in enumerate(sorted(set(esig)))}
        vcol = [vranks[s] for s in vsig]
        ecol = [eranks[s] for s in esig]
        if len(vranks) == v_classes and len(eranks) == e_classes:
            return vcol
        v_classes, e_classes = len(vranks), len(eranks)


def _twin_masks(H: Hypergraph) -> list[int]:
    """twins[v] = bitmask of u such that the transposition (u v) preserves E."""
    n = H.n
    mask_set = set(H.edge_masks)
    twins = [0] * n
    for u in range(n):
        bu = 1 << u
        for v in range(u + 1, n):
            bv = 1 << v
            swap = bu | bv
            ok = True
            for em in H.edge_masks:
                if bool(em & bu) != bool(em & bv) and (em ^ swap) not in mask_set:
                    ok = False
                    break
            if ok:
                twins[u] |= bv
                twins[v] |= bu
    return twins


def _pair_degree_multiset(H: Hypergraph) -> list[int]:
    counts = []
    for u in range(H.n):
        for v in range(u + 1, H.n):
            pm = (1 << u) | (1 << v)
            counts.append(sum(1 for em in H.edge_masks if em & pm == pm))
    return sorted(counts)
