"""Explicit saturated hypergraphs: tight cycles, pair gadgets, and the two
extremal families (odd orders from the tight 5-cycle, even orders from a
6-vertex base), plus a generator for whole families of non-isomorphic
extremal hypergraphs.

A *pair gadget* on a host pair (u, v) is two fresh vertices a1, a2 together
with the edges {a1, a2, u} and {a1, a2, v}; the fresh vertices end with
degree exactly 2.  Attaching gadgets is how an extremal hypergraph on n
vertices grows to one on n+2, provided the host pair survives the
saturation check (``gadget_addable``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .berge import is_saturated
from .canon import dedup
from .errors import BadLength, BadParity, EqualVertices, InvalidSpec
from .hypergraph import Hypergraph

__all__ = [
    "PairGadget",
    "tight_cycle",
    "attach_gadgets",
    "gadget_addable",
    "construction_odd",
    "construction_even",
    "extremal_family",
]


@dataclass(frozen=True)
class PairGadget:
    """One gadget instance: where it attaches and its two fresh vertices."""

    u: int
    v: int
    a1: int
    a2: int

    def edges(self) -> list[tuple[int, int, int]]:
        return [
            tuple(sorted((self.a1, self.a2, self.u))),
            tuple(sorted((self.a1, self.a2, self.v))),
        ]


def tight_cycle(r: int, length: int) -> Hypergraph:
    """The r-uniform tight cycle: every window of r consecutive vertices
    mod ``length`` is an edge, giving exactly ``length`` distinct edges.

    Raises
    ------
    BadLength
        If length <= r; at length == r all windows coincide.
    """
    if length <= r:
        raise BadLength(f"tight cycle needs length > r, got length={length}, r={r}")
    edges = [tuple(sorted((i + j) % length for j in range(r))) for i in range(length)]
    return Hypergraph(length, r, edges)


def attach_gadgets(H: Hypergraph, u: int, v: int, copies: int) -> Hypergraph:
    """H plus ``copies`` disjoint pair gadgets, all on (u, v).

    Fresh vertices are appended in attachment order: gadget i uses vertices
    n + 2i and n + 2i + 1 of the result, keeping the labelling reproducible.
    """
    H._check_vertex(u)
    H._check_vertex(v)
    if u == v:
        raise EqualVertices(f"attachment pair ({u}, {v}) is degenerate")
    if copies < 1:
        raise InvalidSpec(f"need at least one gadget copy, got {copies}")
    edges = list(H.edges)
    for i in range(copies):
        g = PairGadget(u, v, H.n + 2 * i, H.n + 2 * i + 1)
        edges.extend(g.edges())
    return Hypergraph(H.n + 2 * copies, H.k, edges)


def gadget_addable(H: Hypergraph, u: int, v: int) -> bool:
    """Whether one gadget on (u, v) leaves the hypergraph saturated."""
    return is_saturated(attach_gadgets(H, u, v, 1), 4)


def construction_odd(n: int) -> Hypergraph:
    """The odd-order extremal family: the 3-uniform tight 5-cycle plus
    (n-5)/2 gadgets on the pair (0, 1).  n vertices, n edges."""
    if n % 2 == 0 or n < 5:
        raise BadParity(f"odd construction needs odd n >= 5, got {n}")
    base = tight_cycle(3, 5)
    if n == 5:
        return base
    return attach_gadgets(base, 0, 1, (n - 5) // 2)


_EVEN_BASE_EDGES = [
    (0, 1, 2),
    (0, 2, 3),
    (0, 2, 4),
    (0, 1, 3),
    (0, 3, 5),
    (1, 4, 5),
]


def construction_even(n: int) -> Hypergraph:
    """The even-order extremal family: a fixed 6-vertex, 6-edge base plus
    (n-6)/2 gadgets on the pair (0, 1).  Defined for even n >= 8; the
    6-vertex extremal hypergraphs have only 5 edges and come from search."""
    if n % 2 == 1 or n < 8:
        raise BadParity(f"even construction needs even n >= 8, got {n}")
    base = Hypergraph(6, 3, _EVEN_BASE_EDGES)
    return attach_gadgets(base, 0, 1, (n - 6) // 2)


def extremal_family(n: int, hosts: Iterable[Hypergraph]) -> list[Hypergraph]:
    """All n-vertex extensions of the hosts by gadgets on addable pairs,
    deduplicated up to isomorphism.

    Hosts whose order differs from n by an odd amount or exceeds n are
    skipped; a host of order exactly n stands for itself.
    """
    grown: list[Hypergraph] = []
    for host in hosts:
        gap = n - host.n
        if gap < 0 or gap % 2:
            continue
        copies = gap // 2
        if copies == 0:
            grown.append(host)
            continue
        for u, v in combinations(range(host.n), 2):
            if gadget_addable(host, u, v):
                grown.append(attach_gadgets(host, u, v, copies))
    return dedup(grown)
