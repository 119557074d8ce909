"""Maximum bipartite matching via Hopcroft-Karp, sized for tiny auxiliary graphs.

The auxiliary graphs this package builds have a handful of left nodes (vertex
pairs of a candidate core) and one right node per hyperedge, so the constant
factors matter more than asymptotics; everything below is plain lists and an
explicit BFS/DFS.  Iteration order is fixed by node index, which makes the
matched edge set reproducible run to run, but callers should only rely on the
cardinality.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .errors import EqualVertices
from .hypergraph import Hypergraph

__all__ = ["BipartiteAux", "Matching", "build_pair_edge_aux", "max_matching"]

_UNMATCHED = -1


class BipartiteAux:
    """Bipartite graph between vertex pairs and hyperedge indices.

    left[i] is a vertex pair, right[j] an index into the source hypergraph's
    edge list, adj[i] the sorted right-indices adjacent to left[i].
    """

    __slots__ = ("left", "right", "adj")

    def __init__(
        self,
        left: tuple[tuple[int, int], ...],
        right: tuple[int, ...],
        adj: tuple[tuple[int, ...], ...],
    ):
        self.left = left
        self.right = right
        self.adj = adj


class Matching:
    """A matching as a tuple of (left index, right index) pairs."""

    __slots__ = ("pairs",)

    def __init__(self, pairs: tuple[tuple[int, int], ...]):
        self.pairs = pairs

    @property
    def cardinality(self) -> int:
        return len(self.pairs)


def build_pair_edge_aux(H: Hypergraph, pairs: Sequence[tuple[int, int]]) -> BipartiteAux:
    """Auxiliary graph joining each pair to every hyperedge containing it."""
    left = []
    for u, v in pairs:
        H._check_vertex(u)
        H._check_vertex(v)
        if u == v:
            raise EqualVertices(f"pair ({u}, {v}) is degenerate")
        left.append((u, v) if u < v else (v, u))
    adj = []
    for u, v in left:
        pm = (1 << u) | (1 << v)
        adj.append(tuple(j for j, em in enumerate(H.edge_masks) if em & pm == pm))
    return BipartiteAux(tuple(left), tuple(range(H.m)), tuple(adj))


def max_matching(aux: BipartiteAux, target: int | None = None) -> Matching:
    """Maximum-cardinality matching; stops early once ``target`` is reached.

    The early exit is sound: Hopcroft-Karp only ever grows the matching, so a
    run stopped at cardinality >= target certifies the target is attainable.
    """
    match_l, match_r = _hopcroft_karp(aux.adj, len(aux.right), target)
    pairs = tuple((i, j) for i, j in enumerate(match_l) if j != _UNMATCHED)
    return Matching(pairs)


def _hopcroft_karp(
    adj: Sequence[Sequence[int]], n_right: int, target: int | None
) -> tuple[list[int], list[int]]:
    n_left = len(adj)
    match_l = [_UNMATCHED] * n_left
    match_r = [_UNMATCHED] * n_right
    size = 0
    if target is not None and size >= target:
        return match_l, match_r

    dist = [0] * n_left
    INF = n_left + n_right + 1

    def bfs() -> bool:
        queue = deque()
        for i in range(n_left):
            if match_l[i] == _UNMATCHED:
                dist[i] = 0
                queue.append(i)
            else:
                dist[i] = INF
        found = False
        while queue:
            i = queue.popleft()
            for j in adj[i]:
                i2 = match_r[j]
                if i2 == _UNMATCHED:
                    found = True
                elif dist[i2] == INF:
                    dist[i2] = dist[i] + 1
                    queue.append(i2)
        return found

    def dfs(i: int) -> bool:
        for j in adj[i]:
            i2 = match_r[j]
            if i2 == _UNMATCHED or (dist[i2] == dist[i] + 1 and dfs(i2)):
                match_l[i] = j
                match_r[j] = i
                return True
        dist[i] = INF
        return False

    while bfs():
        for i in range(n_left):
            if match_l[i] == _UNMATCHED and dfs(i):
                size += 1
                if target is not None and size >= target:
                    return match_l, match_r
    return match_l, match_r
