"""Immutable k-uniform hypergraphs on vertex set {0, ..., n-1}.

Invariants
----------
* every edge is a strictly ascending k-tuple of vertices in range;
* the edge list is lexicographically sorted and duplicate-free;
* n <= 64, so each edge doubles as a vertex bitmask (bit v <=> vertex v).

Construction normalizes edge order; the text parser does not, it rejects
anything that is not already in normalized form.

Text exchange format (one hypergraph per line):

    n=<n> k=<k> m=<m> : v,v,v;v,v,v;...

with 0-based decimal vertices, ascending within each edge, edges in
lexicographic order, and no whitespace inside the edge list.  For m=0 the
line ends at the colon.
"""

from __future__ import annotations

import re
from typing import Iterable

from .errors import (
    BadArity,
    DuplicateEdge,
    EqualVertices,
    ParseError,
    TooLarge,
    VertexOutOfRange,
)

__all__ = [
    "MAX_VERTICES",
    "Hypergraph",
    "IncidenceGraph",
    "new_hypergraph",
    "add_edge",
    "degree",
    "neighborhood",
    "pair_degree",
    "pair_neighborhood",
    "incidence_graph",
    "from_incidence",
    "format_line",
    "parse_line",
]

MAX_VERTICES = 64


class Hypergraph:
    """A k-uniform hypergraph held in normalized form.

    Attributes
    ----------
    n : int            number of vertices
    k : int            uniformity
    edges : tuple      lex-sorted tuple of ascending k-tuples
    edge_masks : tuple per-edge vertex bitmask, parallel to ``edges``
    degrees : tuple    degree of each vertex
    """

    __slots__ = ("n", "k", "edges", "edge_masks", "degrees", "_adj_masks", "_incident")

    def __init__(self, n: int, k: int, edges: Iterable[Iterable[int]]):
        if not isinstance(n, int) or n < 1:
            raise VertexOutOfRange(f"vertex count must be a positive integer, got {n!r}")
        if n > MAX_VERTICES:
            raise TooLarge(f"n={n} exceeds the {MAX_VERTICES}-vertex cap")
        if not isinstance(k, int) or k < 2 or k > n:
            raise BadArity(f"uniformity must satisfy 2 <= k <= n, got k={k!r} with n={n}")

        normalized = []
        for raw in edges:
            members = tuple(raw)
            for v in members:
                if not isinstance(v, int) or v < 0 or v >= n:
                    raise VertexOutOfRange(f"vertex {v!r} outside 0..{n - 1} in edge {members!r}")
            if len(members) != k or len(set(members)) != k:
                raise BadArity(f"edge {members!r} does not have exactly {k} distinct vertices")
            normalized.append(tuple(sorted(members)))
        normalized.sort()
        for prev, cur in zip(normalized, normalized[1:]):
            if prev == cur:
                raise DuplicateEdge(f"edge {cur!r} listed twice")

        self.n = n
        self.k = k
        self.edges = tuple(normalized)
        self.edge_masks = tuple(_mask(e) for e in self.edges)

        deg = [0] * n
        adj = [0] * n
        incident: list[list[int]] = [[] for _ in range(n)]
        for i, (e, em) in enumerate(zip(self.edges, self.edge_masks)):
            for v in e:
                deg[v] += 1
                adj[v] |= em
                incident[v].append(i)
        for v in range(n):
            adj[v] &= ~(1 << v)
        self.degrees = tuple(deg)
        self._adj_masks = tuple(adj)
        self._incident = tuple(tuple(ix) for ix in incident)

    # -- basic protocol ------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.n, self.k, self.edges) == (other.n, other.k, other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.k, self.edges))

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, k={self.k}, m={self.m})"

    # -- queries -------------------------------------------------------------

    def has_edge(self, members: Iterable[int]) -> bool:
        return _mask(members) in self.edge_masks

    def incident_edges(self, v: int) -> tuple[int, ...]:
        """Indices into ``edges`` of the edges containing v."""
        self._check_vertex(v)
        return self._incident[v]

    def adjacency_mask(self, v: int) -> int:
        """Bitmask of the vertices sharing an edge with v (v excluded)."""
        self._check_vertex(v)
        return self._adj_masks[v]

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or v < 0 or v >= self.n:
            raise VertexOutOfRange(f"vertex {v!r} outside 0..{self.n - 1}")


class IncidenceGraph:
    """Bipartite incidence graph: vertex-nodes 0..n-1, edge-nodes n..n+m-1."""

    __slots__ = ("n", "k", "members")

    def __init__(self, n: int, k: int, members: tuple[tuple[int, ...], ...]):
        self.n = n
        self.k = k
        self.members = members

    @property
    def m(self) -> int:
        return len(self.members)

    def node_count(self) -> int:
        return self.n + self.m

    def is_vertex_node(self, node: int) -> bool:
        return 0 <= node < self.n

    def neighbors(self, node: int) -> tuple[int, ...]:
        """Adjacent nodes; vertex-nodes border the edge-nodes covering them."""
        if self.is_vertex_node(node):
            return tuple(self.n + i for i, e in enumerate(self.members) if node in e)
        return self.members[node - self.n]


# ---------------------------------------------------------------------------
# constructors and queries (module-level surface)
# ---------------------------------------------------------------------------

def new_hypergraph(n: int, k: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Build a normalized hypergraph; see Hypergraph for validation rules."""
    return Hypergraph(n, k, edges)


def add_edge(H: Hypergraph, members: Iterable[int]) -> Hypergraph:
    """A new hypergraph with one extra edge; H itself is untouched."""
    return Hypergraph(H.n, H.k, list(H.edges) + [tuple(members)])


def degree(H: Hypergraph, v: int) -> int:
    H._check_vertex(v)
    return H.degrees[v]


def neighborhood(H: Hypergraph, v: int) -> set[int]:
    """All vertices sharing at least one edge with v (v excluded)."""
    return _bits(H.adjacency_mask(v))


def _check_pair(H: Hypergraph, u: int, v: int) -> None:
    H._check_vertex(u)
    H._check_vertex(v)
    if u == v:
        raise EqualVertices(f"pair requires two distinct vertices, got ({u}, {v})")


def pair_degree(H: Hypergraph, u: int, v: int) -> int:
    """Number of edges containing both u and v."""
    _check_pair(H, u, v)
    pm = (1 << u) | (1 << v)
    return sum(1 for em in H.edge_masks if em & pm == pm)


def pair_neighborhood(H: Hypergraph, u: int, v: int) -> set[int]:
    """Vertices w != u, v lying in some edge that contains both u and v."""
    _check_pair(H, u, v)
    pm = (1 << u) | (1 << v)
    acc = 0
    for em in H.edge_masks:
        if em & pm == pm:
            acc |= em
    return _bits(acc & ~pm)


def incidence_graph(H: Hypergraph) -> IncidenceGraph:
    return IncidenceGraph(H.n, H.k, H.edges)


def from_incidence(ig: IncidenceGraph) -> Hypergraph:
    return Hypergraph(ig.n, ig.k, ig.members)


# ---------------------------------------------------------------------------
# text exchange format
# ---------------------------------------------------------------------------

_HEADER_RE = re.compile(r"^n=(0|[1-9][0-9]*) k=(0|[1-9][0-9]*) m=(0|[1-9][0-9]*) :(?: (\S+))?$")
_NUM_RE = re.compile(r"^(0|[1-9][0-9]*)$")


def format_line(H: Hypergraph) -> str:
    """Serialize to the normalized one-line exchange format."""
    body = ";".join(",".join(str(v) for v in e) for e in H.edges)
    head = f"n={H.n} k={H.k} m={H.m} :"
    return f"{head} {body}" if body else head


def parse_line(text: str, lineno: int | None = None) -> Hypergraph:
    """Parse one exchange-format line, rejecting anything non-normalized.

    Raises
    ------
    ParseError
        On malformed syntax, a miscounted m, vertices out of range or not
        strictly ascending inside an edge, edges out of lexicographic order,
        or duplicate edges.
    """
    match = _HEADER_RE.match(text)
    if not match:
        raise ParseError(f"malformed line: {text!r}", lineno)
    n, k, m = int(match.group(1)), int(match.group(2)), int(match.group(3))
    body = match.group(4)

    if body is None:
        if m != 0:
            raise ParseError(f"m={m} but the edge list is empty", lineno)
        edges: list[tuple[int, ...]] = []
    else:
        edges = []
        for chunk in body.split(";"):
            parts = chunk.split(",")
            vals = []
            for p in parts:
                if not _NUM_RE.match(p):
                    raise ParseError(f"bad vertex token {p!r}", lineno)
                vals.append(int(p))
            if len(vals) != k:
                raise ParseError(f"edge {chunk!r} has {len(vals)} vertices, expected k={k}", lineno)
            if any(a >= b for a, b in zip(vals, vals[1:])):
                raise ParseError(f"edge {chunk!r} is not strictly ascending", lineno)
            if vals[-1] >= n:
                raise ParseError(f"vertex {vals[-1]} outside 0..{n - 1}", lineno)
            edges.append(tuple(vals))
        if len(edges) != m:
            raise ParseError(f"m={m} but {len(edges)} edges listed", lineno)
        for prev, cur in zip(edges, edges[1:]):
            if prev == cur:
                raise ParseError(f"duplicate edge {cur!r}", lineno)
            if prev > cur:
                raise ParseError("edges not in lexicographic order", lineno)

    try:
        return Hypergraph(n, k, edges)
    except (BadArity, VertexOutOfRange, DuplicateEdge, TooLarge) as exc:
        raise ParseError(str(exc), lineno) from exc


# ---------------------------------------------------------------------------
# bit helpers
# ---------------------------------------------------------------------------

def _mask(members: Iterable[int]) -> int:
    acc = 0
    for v in members:
        acc |= 1 << v
    return acc


def _bits(mask: int) -> set[int]:
    out = set()
    while mask:
        low = mask & -mask
        out.add(low.bit_length() - 1)
        mask ^= low
    return out
