"""Berge-clique detection, pair classification, and saturation checks.

Definitions used throughout (ell >= 2 is the clique order, H is k-uniform):

* A Berge-K_ell in H is an ell-set T of "core" vertices together with an
  injection from the C(ell,2) pairs of T into E(H) such that each pair is
  contained in its image.
* H is Berge-K_ell-free when no such copy exists.
* For distinct u, v, the pair (u, v) is *good* when adding any new hyperedge
  containing both creates a Berge-K_ell in which the added edge is the image
  of the core pair (u, v); only the remaining C(ell,2)-1 pairs need images
  among the existing edges, so which extra vertices the added edge carries is
  irrelevant.  Otherwise the pair is *bad*.
* H is *saturated* when it is free and every k-set S not already an edge
  contains at least one good pair, i.e. adding S always creates a Berge-K_ell.

Two independent routes are provided for the expensive predicates: the
matching-based checks used in production, and definitional brute-force
searches (``brute_force_*``) used to cross-validate them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import EqualVertices, UnsupportedParameters
from .hypergraph import Hypergraph, add_edge
from .matching import _hopcroft_karp

__all__ = [
    "BergeWitness",
    "PairClassification",
    "find_berge_clique",
    "is_berge_free",
    "classify_pair",
    "fast_bad_filters",
    "is_saturated",
    "every_addition_blocked",
    "brute_force_find_berge",
    "brute_force_is_saturated",
    "validate_witness",
    "validate_pair_witness",
]


@dataclass(frozen=True)
class BergeWitness:
    """A Berge-K_ell copy: core vertices plus the pair -> edge-index injection."""

    core: tuple[int, ...]
    assignment: dict[tuple[int, int], int]


@dataclass(frozen=True)
class PairClassification:
    """Verdict for one vertex pair; good pairs carry their witness.

    For a good pair the assignment covers every core pair except (u, v)
    itself, whose image would be the hypothetical added edge.
    """

    pair: tuple[int, int]
    good: bool
    core: tuple[int, ...] | None = None
    assignment: dict[tuple[int, int], int] | None = None


# ---------------------------------------------------------------------------
# freeness
# ---------------------------------------------------------------------------

def find_berge_clique(H: Hypergraph, ell: int) -> BergeWitness | None:
    """First Berge-K_ell copy in core-lexicographic order, or None.

    Candidate cores are restricted to vertices of degree >= ell-1 whose pairs
    all have positive pair degree; both conditions are necessary, since every
    core vertex lies in ell-1 distinct images and every core pair in one.
    """
    need = ell * (ell - 1) // 2
    if ell < 2 or H.n < ell or H.m < need:
        return None
    adjm = H._adj_masks
    eligible = [v for v in range(H.n) if H.degrees[v] >= ell - 1]
    if len(eligible) < ell:
        return None

    pair_edges: dict[tuple[int, int], tuple[int, ...]] = {}

    def edges_of(u: int, v: int) -> tuple[int, ...]:
        got = pair_edges.get((u, v))
        if got is None:
            pm = (1 << u) | (1 << v)
            got = tuple(j for j, em in enumerate(H.edge_masks) if em & pm == pm)
            pair_edges[(u, v)] = got
        return got

    for core in combinations(eligible, ell):
        if any(not (adjm[u] >> v) & 1 for u, v in combinations(core, 2)):
            continue
        pairs = tuple(combinations(core, 2))
        adj = [edges_of(u, v) for u, v in pairs]
        match_l, _ = _hopcroft_karp(adj, H.m, need)
        if sum(1 for j in match_l if j >= 0) >= need:
            return BergeWitness(core, {p: j for p, j in zip(pairs, match_l)})
    return None


def is_berge_free(H: Hypergraph, ell: int) -> bool:
    return find_berge_clique(H, ell) is None


def validate_witness(H: Hypergraph, w: BergeWitness, ell: int) -> bool:
    """Independent check of a full witness: bijectivity and containment."""
    if len(w.core) != ell or len(set(w.core)) != ell:
        return False
    if any(v < 0 or v >= H.n for v in w.core):
        return False
    if set(w.assignment) != set(combinations(sorted(w.core), 2)):
        return False
    images = list(w.assignment.values())
    if len(set(images)) != len(images):
        return False
    for (u, v), j in w.assignment.items():
        if j < 0 or j >= H.m:
            return False
        if u not in H.edges[j] or v not in H.edges[j]:
            return False
    return True


# ---------------------------------------------------------------------------
# pair classification
# ---------------------------------------------------------------------------

def fast_bad_filters(H: Hypergraph, u: int, v: int) -> bool:
    """Cheap sufficient conditions for (u, v) to be bad; 3-uniform, ell=4 only.

    True means provably bad; False carries no information.  Rules, each sound
    because a new Berge-K_4 on the added edge must use every existing edge
    containing both u and v and must draw its other two core vertices from
    their common neighbourhood:

    (a) pair_degree(u, v) >= 3: three forced edges cannot fit the two
        non-(u,v) core slots they are confined to;
    (b) some vertex of an edge through both u and v has degree <= 2, so it
        cannot serve as a core vertex it is forced to be;
    (c) fewer than two common neighbours of u and v have degree >= 3;
    (d) an edge {u, v, w} with degree(w) <= 2 and min(deg u, deg v) <= 2
        (two low-degree vertices in one edge kill all of its pairs).
    """
    if H.k != 3:
        raise UnsupportedParameters(f"fast bad-pair rules are defined for k=3 only, got k={H.k}")
    H._check_vertex(u)
    H._check_vertex(v)
    if u == v:
        raise EqualVertices(f"pair ({u}, {v}) is degenerate")

    deg = H.degrees
    pm = (1 << u) | (1 << v)
    pd = 0
    pn_mask = 0
    for em in H.edge_masks:
        if em & pm == pm:
            pd += 1
            pn_mask |= em
    pn_mask &= ~pm

    if pd >= 3:
        return True  # (a)
    w_mask = pn_mask
    while w_mask:
        low = w_mask & -w_mask
        w = low.bit_length() - 1
        w_mask ^= low
        if deg[w] <= 2:
            return True  # (b), and with min(deg u, deg v) <= 2 also (d)
    common = H._adj_masks[u] & H._adj_masks[v] & ~pm
    strong = sum(1 for w in _iter_bits(common) if deg[w] >= 3)
    if strong < 2:
        return True  # (c)
    return False


def classify_pair(
    H: Hypergraph, u: int, v: int, ell: int, *, legacy_threshold: bool = False
) -> PairClassification:
    """Classify (u, v) as good or bad for Berge-K_ell creation.

    Good iff some ell-set T containing u and v, with the other ell-2 members
    common neighbours of both, admits a matching of all core pairs except
    (u, v) into distinct existing edges.  Candidates are further restricted
    to degree >= ell-1, which such a matching forces on every other core
    vertex.

    ``legacy_threshold`` reproduces a historical variant that demands ell-1
    qualifying common neighbours instead of the necessary ell-2; it can
    misclassify good pairs as bad and exists only for comparison runs.
    """
    H._check_vertex(u)
    H._check_vertex(v)
    if u == v:
        raise EqualVertices(f"pair ({u}, {v}) is degenerate")
    if ell < 3:
        raise UnsupportedParameters(f"pair classification needs ell >= 3, got {ell}")
    pair = (u, v) if u < v else (v, u)

    deg = H.degrees
    # u and v must each supply ell-2 distinct existing edges for their own
    # non-(u,v) core pairs
    if deg[u] < ell - 2 or deg[v] < ell - 2:
        return PairClassification(pair, False)
    if H.k == 3 and ell == 4 and fast_bad_filters(H, u, v):
        return PairClassification(pair, False)

    pm = (1 << u) | (1 << v)
    common = [
        w
        for w in _iter_bits(H._adj_masks[u] & H._adj_masks[v] & ~pm)
        if deg[w] >= ell - 1
    ]
    threshold = (ell - 1) if legacy_threshold else (ell - 2)
    if len(common) < threshold:
        return PairClassification(pair, False)

    need = ell * (ell - 1) // 2 - 1
    adjm = H._adj_masks
    subsets = sorted(
        combinations(sorted(common), ell - 2),
        key=lambda s: (-min(deg[w] for w in s), s),
    )
    for extra in subsets:
        if any(not (adjm[x] >> y) & 1 for x, y in combinations(extra, 2)):
            continue
        core = tuple(sorted((u, v) + extra))
        pairs = tuple(p for p in combinations(core, 2) if p != pair)
        adj = []
        ok = True
        for a, b in pairs:
            qm = (1 << a) | (1 << b)
            row = tuple(j for j, em in enumerate(H.edge_masks) if em & qm == qm)
            if not row:
                ok = False
                break
            adj.append(row)
        if not ok:
            continue
        match_l, _ = _hopcroft_karp(adj, H.m, need)
        if sum(1 for j in match_l if j >= 0) >= need:
            return PairClassification(pair, True, core, {p: j for p, j in zip(pairs, match_l)})
    return PairClassification(pair, False)


def validate_pair_witness(H: Hypergraph, cls: PairClassification, ell: int) -> bool:
    """Independent check of a good-pair witness (all core pairs except the pair)."""
    if not cls.good or cls.core is None or cls.assignment is None:
        return False
    u, v = cls.pair
    if len(cls.core) != ell or len(set(cls.core)) != ell:
        return False
    if u not in cls.core or v not in cls.core:
        return False
    expected = set(combinations(tuple(sorted(cls.core)), 2)) - {cls.pair}
    if set(cls.assignment) != expected:
        return False
    images = list(cls.assignment.values())
    if len(set(images)) != len(images):
        return False
    for (a, b), j in cls.assignment.items():
        if j < 0 or j >= H.m or a not in H.edges[j] or b not in H.edges[j]:
            return False
    return True


# ---------------------------------------------------------------------------
# saturation
# ---------------------------------------------------------------------------

def is_saturated(H: Hypergraph, ell: int, *, legacy_threshold: bool = False) -> bool:
    """Free, and every k-set that is not an edge contains a good pair.

    Equivalent to: adding any new edge creates a Berge-K_ell.  Not free
    implies not saturated.
    """
    if not is_berge_free(H, ell):
        return False
    return every_addition_blocked(H, ell, legacy_threshold=legacy_threshold)


def every_addition_blocked(H: Hypergraph, ell: int, *, legacy_threshold: bool = False) -> bool:
    """The saturation condition alone, assuming freeness was checked already.

    The 3-uniform ell=4 case first scans for a non-edge whose pairs are all
    *provably* bad by the fast rules, which rejects most sparse inputs
    without any matching work.
    """
    n, k = H.n, H.k
    edge_masks = set(H.edge_masks)

    if k == 3 and ell == 4 and not legacy_threshold:
        deg = H.degrees
        badm = [0] * n
        for a, b in combinations(range(n), 2):
            if deg[a] < 2 or deg[b] < 2 or fast_bad_filters(H, a, b):
                badm[a] |= 1 << b
                badm[b] |= 1 << a
        for S in combinations(range(n), 3):
            a, b, c = S
            if not (badm[a] >> b) & 1 or not (badm[a] >> c) & 1 or not (badm[b] >> c) & 1:
                continue
            if (1 << a) | (1 << b) | (1 << c) not in edge_masks:
                return False

    verdicts: dict[tuple[int, int], bool] = {}

    def good(a: int, b: int) -> bool:
        got = verdicts.get((a, b))
        if got is None:
            got = classify_pair(H, a, b, ell, legacy_threshold=legacy_threshold).good
            verdicts[(a, b)] = got
        return got

    for S in combinations(range(n), k):
        sm = 0
        for x in S:
            sm |= 1 << x
        if sm in edge_masks:
            continue
        if not any(good(a, b) for a, b in combinations(S, 2)):
            return False
    return True


# ---------------------------------------------------------------------------
# brute-force reference route
# ---------------------------------------------------------------------------

def brute_force_find_berge(H: Hypergraph, ell: int) -> BergeWitness | None:
    """Definitional search: try every core and every pair -> edge injection."""
    need = ell * (ell - 1) // 2
    if ell < 2 or H.n < ell or H.m < need:
        return None
    for core in combinations(range(H.n), ell):
        pairs = tuple(combinations(core, 2))
        used = [False] * H.m
        assignment: dict[tuple[int, int], int] = {}

        def extend(idx: int) -> bool:
            if idx == len(pairs):
                return True
            a, b = pairs[idx]
            qm = (1 << a) | (1 << b)
            for j, em in enumerate(H.edge_masks):
                if not used[j] and em & qm == qm:
                    used[j] = True
                    assignment[pairs[idx]] = j
                    if extend(idx + 1):
                        return True
                    used[j] = False
                    del assignment[pairs[idx]]
            return False

        if extend(0):
            return BergeWitness(core, dict(assignment))
    return None


def brute_force_is_saturated(H: Hypergraph, ell: int) -> bool:
    """Definitional saturation: free, and every possible addition is blocked.

    Any Berge-K_ell in H plus a new edge necessarily uses the new edge when H
    itself is free, so testing freeness of each augmented hypergraph suffices.
    """
    if brute_force_find_berge(H, ell) is not None:
        return False
    for S in combinations(range(H.n), H.k):
        if H.has_edge(S):
            continue
        if brute_force_find_berge(add_edge(H, S), ell) is None:
            return False
    return True


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
