"""Tight cycles, pair gadgets, and the two extremal families.

The addable-pair sets and family class counts asserted here were computed
against the brute-force saturation oracle before being frozen.
"""

from itertools import combinations

import pytest

from bergesat.berge import brute_force_is_saturated, is_saturated
from bergesat.canon import are_isomorphic, canonical_form
from bergesat.constructions import (
    PairGadget,
    attach_gadgets,
    construction_even,
    construction_odd,
    extremal_family,
    gadget_addable,
    tight_cycle,
)
from bergesat.errors import BadLength, BadParity, EqualVertices, InvalidSpec, VertexOutOfRange
from bergesat.hypergraph import Hypergraph, format_line

C5 = tight_cycle(3, 5)


# ---------------------------------------------------------------------------
# tight cycles
# ---------------------------------------------------------------------------

def test_tight_cycle_of_length_five():
    assert format_line(C5) == "n=5 k=3 m=5 : 0,1,2;0,1,4;0,3,4;1,2,3;2,3,4"


def test_tight_cycle_wraparound_gives_complete_graph():
    H = tight_cycle(3, 4)
    assert H.edges == tuple(combinations(range(4), 3))


def test_tight_cycle_counts_and_degrees():
    for length in (5, 6, 9):
        H = tight_cycle(3, length)
        assert H.m == length
        assert all(d == 3 for d in H.degrees)
    G = tight_cycle(2, 6)
    assert G.m == 6
    assert all(d == 2 for d in G.degrees)


def test_tight_cycle_rejects_short_lengths():
    for length in (3, 2):
        with pytest.raises(BadLength):
            tight_cycle(3, length)


# ---------------------------------------------------------------------------
# gadgets
# ---------------------------------------------------------------------------

def test_gadget_edges():
    g = PairGadget(1, 0, 5, 6)
    assert g.edges() == [(1, 5, 6), (0, 5, 6)]


def test_attach_one_gadget_to_the_cycle():
    H = attach_gadgets(C5, 0, 1, 1)
    assert H.n == 7 and H.m == 7
    assert format_line(H) == "n=7 k=3 m=7 : 0,1,2;0,1,4;0,3,4;0,5,6;1,2,3;1,5,6;2,3,4"


def test_attach_two_gadgets():
    H = attach_gadgets(C5, 0, 1, 2)
    assert H.n == 9 and H.m == 9
    # fresh vertices appended pairwise in attachment order
    assert H.has_edge((0, 5, 6)) and H.has_edge((1, 5, 6))
    assert H.has_edge((0, 7, 8)) and H.has_edge((1, 7, 8))


def test_attach_validates_arguments():
    with pytest.raises(EqualVertices):
        attach_gadgets(C5, 2, 2, 1)
    with pytest.raises(VertexOutOfRange):
        attach_gadgets(C5, 0, 5, 1)
    with pytest.raises(InvalidSpec):
        attach_gadgets(C5, 0, 1, 0)


def test_gadget_vertices_have_degree_two():
    H = attach_gadgets(C5, 0, 3, 3)
    for v in range(5, 11):
        assert H.degrees[v] == 2


def test_no_edge_lies_inside_the_gadget_vertices():
    H = attach_gadgets(C5, 0, 1, 4)
    fresh = set(range(5, 13))
    for e in H.edges:
        assert not set(e) <= fresh


# ---------------------------------------------------------------------------
# addable pairs
# ---------------------------------------------------------------------------

def test_every_pair_of_the_cycle_is_addable():
    for u, v in combinations(range(5), 2):
        assert gadget_addable(C5, u, v), (u, v)


def test_damaged_host_is_not_addable():
    H = Hypergraph(5, 3, C5.edges[1:])
    assert not gadget_addable(H, 0, 1)


EVEN_BASE = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (0, 2, 4), (0, 3, 5), (1, 4, 5)]


def test_even_base_has_exactly_one_addable_pair():
    base = Hypergraph(6, 3, EVEN_BASE)
    assert is_saturated(base, 4)
    addable = {p for p in combinations(range(6), 2) if gadget_addable(base, *p)}
    assert addable == {(0, 1)}


def test_even_family_really_extends_the_base():
    base = Hypergraph(6, 3, EVEN_BASE)
    assert construction_even(8) == attach_gadgets(base, 0, 1, 1)


def test_one_gadget_then_brute_force_agrees():
    H = attach_gadgets(C5, 1, 3, 1)
    assert is_saturated(H, 4) == brute_force_is_saturated(H, 4)


def test_gadgets_on_two_distinct_pairs_break_saturation():
    for p, q in (((0, 1), (2, 3)), ((0, 1), (0, 2)), ((1, 2), (3, 4))):
        H = attach_gadgets(attach_gadgets(C5, *p, 1), *q, 1)
        assert not is_saturated(H, 4), (p, q)


# ---------------------------------------------------------------------------
# the two families
# ---------------------------------------------------------------------------

def test_construction_odd_small_cases():
    assert construction_odd(5) == C5
    assert construction_odd(7) == attach_gadgets(C5, 0, 1, 1)
    for n in (5, 7, 9, 11):
        H = construction_odd(n)
        assert H.n == n and H.m == n
        assert is_saturated(H, 4)


def test_construction_odd_rejects_bad_orders():
    for n in (4, 6, 3, -1):
        with pytest.raises(BadParity):
            construction_odd(n)


def test_construction_even_small_cases():
    for n in (8, 10, 12):
        H = construction_even(n)
        assert H.n == n and H.m == n
        assert is_saturated(H, 4)


def test_construction_even_rejects_bad_orders():
    for n in (6, 7, 9, 4):
        with pytest.raises(BadParity):
            construction_even(n)


def test_construction_even_ten_degree_profile():
    H = construction_even(10)
    assert H.degrees == (7, 5, 3, 3, 2, 2, 2, 2, 2, 2)


def test_families_are_not_isomorphic_to_each_other():
    assert not are_isomorphic(construction_odd(9), construction_even(8))


# ---------------------------------------------------------------------------
# extremal families
# ---------------------------------------------------------------------------

def test_family_from_the_cycle_at_n7():
    fam = extremal_family(7, [C5])
    assert len(fam) == 2
    for H in fam:
        assert H.n == 7 and H.m == 7
        assert is_saturated(H, 4)
    lines = {canonical_form(H) for H in fam}
    assert canonical_form(construction_odd(7)) in lines


def test_family_at_n9_keeps_two_classes():
    fam = extremal_family(9, [C5])
    assert len(fam) == 2
    assert all(H.n == 9 and H.m == 9 for H in fam)


def test_family_includes_hosts_of_matching_order():
    fam = extremal_family(5, [C5])
    assert [canonical_form(H) for H in fam] == [canonical_form(C5)]


def test_family_skips_parity_mismatched_hosts():
    assert extremal_family(8, [C5]) == []
    assert extremal_family(4, [C5]) == []


def test_family_empty_hosts():
    assert extremal_family(9, []) == []


def test_family_merges_isomorphic_extensions_across_hosts():
    twin = Hypergraph(5, 3, [tuple(4 - v for v in e) for e in C5.edges])
    fam_one = extremal_family(7, [C5])
    fam_two = extremal_family(7, [C5, twin])
    assert {canonical_form(H) for H in fam_one} == {canonical_form(H) for H in fam_two}
