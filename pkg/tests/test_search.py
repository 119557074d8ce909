"""Enumeration completeness, pruning soundness, and deterministic parallel search."""

import os
from itertools import combinations

import pytest

from bergesat.berge import is_saturated
from bergesat.canon import canonical_form, dedup
from bergesat.errors import InvalidSpec
from bergesat.hypergraph import Hypergraph, format_line
from bergesat.search import (
    SearchSpec,
    enumerate_hypergraphs,
    find_saturated,
    representative_filename,
    saturation_number,
    write_report,
)


def brute_enumerate(n, k, m, min_degree):
    """Reference enumeration: filter every m-subset of the edge pool."""
    pool = list(combinations(range(n), k))
    out = []
    for sel in combinations(range(len(pool)), m):
        H = Hypergraph(n, k, [pool[i] for i in sel])
        if min(H.degrees) >= min_degree:
            out.append(H)
    return out


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def test_counts_for_tiny_cells():
    assert sum(1 for _ in enumerate_hypergraphs(SearchSpec(5, 1))) == 10
    assert sum(1 for _ in enumerate_hypergraphs(SearchSpec(5, 2))) == 45


def test_stream_matches_brute_force_for_small_m():
    for m in range(4):
        got = list(enumerate_hypergraphs(SearchSpec(5, m)))
        want = brute_enumerate(5, 3, m, 0)
        assert got == want


def test_min_degree_filter_matches_brute_force():
    for delta in (1, 2, 3):
        got = list(enumerate_hypergraphs(SearchSpec(5, 5, min_degree=delta)))
        want = brute_enumerate(5, 3, 5, delta)
        assert got == want, delta


def test_min_degree_two_n5_m5_count():
    want = len(brute_enumerate(5, 3, 5, 2))
    got = sum(1 for _ in enumerate_hypergraphs(SearchSpec(5, 5, min_degree=2)))
    assert got == want


def test_emitted_edges_are_strictly_increasing_in_pool_order():
    pool = list(combinations(range(6), 3))
    rank = {e: i for i, e in enumerate(pool)}
    for H in enumerate_hypergraphs(SearchSpec(6, 3)):
        ranks = [rank[e] for e in H.edges]
        assert ranks == sorted(ranks) and len(set(ranks)) == len(ranks)


def test_degree_infeasible_cell_is_empty():
    # 3m = 15 incidences cannot give all 8 vertices degree 2
    assert list(enumerate_hypergraphs(SearchSpec(8, 5, min_degree=2))) == []


def test_spec_validation():
    with pytest.raises(InvalidSpec):
        SearchSpec(0, 1).validate()
    with pytest.raises(InvalidSpec):
        SearchSpec(5, 11).validate()
    with pytest.raises(InvalidSpec):
        SearchSpec(5, 1, uniform=6).validate()
    with pytest.raises(InvalidSpec):
        SearchSpec(5, 1, uniform=1).validate()
    with pytest.raises(InvalidSpec):
        SearchSpec(5, 1, min_degree=-1).validate()
    with pytest.raises(InvalidSpec):
        SearchSpec(5, 1, ell=2).validate()
    with pytest.raises(InvalidSpec):
        SearchSpec(5, 1, workers=0).validate()
    with pytest.raises(InvalidSpec):
        SearchSpec(65, 1).validate()


# ---------------------------------------------------------------------------
# find_saturated
# ---------------------------------------------------------------------------

def test_n5_m5_report():
    rep = find_saturated(SearchSpec(5, 5))
    assert rep.candidates == 252
    assert rep.free == 252
    assert rep.saturated == 252
    assert rep.classes == 6
    for H in rep.representatives:
        assert is_saturated(H, 4)
    lines = [canonical_form(H) for H in rep.representatives]
    assert lines == sorted(lines)


def test_n5_m4_finds_nothing():
    rep = find_saturated(SearchSpec(5, 4))
    assert rep.candidates == 210
    assert rep.saturated == 0
    assert rep.representatives == []


def test_representatives_match_per_candidate_filter():
    # independently recompute: saturated candidates, deduped
    want = dedup([H for H in brute_enumerate(6, 3, 5, 0) if is_saturated(H, 4)])
    rep = find_saturated(SearchSpec(6, 5))
    assert [format_line(H) for H in rep.representatives] == [format_line(H) for H in want]


def test_incremental_freeness_same_representatives():
    base = SearchSpec(6, 6)
    inc = SearchSpec(6, 6, free_incremental=True)
    r0 = find_saturated(base)
    r1 = find_saturated(inc)
    assert [format_line(H) for H in r0.representatives] == [format_line(H) for H in r1.representatives]
    assert r1.saturated == r0.saturated
    # pruning may only discard candidates, never saturated ones
    assert r1.candidates <= r0.candidates


def test_no_false_min_degree_pruning_small():
    # every saturated hypergraph with min degree >= 2 must survive the pruned run
    loose = find_saturated(SearchSpec(6, 6))
    tight = find_saturated(SearchSpec(6, 6, min_degree=2))
    keep = {
        canonical_form(H)
        for H in loose.representatives
        if min(H.degrees) >= 2
    }
    assert {canonical_form(H) for H in tight.representatives} == keep


def test_workers_do_not_change_the_outcome():
    reports = {w: find_saturated(SearchSpec(6, 5, workers=w)) for w in (1, 2, 8)}
    base = reports[1]
    for w, rep in reports.items():
        assert rep.candidates == base.candidates, w
        assert rep.free == base.free, w
        assert rep.saturated == base.saturated, w
        assert [format_line(H) for H in rep.representatives] == [
            format_line(H) for H in base.representatives
        ], w


def test_workers_with_incremental_mode_agree_too():
    serial = find_saturated(SearchSpec(6, 6, free_incremental=True))
    forked = find_saturated(SearchSpec(6, 6, free_incremental=True, workers=4))
    assert serial.candidates == forked.candidates
    assert serial.saturated == forked.saturated
    assert [format_line(H) for H in serial.representatives] == [
        format_line(H) for H in forked.representatives
    ]


# ---------------------------------------------------------------------------
# files
# ---------------------------------------------------------------------------

def test_representative_filename_shape():
    assert representative_filename(SearchSpec(7, 6)) == "sat_n3u_7v_6e_l4.txt"
    assert representative_filename(SearchSpec(7, 6), ell=5) == "sat_n3u_7v_6e_l5.txt"


def test_write_report_and_reread(tmp_path):
    rep = find_saturated(SearchSpec(5, 5))
    rep_path, side_path = write_report(rep, str(tmp_path))
    assert os.path.basename(rep_path) == "sat_n3u_5v_5e_l4.txt"
    with open(rep_path) as fh:
        lines = fh.read().splitlines()
    assert lines == [canonical_form(H) for H in rep.representatives]
    with open(side_path) as fh:
        side = dict(line.split("=", 1) for line in fh.read().splitlines())
    assert side["candidates"] == "252"
    assert side["free"] == "252"
    assert side["saturated"] == "252"
    assert side["classes"] == "6"
    assert float(side["seconds"]) >= 0.0


def test_output_dir_spec_field_writes_files(tmp_path):
    find_saturated(SearchSpec(5, 4, output_dir=str(tmp_path)))
    assert (tmp_path / "sat_n3u_5v_4e_l4.txt").read_text() == ""
    side = (tmp_path / "sat_n3u_5v_4e_l4.summary").read_text()
    assert "saturated=0" in side


def test_report_files_identical_across_worker_counts(tmp_path):
    blobs = {}
    for w in (1, 2, 8):
        d = tmp_path / f"w{w}"
        find_saturated(SearchSpec(6, 5, workers=w, output_dir=str(d)))
        blobs[w] = (d / "sat_n3u_6v_5e_l4.txt").read_bytes()
    assert blobs[1] == blobs[2] == blobs[8]


# ---------------------------------------------------------------------------
# saturation number
# ---------------------------------------------------------------------------

def test_saturation_number_n5():
    m, reps = saturation_number(5, 3, 4, 0, 6)
    assert m == 5
    assert len(reps) == 6


def test_saturation_number_n6():
    m, reps = saturation_number(6, 3, 4, 0, 6)
    assert m == 5
    assert len(reps) == 1
    # the unique minimum class is the tight 5-cycle plus an isolated vertex
    tc5 = Hypergraph(6, 3, [(0, 1, 2), (1, 2, 3), (2, 3, 4), (0, 3, 4), (0, 1, 4)])
    assert canonical_form(reps[0]) == canonical_form(tc5)


def test_saturation_number_none_in_range():
    m, reps = saturation_number(5, 3, 4, 0, 4)
    assert m is None
    assert reps == []


def test_saturation_number_rejects_empty_range():
    with pytest.raises(InvalidSpec):
        saturation_number(5, 3, 4, 3, 2)


def test_full_cell_is_saturated_when_n_equals_k():
    # one possible edge; taking it leaves no additions to block
    m, reps = saturation_number(3, 3, 4, 0, 1)
    assert m == 1
    assert len(reps) == 1
