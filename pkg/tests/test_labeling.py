import pytest
from hypothesis import given, strategies as st

from v4cordial.group import AUTOMORPHISMS
from v4cordial.hypergraph import Hypergraph
from v4cordial.labeling import (
    UNLABELED,
    LengthMismatch,
    PartialLabeling,
    deficient,
    induced_edge_labeling,
    is_friendly,
    labeling_from_json,
    labeling_to_json,
    least_frequent,
    verify,
)
from v4cordial.generators import random_hypergraph

H = Hypergraph.from_edges(4, [[0, 1], [1, 2, 3], [3]])


def test_induced_edge_labels():
    assert induced_edge_labeling(H, (1, 2, 3, 1)) == (3, 0, 1)


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        induced_edge_labeling(H, (0, 1))


@pytest.mark.parametrize(
    "counts, ok",
    [((1, 1, 1, 1), True), ((2, 1, 1, 2), True), ((0, 0, 0, 0), True), ((2, 0, 1, 1), False)],
)
def test_friendly(counts, ok):
    assert is_friendly(counts) is ok


def test_friendly_accepts_mappings():
    assert is_friendly({0: 1, 3: 1, 1: 1, 2: 2})
    assert not is_friendly({0: 2})


def test_report_lists_violations():
    report = verify(H, (0, 0, 0, 0))
    assert not report.cordial and not report.friendly
    assert report.vertex_counts == (4, 0, 0, 0)
    assert any("vertex labels (0,0) and (0,1)" in v for v in report.violations)
    assert report.to_json()["vertex_counts"]["(0,0)"] == 4


def test_cordial_report():
    report = verify(Hypergraph.from_edges(4, [[0, 1], [1, 2], [2, 3]][:2]), (0, 1, 2, 3))
    assert report.cordial and report.violations == ()


def test_rejects_non_elements():
    with pytest.raises(ValueError):
        verify(H, (0, 1, 2, 4))


def test_partial_labeling_counts():
    pl = PartialLabeling(5)
    pl.assign(0, 1)
    pl.assign(1, 1)
    pl.assign(1, 2)
    assert pl.counts == [0, 1, 1, 0]
    pl.clear(0)
    assert pl.unlabeled() == [0, 2, 3, 4] and pl[0] == UNLABELED
    with pytest.raises(ValueError):
        pl.to_labeling()
    back = PartialLabeling.from_labels([3, None, 0])
    assert back.counts == [1, 0, 0, 1]


def test_deficient_and_least_frequent():
    assert deficient([2, 2, 1, 1]) == [2, 3]
    assert deficient([1, 1, 1, 1]) == []
    assert least_frequent([2, 0, 1, 0]) == [1, 3]


def test_json_round_trip():
    c = (0, 3, 2, 1)
    data = labeling_to_json(c)
    assert data == {"labels": ["(0,0)", "(1,1)", "(1,0)", "(0,1)"]}
    assert labeling_from_json(data) == c


@given(st.integers(1, 8), st.integers(0, 8), st.integers(0, 1000), st.data())
def test_cordiality_invariant_under_automorphisms(n, m, seed, data):
    h = random_hypergraph(n, m, 4, seed)
    c = data.draw(st.lists(st.integers(0, 3), min_size=n, max_size=n))
    base = verify(h, c).cordial
    for phi in AUTOMORPHISMS:
        assert verify(h, phi.apply(c)).cordial == base
