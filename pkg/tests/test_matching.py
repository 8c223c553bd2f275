import pytest
from hypothesis import given, settings, strategies as st

from v4cordial.constructors import Reason, Verdict, congruence_blocked, decide_matching, matching_rule
from v4cordial.constructors.matching import NotAMatching
from v4cordial.constructors.tables import matching_residual_rules
from v4cordial.generators import matching_from_sizes
from v4cordial.hypergraph import Hypergraph
from v4cordial.labeling import verify
from v4cordial.oracle import exhaustive_search

from conftest import partitions


@pytest.mark.parametrize("n, m, blocked", [(4, 2, True), (6, 2, False), (6, 4, True), (8, 2, True), (5, 2, False), (4, 4, False)])
def test_congruence(n, m, blocked):
    assert congruence_blocked(n, m) is blocked


@pytest.mark.parametrize("profile", list(matching_residual_rules()))
def test_residual_rules(profile):
    assert matching_rule(profile) == matching_residual_rules()[profile]


def test_blocked_matching_certificate():
    d = decide_matching(matching_from_sizes([2, 2]))
    assert d.verdict is Verdict.NOT_CORDIAL and d.reason is Reason.MATCHING_CONGRUENCE
    assert d.to_json()["reason"] == "MatchingCongruence"


@pytest.mark.parametrize("n", range(1, 11))
def test_agrees_with_search(n):
    for sizes in partitions(n, 4):
        h = matching_from_sizes(sizes)
        d = decide_matching(h)
        assert d.is_cordial == exhaustive_search(h).found, sizes
        if d.is_cordial:
            assert verify(h, d.labeling).cordial


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(1, 7), max_size=10), st.integers(1, 5))
def test_isolated_vertices_always_cordial(sizes, isolated):
    h = matching_from_sizes(sizes, isolated)
    d = decide_matching(h)
    assert d.is_cordial and verify(h, d.labeling).cordial


def test_star_lift_used_when_covered_part_blocked():
    trace = []
    d = decide_matching(matching_from_sizes([2, 2], isolated=1), trace=trace)
    assert d.is_cordial and "lift" in trace


def test_not_a_matching():
    with pytest.raises(NotAMatching):
        decide_matching(Hypergraph.from_edges(3, [[0, 1], [1, 2]]))
