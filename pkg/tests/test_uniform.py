from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from v4cordial.constructors import NotUniformHypertree, PTooSmall, construct_uniform_hypertree
from v4cordial.constructors.uniform import residual_cell
from v4cordial.generators import enumerate_uniform_hypertrees, generate_random_hypertree
from v4cordial.hypergraph import Hypergraph
from v4cordial.labeling import verify

SUB_CONFIGS = {"case2.both", "case2.reindex", "case2.apart.repeat", "case2.apart.distinct"}

# non-isomorphic p-uniform hypertrees with m edges (p >= 4 all agree for m <= 6)
COUNTS = {
    3: [1, 1, 2, 4, 8, 19],
    4: [1, 1, 2, 4, 9, 21],
    5: [1, 1, 2, 4, 9],
    6: [1, 1, 2, 4, 9],
}


@pytest.mark.parametrize("p", sorted(COUNTS))
def test_enumeration_counts(p):
    got = [sum(1 for _ in enumerate_uniform_hypertrees(p, m)) for m in range(1, len(COUNTS[p]) + 1)]
    assert got == COUNTS[p]


def test_residual_cell():
    assert residual_cell(6, 3) and residual_cell(10, 7)
    assert not residual_cell(6, 4) and not residual_cell(5, 3)


@pytest.mark.parametrize("p", [3, 4, 5, 6])
@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
def test_all_small_trees(p, m):
    for h in enumerate_uniform_hypertrees(p, m):
        assert verify(h, construct_uniform_hypertree(h)).cordial


def test_residual_cell_smallest_instances_cover_both_cases():
    seen = Counter()
    for h in enumerate_uniform_hypertrees(6, 3):
        assert h.n == 16
        trace = []
        assert verify(h, construct_uniform_hypertree(h, trace=trace)).cordial
        seen.update(trace)
    assert seen["case1"] and seen["case2.reindex"]


def test_residual_cell_sub_configurations():
    seen = Counter()
    for h in enumerate_uniform_hypertrees(6, 7):
        trace = []
        assert verify(h, construct_uniform_hypertree(h, trace=trace)).cordial
        seen.update(trace)
    assert SUB_CONFIGS <= set(seen)
    assert seen["case2.both.anchor"] and seen["collision"] and seen["case1.chain"] and seen["case1.shared"]


@settings(max_examples=200, deadline=None)
@given(st.integers(3, 11), st.integers(1, 16), st.integers(0, 10**6))
def test_random_uniform_trees(p, m, seed):
    h = generate_random_hypertree([p], m, seed)
    assert verify(h, construct_uniform_hypertree(h)).cordial


def test_rejections():
    with pytest.raises(NotUniformHypertree):
        construct_uniform_hypertree(Hypergraph.from_edges(5, [[0, 1, 2], [2, 3], [3, 4]]))
    with pytest.raises(PTooSmall):
        construct_uniform_hypertree(Hypergraph.from_edges(3, [[0, 1], [1, 2]]))
