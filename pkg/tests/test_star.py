import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from v4cordial.constructors import NotAStar, construct_star, star_rule
from v4cordial.constructors.tables import star_residual_rules
from v4cordial.generators import random_star, star_from_sizes
from v4cordial.hypergraph import Hypergraph
from v4cordial.labeling import verify


def star_for_profile(profile):
    return star_from_sizes([k + 2 for k in range(len(profile)) for _ in range(profile[k])])


@pytest.mark.parametrize("profile", sorted(star_residual_rules()))
def test_residual_rules(profile):
    assert star_rule(profile) == star_residual_rules()[profile]
    h = star_for_profile(profile)
    assert verify(h, construct_star(h)).cordial


def test_all_small_profiles():
    for profile in product(range(4), repeat=4):
        h = star_for_profile(profile)
        assert verify(h, construct_star(h)).cordial, profile


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(2, 12), min_size=1, max_size=16))
def test_random_sizes(sizes):
    h = star_from_sizes(sizes)
    assert verify(h, construct_star(h)).cordial


def test_centre_need_not_be_vertex_zero():
    h = Hypergraph.from_edges(7, [[3, 0, 1], [3, 2], [3, 4, 5, 6]])
    assert verify(h, construct_star(h)).cordial


def test_trace_names_rules():
    trace = []
    construct_star(star_for_profile((0, 0, 0, 0, 4)), trace=trace)
    assert trace  # the big edges are peeled off before the residual rule
    trace = []
    construct_star(star_for_profile((2, 2, 0, 0)), trace=trace)
    assert "*" in trace


def test_not_a_star():
    with pytest.raises(NotAStar):
        construct_star(Hypergraph.from_edges(4, [[0, 1], [2, 3]]))


def test_seeded_random_stars_deterministic():
    a = random_star((2, 9), 12, seed=5)
    b = random_star((2, 9), 12, seed=5)
    assert a.sorted_edges() == b.sorted_edges()
    rng = random.Random(0)
    for i in range(50):
        h = random_star((2, 9), rng.randint(1, 12), seed=i)
        assert verify(h, construct_star(h)).cordial
