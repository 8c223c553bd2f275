import random

import pytest
from hypothesis import given, settings, strategies as st

from v4cordial.generators import random_hypergraph
from v4cordial.hypergraph import Hypergraph
from v4cordial.labeling import verify
from v4cordial.oracle import (
    SearchConfig,
    Status,
    count_cordial_witnesses,
    exhaustive_search,
    naive_labelings,
    naive_search,
)

from conftest import graph_path

# lexicographically least cordial labelings of small graph paths
LEAST = {
    1: (0,),
    2: (0, 1),
    3: (0, 1, 2),
    6: (0, 0, 1, 2, 1, 3),
    7: (0, 0, 1, 2, 1, 3, 2),
    8: (0, 0, 1, 2, 1, 3, 3, 2),
    9: (0, 0, 1, 2, 1, 3, 3, 2, 0),
    10: (0, 0, 0, 1, 2, 1, 2, 3, 1, 3),
}

# cordial labelings counted up to automorphism / counted individually
COUNTS = {1: (2, 4), 2: (3, 12), 3: (4, 24), 4: (0, 0), 5: (0, 0), 6: (36, 216), 7: (108, 648), 8: (48, 288)}


@pytest.mark.parametrize("n", sorted(LEAST))
def test_least_witness_of_paths(n):
    out = exhaustive_search(graph_path(n))
    assert out.status is Status.FOUND
    assert out.labeling == LEAST[n]


@pytest.mark.parametrize("n", [4, 5])
def test_short_paths_exhausted(n):
    assert exhaustive_search(graph_path(n)).status is Status.EXHAUSTED


@pytest.mark.parametrize("n", sorted(COUNTS))
def test_witness_counts(n):
    reduced, full = COUNTS[n]
    h = graph_path(n)
    assert count_cordial_witnesses(h) == reduced
    assert count_cordial_witnesses(h, SearchConfig(use_symmetry=False)) == full
    assert sum(len(b) for b in naive_labelings(h)) == full


def test_symmetry_keeps_least_witness():
    h = graph_path(9)
    assert exhaustive_search(h, SearchConfig(use_symmetry=False)).labeling == LEAST[9]


def test_budget_aborts():
    out = exhaustive_search(graph_path(12), SearchConfig(node_budget=5))
    assert out.status is Status.ABORTED and out.labeling is None
    assert count_cordial_witnesses(graph_path(8), SearchConfig(node_budget=5)) is None


def test_parallel_matches_serial():
    rng = random.Random(11)
    for i in range(6):
        h = random_hypergraph(rng.randint(6, 9), rng.randint(2, 9), 4, i)
        serial = exhaustive_search(h)
        par = exhaustive_search(h, SearchConfig(parallel_width=2))
        assert (serial.status, serial.labeling) == (par.status, par.labeling)
    assert count_cordial_witnesses(graph_path(8), SearchConfig(parallel_width=2)) == 48


def test_empty_hypergraph():
    h = Hypergraph.from_edges(0, [])
    assert exhaustive_search(h).status is Status.FOUND
    assert naive_search(h) == ()


def test_outcome_json():
    data = exhaustive_search(graph_path(3)).to_json()
    assert data["status"] == "found" and data["labels"] == ["(0,0)", "(0,1)", "(1,0)"]
    assert data["nodes"] > 0 and "wall_time" in data


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(node_budget=-1)
    with pytest.raises(ValueError):
        SearchConfig(parallel_width=0)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 7), st.integers(0, 9), st.integers(0, 10**6))
def test_agrees_with_brute_force(n, m, seed):
    h = random_hypergraph(n, m, 4, seed)
    out = exhaustive_search(h)
    least = naive_search(h)
    assert out.found == (least is not None)
    if least is not None:
        assert out.labeling == least
        assert verify(h, out.labeling).cordial


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(0, 7), st.integers(0, 10**6))
def test_orbit_counting(n, m, seed):
    # every orbit has size 1, 3 or 6; summing orbit sizes gives the full count
    h = random_hypergraph(n, m, 4, seed)
    full = count_cordial_witnesses(h, SearchConfig(use_symmetry=False))
    assert full == sum(len(b) for b in naive_labelings(h))
    reduced = count_cordial_witnesses(h)
    assert reduced <= full <= 6 * reduced
