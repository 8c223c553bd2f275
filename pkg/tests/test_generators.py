import networkx as nx
import pytest

from v4cordial.cli import generate_random_hypertree
from v4cordial.generators import canonical_form, enumerate_uniform_hypertrees, random_hyperpath
from v4cordial.hypergraph import PathHypergraph, classify, is_hypertree


def test_single_edge():
    for seed in range(5):
        h = generate_random_hypertree([3], 1, seed)
        assert h.n == 3 and h.sorted_edges() == [[0, 1, 2]]


def test_sizes_and_identity():
    h = generate_random_hypertree([3, 4], 4, 1)
    assert is_hypertree(h)
    assert set(h.edge_sizes()) <= {3, 4}
    assert h.n == 1 + sum(s - 1 for s in h.edge_sizes())


def test_inclusive_range():
    sizes = set()
    for seed in range(60):
        sizes.update(generate_random_hypertree((3, 5), 4, seed).edge_sizes())
    assert sizes == {3, 4, 5}


def test_deterministic():
    a = generate_random_hypertree((3, 6), 7, 42)
    b = generate_random_hypertree((3, 6), 7, 42)
    assert a.edges == b.edges


def test_bad_arguments():
    with pytest.raises(ValueError):
        generate_random_hypertree([3], 0, 1)
    with pytest.raises(ValueError):
        generate_random_hypertree([1, 3], 2, 1)


def test_random_hyperpath_is_a_path():
    h = random_hyperpath((3, 8), 9, seed=3)
    cls = classify(h)
    assert isinstance(cls, PathHypergraph) and cls.is_hyperpath


def _incidence_graph(h):
    g = nx.Graph()
    g.add_nodes_from(range(h.n), kind="v")
    g.add_nodes_from((("e", i) for i in range(h.m)), kind="e")
    g.add_edges_from((v, ("e", i)) for i, e in enumerate(h.edges) for v in e)
    return g


@pytest.mark.parametrize("p, m", [(3, 5), (3, 6), (4, 5)])
def test_enumeration_is_isomorphism_free_and_complete(p, m):
    trees = list(enumerate_uniform_hypertrees(p, m))
    match = nx.algorithms.isomorphism.categorical_node_match("kind", None)
    graphs = [_incidence_graph(h) for h in trees]
    for i in range(len(graphs)):
        for j in range(i):
            assert not nx.is_isomorphic(graphs[i], graphs[j], node_match=match)
    # every random tree lands on one of the enumerated forms
    forms = {canonical_form(h) for h in trees}
    for seed in range(200):
        assert canonical_form(generate_random_hypertree([p], m, seed)) in forms
