import pytest
from hypothesis import given, strategies as st

from v4cordial.generators import generate_random_hypertree, path_from_sizes, random_hypergraph, star_from_sizes
from v4cordial.hypergraph import (
    DuplicateEdge,
    EmptyEdge,
    Hypergraph,
    Matching,
    NotAHypertree,
    OutOfRangeVertex,
    ParseError,
    PathHypergraph,
    Star,
    UniformHypertree,
    Other,
    classify,
    dumps,
    from_text,
    is_hypertree,
    is_pendant_order,
    loads,
    longest_path_end_edges,
    pendant_order,
)

from conftest import graph_path


def test_basic_invariants():
    h = Hypergraph.from_edges(5, [[0, 1, 2], [2, 3], [3, 4]])
    assert (h.order, h.size, h.m) == (5, 3, 3)
    assert h.degrees() == [1, 1, 2, 2, 1]
    assert h.edge_sizes() == [3, 2, 2]


@pytest.mark.parametrize(
    "edges, exc",
    [([[0, 5]], OutOfRangeVertex), ([[]], EmptyEdge), ([[0, 1], [1, 0]], DuplicateEdge)],
)
def test_validation(edges, exc):
    with pytest.raises(exc):
        Hypergraph.from_edges(3, edges)


def test_duplicates_allowed_on_request():
    h = Hypergraph.from_edges(2, [[0, 1], [1, 0]], allow_duplicates=True)
    assert h.m == 2


def test_hypertree_criterion():
    assert is_hypertree(graph_path(5))
    # two edges sharing two vertices already close a cycle
    assert not is_hypertree(Hypergraph.from_edges(4, [[0, 1, 2], [1, 2, 3]]))
    assert not is_hypertree(Hypergraph.from_edges(4, [[0, 1], [2, 3]]))
    assert not is_hypertree(Hypergraph.from_edges(3, [[0, 1], [1, 2], [0, 2]]))


@given(st.integers(1, 8), st.integers(0, 10_000))
def test_generated_hypertrees_satisfy_count_identity(m, seed):
    h = generate_random_hypertree((2, 6), m, seed)
    assert is_hypertree(h)
    assert h.n == 1 + sum(len(e) - 1 for e in h.edges)


def test_classify_shapes():
    assert isinstance(classify(Hypergraph.from_edges(5, [[0, 1], [2, 3, 4]])), Matching)
    star = classify(star_from_sizes([3, 3, 4, 2]))
    assert isinstance(star, Star) and star.center == 0
    assert star.profile[:4] == (1, 2, 1, 0)
    path = classify(path_from_sizes([3, 4, 3, 5]))
    assert isinstance(path, PathHypergraph) and path.is_hyperpath
    assert isinstance(classify(Hypergraph.from_edges(3, [[0, 1], [1, 2], [0, 2]])), Other)


def test_seven_vertex_path_is_also_uniform():
    h = path_from_sizes([3, 3, 3])
    assert isinstance(classify(h), PathHypergraph)
    assert pendant_order(h) == (0, 1, 2)


def test_uniform_non_path_tree():
    h = Hypergraph.from_edges(9, [[0, 1, 2], [2, 3, 4], [4, 5, 6], [6, 7, 8]])
    assert isinstance(classify(h), PathHypergraph)
    spider = Hypergraph.from_edges(11, [[0, 1, 2], [2, 3, 4], [4, 5, 6], [3, 7, 8], [8, 9, 10]])
    cls = classify(spider)
    assert isinstance(cls, UniformHypertree) and cls.p == 3


@given(st.integers(1, 9), st.integers(0, 10_000))
def test_pendant_order_ends_on_longest_path(m, seed):
    h = generate_random_hypertree((2, 5), m, seed)
    order = pendant_order(h)
    assert is_pendant_order(h, order)
    _, ends = longest_path_end_edges(h)
    assert order[-1] in ends


def test_pendant_order_needs_hypertree():
    with pytest.raises(NotAHypertree):
        pendant_order(Hypergraph.from_edges(4, [[0, 1], [2, 3]]))


@given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 10_000), st.sampled_from(["text", "json"]))
def test_round_trip(n, m, seed, fmt):
    h = random_hypergraph(n, m, 4, seed)
    back = loads(dumps(h, fmt), fmt)
    assert back.n == h.n and back.sorted_edges() == h.sorted_edges()


def test_text_format_comments_and_blank_lines():
    h = from_text("# a path\n3 2\n\n0 1\n1 2  # tail\n")
    assert h.sorted_edges() == [[0, 1], [1, 2]]


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("3 2\n0 1\n1 x\n", 3, 3),
        ("3\n", 1, 1),
        ("3 2\n0 1\n", 2, 1),
        ("3 1\n0 0\n", 2, 1),
    ],
)
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as info:
        loads(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_json_parse_error_position():
    with pytest.raises(ParseError) as info:
        loads('{"n": 3,\n "edges": [[0, 1],]}')
    assert info.value.line == 2
