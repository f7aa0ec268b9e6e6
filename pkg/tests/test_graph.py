import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lojax.errors import ParseError, ValidationError
from lojax.exact import determinant
from lojax.graph import (
    ResolutionGraph,
    chain,
    chain_with_branch,
    intersection_matrix,
    parse_graph,
    serialize_graph,
    validate,
)

E8_TEXT = """\
# E8, vertex 8 hangs below vertex 3
graph E8
vertices: 8
weights: 2 2 2 2 2 2 2 2
edges: 1-2 2-3 3-4 4-5 5-6 6-7 3-8
"""


def test_parse_e8():
    g = parse_graph(E8_TEXT)
    assert g.name == "E8"
    assert g.weights == (2,) * 8
    assert (2, 7) in g.edges
    assert g.neighbours(2) == [1, 3, 7]


def test_roundtrip_text():
    g = parse_graph(E8_TEXT)
    assert parse_graph(serialize_graph(g)) == g


def test_matrix_entries():
    g = chain("A3", (2, 3, 2))
    m = intersection_matrix(g)
    assert m.entries == ((-2, 1, 0), (1, -3, 1), (0, 1, -2))
    assert m.is_symmetric()


def test_weight_zero_vertex_invalid():
    g = ResolutionGraph("bad", (0,))
    r = validate(g)
    assert not r.ok and not r.weights_ok and not r.negative_definite
    assert validate(g, min_weight=None).weights_ok


def test_edge_out_of_range():
    text = "graph X\nvertices: 2\nweights: 2 2\nedges: 1-9\n"
    with pytest.raises(ParseError) as exc:
        parse_graph(text)
    assert exc.value.line == 4


@pytest.mark.parametrize(
    "text,line",
    [
        ("vertices: 2\nweights: 2 2\nedges: 1-2\n", 1),
        ("graph X\nvertices: two\nweights: 2 2\nedges: 1-2\n", 2),
        ("graph X\nvertices: 2\nweights: 2\nedges: 1-2\n", 3),
        ("graph X\nvertices: 2\nweights: 2 2\nedges: 1~2\n", 4),
    ],
)
def test_parse_errors_have_lines(text, line):
    with pytest.raises(ParseError) as exc:
        parse_graph(text)
    assert exc.value.line == line


def test_not_negative_definite():
    # affine A_2 triangle is only semidefinite
    text = "graph T\nvertices: 3\nweights: 2 2 2\nedges: 1-2 2-3 1-3\n"
    with pytest.raises(ValidationError):
        parse_graph(text)
    g = parse_graph(text, check=False)
    assert not validate(g).negative_definite


def test_disconnected():
    g = ResolutionGraph("two", (2, 2))
    r = validate(g)
    assert not r.connected and not r.ok
    assert "connected" in r.problems[0]


def test_chain_with_branch_layout():
    g = chain_with_branch("E6", (2,) * 6, 2)
    assert g.sorted_edges() == [(0, 1), (1, 2), (2, 3), (2, 5), (3, 4)]


@st.composite
def trees(draw):
    n = draw(st.integers(1, 8))
    weights = draw(st.lists(st.integers(2, 5), min_size=n, max_size=n))
    edges = frozenset((draw(st.integers(0, i - 1)), i) for i in range(1, n))
    return ResolutionGraph("T", tuple(weights), edges)


@settings(max_examples=60, deadline=None)
@given(trees())
def test_serialize_roundtrip(g):
    assert parse_graph(serialize_graph(g), check=False) == g


@settings(max_examples=60, deadline=None)
@given(trees())
def test_leading_minor_signs(g):
    # weight >= 2 trees whose every vertex has weight >= degree are negative definite;
    # in general the report agrees with the sign of the full determinant
    r = validate(g)
    n = g.vertex_count
    assert len(r.leading_minors) == n
    assert r.leading_minors[-1] == determinant(intersection_matrix(g))
    if r.negative_definite:
        assert all((-1) ** k * d > 0 for k, d in enumerate(r.leading_minors, start=1))
    if all(w >= len(g.neighbours(i)) + 1 for i, w in enumerate(g.weights)):
        assert r.negative_definite
