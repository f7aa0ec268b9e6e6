import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lojax.errors import DimensionMismatch, ParseError
from lojax.monomial import (
    MonomialIdeal,
    minimalize,
    newton_closure,
    np_membership,
    parse_monomial_ideal,
    serialize_monomial_ideal,
)
from oracles import np_member_oracle


def ideal(*gens):
    return MonomialIdeal.of(*gens)


def test_membership_examples():
    assert np_membership((1, 1), ideal((2, 0), (0, 2)))
    assert np_membership((2, 1, 0), ideal((3, 0, 0), (0, 2, 0), (0, 0, 1)))
    assert not np_membership((0, 0), ideal((2, 0), (0, 2)))
    assert not np_membership((1, 0), ideal((2, 0), (0, 2)))


def test_membership_dimension():
    with pytest.raises(DimensionMismatch):
        np_membership((1, 1, 1), ideal((2, 0), (0, 2)))


def test_closure_e6_and_e8_jacobians():
    e6 = newton_closure(ideal((3, 0, 0), (0, 2, 0), (0, 0, 1)))
    assert e6.generators == {(3, 0, 0), (0, 2, 0), (2, 1, 0), (0, 0, 1)}
    e8 = newton_closure(ideal((4, 0, 0), (0, 2, 0), (0, 0, 1)))
    assert e8.generators == {(4, 0, 0), (0, 2, 0), (2, 1, 0), (0, 0, 1)}


@pytest.mark.parametrize("n", range(1, 7))
def test_an_jacobian_is_closed(n):
    i = ideal((n, 0, 0), (0, 1, 0), (0, 0, 1))
    assert newton_closure(i) == i


def test_minimal_generators():
    i = ideal((2, 0), (2, 1), (0, 3), (1, 3))
    assert i.generators == {(2, 0), (0, 3)}
    assert minimalize([(1, 1), (1, 1), (0, 2)]) == {(1, 1), (0, 2)}


def test_containment_and_product():
    a, b = ideal((1, 0), (0, 1)), ideal((2, 0), (0, 2))
    assert b <= a and not a <= b
    assert (a * a).generators == {(2, 0), (1, 1), (0, 2)}


def test_file_roundtrip():
    i = ideal((3, 0, 0), (0, 2, 0), (0, 0, 1))
    assert parse_monomial_ideal(serialize_monomial_ideal(i)) == i


@pytest.mark.parametrize(
    "text,line",
    [("", 1), ("nvars 2\n1 0\n", 1), ("vars: 2\n1 0 3\n", 2), ("vars: 2\n1 x\n", 2), ("vars: 2\n", 2)],
)
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as exc:
        parse_monomial_ideal(text)
    assert exc.value.line == line


# -- properties -------------------------------------------------------------


def ideals(n):
    vec = st.lists(st.integers(0, 5), min_size=n, max_size=n).filter(any).map(tuple)
    return st.lists(vec, min_size=1, max_size=4).map(lambda gs: MonomialIdeal(n, frozenset(gs)))


dims = st.sampled_from([2, 3])


def brute_closure(i):
    top = [max(g[k] for g in i.generators) for k in range(i.num_vars)]
    pts = [p for p in itertools.product(*(range(t + 1) for t in top)) if np_member_oracle(p, sorted(i.generators))]
    return MonomialIdeal(i.num_vars, frozenset(pts))


@settings(max_examples=40, deadline=None)
@given(dims.flatmap(lambda n: st.tuples(ideals(n), st.lists(st.integers(0, 6), min_size=n, max_size=n))))
def test_membership_matches_scipy(data):
    i, p = data
    assert np_membership(p, i) == np_member_oracle(p, sorted(i.generators))


@settings(max_examples=25, deadline=None)
@given(dims.flatmap(ideals))
def test_closure_matches_brute_force(i):
    assert newton_closure(i) == brute_closure(i)


@settings(max_examples=40, deadline=None)
@given(dims.flatmap(ideals))
def test_extensive_and_idempotent(i):
    c = newton_closure(i)
    assert all(np_membership(g, i) for g in i.generators)
    assert i <= c
    assert newton_closure(c) == c


@settings(max_examples=30, deadline=None)
@given(dims.flatmap(lambda n: st.tuples(ideals(n), ideals(n))))
def test_monotone(ij):
    i, j = ij
    big = MonomialIdeal(i.num_vars, i.generators | j.generators)  # i ⊆ big
    assert i <= big
    assert newton_closure(i) <= newton_closure(big)


@settings(max_examples=25, deadline=None)
@given(dims.flatmap(lambda n: st.tuples(ideals(n), ideals(n))))
def test_product_superadditive(ij):
    i, j = ij
    assert newton_closure(i) * newton_closure(j) <= newton_closure(i * j)
