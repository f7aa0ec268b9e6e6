from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lojax.errors import DimensionMismatch
from lojax.lp import feasible_point
from oracles import lp_feasible


def test_simple_feasible():
    x = feasible_point([[1, 1]], [3])
    assert x is not None and sum(x) == 3 and min(x) >= 0


def test_infeasible():
    assert feasible_point([[1, 1]], [-1]) is None
    assert feasible_point([[1, -1], [1, 1]], [5, 1]) is None


def test_fractional_solution():
    x = feasible_point([[2, 0], [0, 3]], [1, 1])
    assert x == (Fraction(1, 2), Fraction(1, 3))


def test_ragged():
    with pytest.raises(DimensionMismatch):
        feasible_point([[1, 2], [1]], [1, 2])
    with pytest.raises(DimensionMismatch):
        feasible_point([[1, 2]], [1, 2])


@settings(max_examples=80, deadline=None)
@given(
    st.integers(1, 3).flatmap(
        lambda m: st.integers(1, 4).flatmap(
            lambda n: st.tuples(
                st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=m, max_size=m),
                st.lists(st.integers(-4, 4), min_size=m, max_size=m),
            )
        )
    )
)
def test_agrees_with_scipy(data):
    a, b = data
    x = feasible_point(a, b)
    if x is not None:
        assert all(v >= 0 for v in x)
        assert all(sum(r[j] * x[j] for j in range(len(x))) == rhs for r, rhs in zip(a, b))
    assert (x is not None) == lp_feasible(a, b)
