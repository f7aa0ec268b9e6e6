import warnings
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lojax import cycles as cy
from lojax.catalog import load_entry
from lojax.errors import BudgetExceeded, GraphMismatch, InvalidCycle, NonTermination, ParseError
from lojax.graph import ResolutionGraph, chain
from oracles import brute_antinef


def graph(name):
    return load_entry(name).graph


E6, E7, E8 = graph("E6"), graph("E7"), graph("E8")


@pytest.mark.parametrize("n", range(1, 9))
def test_artin_chain(n):
    assert cy.artin_cycle(chain(f"A{n}", (2,) * n)).coeffs == (1,) * n


def test_artin_e():
    assert cy.artin_cycle(E8).coeffs == (2, 4, 6, 5, 4, 3, 2, 3)
    assert cy.artin_cycle(E7).coeffs == (2, 3, 4, 3, 2, 1, 2)
    assert cy.artin_cycle(E6).coeffs == (1, 2, 3, 2, 1, 2)


def test_reject_all_ones_e8():
    r = cy.is_antinef(cy.Cycle(E8, (1,) * 8))
    assert not r
    assert r.vertex == 2 and r.products[2] > 0
    assert "E_3" in str(r)


def test_certificate_contacts():
    cert = cy.is_antinef(cy.artin_cycle(E8))
    assert cert and cert.contact_vertices == (6,)


def test_single_vertex_numbers():
    g = ResolutionGraph("P", (3,))
    a, b = cy.Cycle(g, (1,)), cy.Cycle(g, (2,))
    assert cy.mixed_multiplicity(a, b) == 6
    assert cy.multiplicity(a) == 3
    assert cy.length(a) == 1


def test_relative_exponent_e6():
    a = cy.Cycle(E6, (4, 5, 6, 4, 2, 3))
    b = cy.Cycle(E6, (2, 4, 6, 4, 2, 3))
    assert cy.loj_relative(a, b) == 2


def test_scale_and_sum():
    z8 = cy.artin_cycle(E8)
    assert cy.loj_exponent(cy.scale(z8, 2)) == 2
    z6 = cy.artin_cycle(E6)
    assert cy.sum_cycles(z6, z6).coeffs == (2, 4, 6, 4, 2, 4)
    assert (z6 + z6) == 2 * z6


def test_e8_polar_completion():
    z = cy.artin_cycle(E8)
    dz2 = cy.Cycle(E8, (4, 7, 10, 8, 6, 4, 2, 5))
    dp = cy.Cycle(E8, (5, 10, 15, 12, 9, 6, 3, 8))
    assert dp <= 4 * z
    low = cy.meet(cy.meet(4 * z, 2 * dz2), dp)
    assert cy.antinef_completion(E8, low.coeffs) == dp
    assert cy.length(dp) == 4
    assert cy.loj_exponent(dp) == Fraction(8, 3)


def test_errors():
    with pytest.raises(InvalidCycle):
        cy.Cycle(E6, (0,) * 6)
    with pytest.raises(InvalidCycle):
        cy.Cycle(E6, (1, 2, 3))
    with pytest.raises(GraphMismatch):
        cy.dot(cy.artin_cycle(E6), cy.artin_cycle(E7))
    with pytest.raises(ParseError):
        cy.parse_cycle(E6, "1,2,x,2,1,2")
    with pytest.raises(ParseError):
        cy.parse_cycle(E6, "1,2")
    with pytest.raises(InvalidCycle):
        cy.scale(cy.artin_cycle(E6), 0)


def test_parse_cycle_roundtrip():
    c = cy.parse_cycle(E8, "(5,10,15,12,9,6,3,8)")
    assert cy.parse_cycle(E8, cy.format_cycle(c)) == c


def test_nontermination_on_indefinite_graph():
    g = chain("ones", (1, 1, 1))
    with pytest.raises(NonTermination):
        cy.antinef_completion(g, (1, 1, 1), limit=50)


def test_length_warns_off_semigroup():
    with warnings.catch_warnings(record=True) as w:
        warnings.simplefilter("always")
        cy.length(cy.Cycle(E8, (1,) * 8))
    assert w and "anti-nef" in str(w[0].message)


def test_enumeration_budget():
    with pytest.raises(BudgetExceeded):
        cy.enumerate_antinef(E6, 15, cap=3)


def test_enumeration_sorted_and_counts():
    en = cy.enumerate_antinef(E6, 15)
    keys = [(e.length, e.cycle.coeffs) for e in en]
    assert keys == sorted(keys)
    assert len(en) == 43
    assert len(cy.enumerate_antinef(E7, 15)) == 38
    assert len(cy.enumerate_antinef(E8, 15)) == 26


@pytest.mark.parametrize("name,limit", [("E6", 15), ("E7", 15), ("E8", 15), ("A5", 12), ("D6", 12), ("E6,0", 13), ("E7,0", 8)])
def test_enumeration_matches_brute_force(name, limit):
    g = graph(name)
    got = {e.cycle.coeffs: e.length for e in cy.enumerate_antinef(g, limit)}
    assert got == brute_antinef(g.weights, g.sorted_edges(), limit)


@pytest.mark.parametrize("name", ["E6", "E7", "E8", "E6,0", "E7,0", "A4", "D5"])
def test_q_generators_solve_delta(name):
    g = graph(name)
    qg = cy.q_generators(g)
    assert len(qg) == g.vertex_count
    for i, (f, k) in enumerate(zip(qg, qg.scales)):
        p = cy.products(f)
        assert all(x == 0 for j, x in enumerate(p) if j != i) and p[i] < 0
        assert p[i] * k == -1


# -- properties over the enumerated semigroup ------------------------------

ENUM = {name: cy.enumerate_antinef(graph(name), 12) for name in ("E6", "E7", "E8")}


def pairs(name):
    return st.tuples(st.sampled_from(ENUM[name]), st.sampled_from(ENUM[name]))


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(sorted(ENUM)).flatmap(pairs))
def test_semigroup_closed_under_sum_and_meet(ab):
    a, b = ab[0].cycle, ab[1].cycle
    assert cy.is_antinef(a + b)
    assert cy.is_antinef(cy.meet(a, b))


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(sorted(ENUM)).flatmap(pairs))
def test_length_monotone(ab):
    a, b = ab
    if a.cycle <= b.cycle and a.cycle != b.cycle:
        assert a.length < b.length


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(["E6", "E7", "E8"]), st.data())
def test_completion_is_least_antinef_above(name, data):
    g = graph(name)
    v = data.draw(st.lists(st.integers(0, 4), min_size=g.vertex_count, max_size=g.vertex_count).filter(any))
    c = cy.antinef_completion(g, v)
    assert cy.is_antinef(c)
    assert all(x >= y for x, y in zip(c.coeffs, v))
    for e in ENUM[name]:
        if all(x >= y for x, y in zip(e.cycle.coeffs, v)):
            assert c <= e.cycle


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(sorted(ENUM)).flatmap(lambda n: st.sampled_from(ENUM[n])), st.integers(1, 5))
def test_scaling_laws(e, k):
    d = e.cycle
    assert cy.loj_exponent(k * d) == k * e.loj_exponent
    assert cy.multiplicity(k * d) == k * k * cy.multiplicity(d)


def test_qplus_nonnegative_everywhere():
    for name, en in ENUM.items():
        qg = cy.q_generators(graph(name))
        for e in en:
            coeffs = cy.qplus_coefficients(e.cycle, qg)
            assert all(c >= 0 for c in coeffs)
            recon = [sum(c * f[i] for c, f in zip(coeffs, qg)) for i in range(len(e.cycle))]
            assert tuple(recon) == e.cycle.coeffs


def test_lengths_positive_integers():
    for en in ENUM.values():
        for e in en:
            assert isinstance(e.length, int) and e.length >= 1
            assert e.loj_exponent >= 1


def test_cycles_of_length():
    en = cy.enumerate_antinef(graph("E6,0"), 13)
    got = {c.coeffs for c in cy.cycles_of_length(en, 13)}
    assert (3, 8, 12, 10, 8, 5, 6) in got and (3, 8, 13, 11, 8, 4, 7) in got
    assert cy.cycles_of_length(en, 999) == []
