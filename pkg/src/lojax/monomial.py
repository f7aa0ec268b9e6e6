"""Monomial ideals and their integral closure via the Newton polygon.

For a monomial ideal the integral closure is generated by the lattice points
of the convex hull of ``union(m_j + R^N_{>=0})``.  Coefficients never matter,
so an ideal is just its set of minimal exponent vectors.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, ParseError
from .lp import feasible_point


def _divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def minimalize(points: Iterable[Sequence[int]]) -> frozenset:
    pts = sorted({tuple(p) for p in points}, key=lambda p: (sum(p), p))
    keep = []
    for p in pts:
        if not any(_divides(q, p) for q in keep):
            keep.append(p)
    return frozenset(keep)


@dataclass(frozen=True)
class MonomialIdeal:
    num_vars: int
    generators: frozenset

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError("need at least one variable")
        gens = [tuple(int(e) for e in g) for g in self.generators]
        if not gens:
            raise ValueError("a monomial ideal needs at least one generator")
        for g in gens:
            if len(g) != self.num_vars:
                raise DimensionMismatch(f"exponent vector {g} has length {len(g)}, expected {self.num_vars}")
            if any(e < 0 for e in g):
                raise ValueError(f"negative exponent in {g}")
        object.__setattr__(self, "generators", minimalize(gens))

    @classmethod
    def of(cls, *gens) -> "MonomialIdeal":
        return cls(len(gens[0]), frozenset(tuple(g) for g in gens))

    def sorted_generators(self) -> list[tuple]:
        return sorted(self.generators, key=lambda g: (sum(g), tuple(-e for e in g)))

    def contains_monomial(self, m: Sequence[int]) -> bool:
        return any(_divides(g, m) for g in self.generators)

    def __le__(self, other: "MonomialIdeal") -> bool:
        """Ideal containment ``self ⊆ other``."""
        return all(other.contains_monomial(g) for g in self.generators)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        if self.num_vars != other.num_vars:
            raise DimensionMismatch("ideals in different rings")
        prods = (tuple(a + b for a, b in zip(g, h)) for g in self.generators for h in other.generators)
        return MonomialIdeal(self.num_vars, frozenset(prods))

    def __str__(self):
        return "<" + ", ".join(monomial_str(g) for g in self.sorted_generators()) + ">"


def monomial_str(e: Sequence[int], names=None) -> str:
    names = names or [f"z{i + 1}" for i in range(len(e))]
    parts = [n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k]
    return "*".join(parts) or "1"


def np_membership(point: Sequence[int], ideal: MonomialIdeal) -> bool:
    """Is ``point`` in the Newton polygon of ``ideal``?

    Decides whether some convex combination of generators is componentwise
    below ``point`` by exact phase-one simplex on
    ``sum l_j m_j + s = point, sum l_j = 1, l, s >= 0``.
    """
    point = tuple(int(x) for x in point)
    if len(point) != ideal.num_vars:
        raise DimensionMismatch(f"point of length {len(point)} for an ideal in {ideal.num_vars} variables")
    if ideal.contains_monomial(point):
        return True
    gens = sorted(ideal.generators)
    n = ideal.num_vars
    rows = []
    for k in range(n):
        rows.append([g[k] for g in gens] + [int(i == k) for i in range(n)])
    rows.append([1] * len(gens) + [0] * n)
    return feasible_point(rows, list(point) + [1]) is not None


def newton_closure(ideal: MonomialIdeal) -> MonomialIdeal:
    """Integral closure of a monomial ideal.

    Any new minimal generator lies below the componentwise maximum of the
    existing generators, so only that box is scanned.
    """
    top = [max(g[k] for g in ideal.generators) for k in range(ideal.num_vars)]
    found = set(ideal.generators)
    for p in itertools.product(*(range(t + 1) for t in top)):
        if p not in found and not ideal.contains_monomial(p) and np_membership(p, ideal):
            found.add(p)
    return MonomialIdeal(ideal.num_vars, frozenset(found))


def parse_monomial_ideal(text: str) -> MonomialIdeal:
    """Parse ``vars: N`` followed by one exponent vector per line."""
    lines = [(no, raw.split("#", 1)[0].strip()) for no, raw in enumerate(text.splitlines(), start=1)]
    lines = [(no, body) for no, body in lines if body]
    if not lines:
        raise ParseError("empty monomial ideal file", line=1)
    no, head = lines[0]
    key, sep, rest = head.partition(":")
    if key.strip() != "vars" or not sep:
        raise ParseError("expected 'vars: N'", line=no, column=1)
    try:
        n = int(rest)
    except ValueError:
        raise ParseError(f"bad variable count {rest.strip()!r}", line=no) from None
    gens = []
    for no, body in lines[1:]:
        try:
            vec = tuple(int(t) for t in body.split())
        except ValueError:
            raise ParseError(f"bad exponent vector {body!r}", line=no) from None
        if len(vec) != n:
            raise ParseError(f"expected {n} exponents, found {len(vec)}", line=no)
        if any(e < 0 for e in vec):
            raise ParseError("negative exponent", line=no)
        gens.append(vec)
    if not gens:
        raise ParseError("no generators", line=lines[-1][0] + 1)
    return MonomialIdeal(n, frozenset(gens))


def serialize_monomial_ideal(ideal: MonomialIdeal) -> str:
    body = "\n".join(" ".join(map(str, g)) for g in ideal.sorted_generators())
    return f"vars: {ideal.num_vars}\n{body}\n"
