"""Divisor calculus on a resolution graph.

A :class:`Cycle` is a positive integer divisor ``sum nu_i E_i`` supported on
the exceptional curves.  Anti-nef cycles (``D . E_i <= 0`` for every ``i``)
correspond to the integrally closed ideals with invertible pull-back, so
lengths, multiplicities and Lojasiewicz exponents of those ideals are read
off from the coefficient vector and the intersection form.
"""
from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ._budget import budget
from .errors import (
    BudgetExceeded,
    GraphMismatch,
    InvalidCycle,
    NonIntegerLength,
    NonTermination,
    ParseError,
)
from .exact import RatMatrix, primitive_integer_scale, solve_linear
from .graph import ResolutionGraph


@dataclass(frozen=True)
class Cycle:
    graph: ResolutionGraph
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.graph.vertex_count:
            raise InvalidCycle(f"{len(coeffs)} coefficients for a graph with {self.graph.vertex_count} vertices")
        if any(c < 0 for c in coeffs):
            raise InvalidCycle("coefficients must be nonnegative")
        if not any(coeffs):
            raise InvalidCycle("the zero divisor is not a positive cycle")
        object.__setattr__(self, "coeffs", coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __add__(self, other):
        return sum_cycles(self, other)

    def __mul__(self, k):
        return scale(self, k)

    __rmul__ = __mul__

    def __le__(self, other):
        _same_graph(self, other)
        return all(a <= b for a, b in zip(self.coeffs, other.coeffs))

    def __str__(self):
        return format_cycle(self)

    def __repr__(self):
        return f"Cycle({self.graph.name}, ({format_cycle(self)}))"


@dataclass(frozen=True)
class AntiNefCertificate:
    cycle: Cycle
    products: tuple

    @property
    def contact_vertices(self) -> tuple:
        """Vertices with ``D . E_i < 0``; the strict transform meets these curves."""
        return tuple(i for i, p in enumerate(self.products) if p < 0)

    def __bool__(self):
        return True


@dataclass(frozen=True)
class Rejection:
    """Returned by :func:`is_antinef` when some ``D . E_i`` is positive."""

    cycle: Cycle
    products: tuple
    vertex: int

    def __bool__(self):
        return False

    def __str__(self):
        return f"not anti-nef: (D.E_{self.vertex + 1}) = {self.products[self.vertex]} > 0"


@dataclass(frozen=True)
class QGeneratorSet:
    generators: tuple
    scales: tuple

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def coefficient_tuples(self) -> set:
        return {g.coeffs for g in self.generators}


@dataclass(frozen=True)
class EnumeratedCycle:
    cycle: Cycle
    length: int
    loj_exponent: Fraction


def _same_graph(a: Cycle, b: Cycle):
    if a.graph != b.graph:
        raise GraphMismatch(f"cycles live on different graphs ({a.graph.name} vs {b.graph.name})")


def format_cycle(d) -> str:
    coeffs = d.coeffs if isinstance(d, Cycle) else d
    return ",".join(str(c) for c in coeffs)


def parse_cycle(graph: ResolutionGraph, text: str) -> Cycle:
    """Parse the comma-separated literal ``5,10,15,12,9,6,3,8``."""
    parts = [p.strip() for p in text.strip().strip("()").split(",")]
    coeffs = []
    pos = 1
    for p in parts:
        try:
            coeffs.append(int(p))
        except ValueError:
            raise ParseError(f"bad cycle coefficient {p!r}", line=1, column=pos) from None
        pos += len(p) + 1
    try:
        return Cycle(graph, tuple(coeffs))
    except InvalidCycle as exc:
        raise ParseError(str(exc), line=1) from None


def products(d: Cycle) -> tuple:
    """The vector ``(D . E_1, ..., D . E_n)``."""
    return _products(d.graph._int_matrix, d.coeffs)


def _products(m, v) -> tuple:
    return tuple(sum(a * b for a, b in zip(row, v)) for row in m)


def dot(a: Cycle, b: Cycle) -> int:
    """Intersection number ``a^T M(E) b``."""
    _same_graph(a, b)
    return sum(x * y for x, y in zip(a.coeffs, products(b)))


def is_antinef(d: Cycle):
    """Certificate (truthy) if ``D . E_i <= 0`` for all ``i``, else a Rejection (falsy).

    Positive cycles on a negative definite graph always have some negative
    product, so a certificate also satisfies the "at least one < 0" clause.
    """
    p = products(d)
    for i, x in enumerate(p):
        if x > 0:
            return Rejection(d, p, i)
    return AntiNefCertificate(d, p)


def _coeff_guard(graph, start) -> int:
    return max(64, 64 * max(start) * graph.vertex_count)


def _ascend(m, v: list, limit: int):
    """Laufer ascent on ``v`` in place; ``None`` if a coefficient passes ``limit``."""
    n = len(v)
    while True:
        for i in range(n):
            if sum(a * b for a, b in zip(m[i], v)) > 0:
                v[i] += 1
                if v[i] > limit:
                    return None
                break
        else:
            return v


def antinef_completion(graph: ResolutionGraph, v: Sequence[int], limit: int | None = None) -> Cycle:
    """Smallest anti-nef cycle dominating ``v``.

    Repeatedly increments the lowest-indexed vertex whose product with the
    current cycle is positive.  On a negative definite graph this stops;
    ``limit`` bounds the coefficients and raises NonTermination when passed.
    """
    v = [int(x) for x in v]
    if len(v) != graph.vertex_count:
        raise InvalidCycle(f"{len(v)} coefficients for a graph with {graph.vertex_count} vertices")
    if not any(v) or any(x < 0 for x in v):
        raise InvalidCycle("completion needs a positive starting vector")
    if limit is None:
        limit = _coeff_guard(graph, v)
    out = _ascend(graph._int_matrix, v, limit)
    if out is None:
        raise NonTermination(f"Laufer ascent on {graph.name} passed coefficient {limit}; is the graph negative definite?")
    return Cycle(graph, tuple(out))


def artin_cycle(graph: ResolutionGraph) -> Cycle:
    """Fundamental (Artin) cycle: the smallest positive anti-nef cycle."""
    return antinef_completion(graph, (1,) * graph.vertex_count)


def length(d: Cycle) -> int:
    """Colength of the ideal attached to ``d``: ``(-(D.D) - sum nu_i (w_i - 2)) / 2``.

    Evaluated for any positive cycle; a warning is issued if ``d`` is not
    anti-nef since the value is then only a formal quantity.
    """
    if not is_antinef(d):
        warnings.warn(f"length of non anti-nef cycle ({format_cycle(d)}) on {d.graph.name}", stacklevel=2)
    num = -dot(d, d) - sum(c * (w - 2) for c, w in zip(d.coeffs, d.graph.weights))
    if num % 2:
        raise NonIntegerLength(f"odd numerator {num} for cycle ({format_cycle(d)}) on {d.graph.name}")
    return num // 2


def multiplicity(d: Cycle) -> int:
    return -dot(d, d)


def mixed_multiplicity(a: Cycle, b: Cycle) -> int:
    return -dot(a, b)


def loj_relative(d_i: Cycle, d_j: Cycle) -> Fraction:
    """``max_i nu_i(D_I) / nu_i(D_J)`` for anti-nef cycles on the same graph."""
    _same_graph(d_i, d_j)
    return max(Fraction(a, b) for a, b in zip(d_i.coeffs, d_j.coeffs))


def loj_exponent(d: Cycle, artin: Cycle | None = None) -> Fraction:
    """Exponent of the ideal of ``d`` relative to the maximal ideal."""
    return loj_relative(d, artin if artin is not None else artin_cycle(d.graph))


def scale(d: Cycle, k: int) -> Cycle:
    k = int(k)
    if k < 1:
        raise InvalidCycle("scale factor must be a positive integer")
    return Cycle(d.graph, tuple(k * c for c in d.coeffs))


def sum_cycles(a: Cycle, b: Cycle) -> Cycle:
    _same_graph(a, b)
    out = Cycle(a.graph, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))
    if is_antinef(a) and is_antinef(b) and not is_antinef(out):
        raise AssertionError("sum of anti-nef cycles left the semigroup")
    return out


def meet(a: Cycle, b: Cycle) -> Cycle:
    """Componentwise minimum."""
    _same_graph(a, b)
    return Cycle(a.graph, tuple(min(x, y) for x, y in zip(a.coeffs, b.coeffs)))


def q_generators(graph: ResolutionGraph) -> QGeneratorSet:
    """Primitive integer solutions of ``M(E) x = delta_i``, one per vertex.

    ``delta_i`` is ``-1`` at vertex ``i`` and zero elsewhere; the returned
    scale ``k_i`` satisfies ``x = k_i * F_i``.
    """
    m = graph.matrix
    n = graph.vertex_count
    gens, scales = [], []
    for i in range(n):
        delta = tuple(-1 if j == i else 0 for j in range(n))
        x = solve_linear(m, delta)
        w, k = primitive_integer_scale(x)
        f = Cycle(graph, w)
        cert = is_antinef(f)
        if not cert or cert.contact_vertices != (i,):
            raise AssertionError(f"Q-generator {i + 1} of {graph.name} is not anti-nef along delta_{i + 1}")
        gens.append(f)
        scales.append(k)
    return QGeneratorSet(tuple(gens), tuple(scales))


def qplus_coefficients(d: Cycle, qgens: QGeneratorSet | None = None) -> tuple:
    """Rational ``c`` with ``d = sum c_i F_i``; solved exactly.

    The generator matrix is square and invertible, so the combination is
    unique and ``d`` lies in the rational cone iff every ``c_i >= 0``.
    """
    if qgens is None:
        qgens = q_generators(d.graph)
    cols = RatMatrix(tuple(g.coeffs for g in qgens.generators)).transpose()
    return solve_linear(cols, d.coeffs)


def enumerate_antinef(graph: ResolutionGraph, max_length: int, cap: int | None = None) -> list[EnumeratedCycle]:
    """All anti-nef cycles of length at most ``max_length``.

    Breadth-first search from the Artin cycle: each step bumps one
    coefficient and completes the result with the Laufer ascent.  Every
    anti-nef cycle is reached by such a chain, and length strictly grows
    along it, so candidates longer than ``max_length`` are pruned.  Results
    are sorted by (length, coefficients).
    """
    if max_length < 1:
        raise ValueError("max_length must be at least 1")
    cap = budget(200_000) if cap is None else cap
    z = artin_cycle(graph)
    m = graph._int_matrix
    weights = graph.weights
    coeff_cap = max_length * max(z.coeffs) * 4

    def raw_length(v):
        p = _products(m, v)
        num = -sum(a * b for a, b in zip(v, p)) - sum(c * (w - 2) for c, w in zip(v, weights))
        if num % 2:
            raise NonIntegerLength(f"odd numerator {num} for cycle ({format_cycle(v)}) on {graph.name}")
        return num // 2

    seen = {z.coeffs: raw_length(z.coeffs)}
    queue = deque([z.coeffs])
    if seen[z.coeffs] > max_length:
        return []
    while queue:
        d = queue.popleft()
        for j in range(len(d)):
            v = list(d)
            v[j] += 1
            c = _ascend(m, v, coeff_cap)
            if c is None:
                continue
            c = tuple(c)
            if c in seen:
                continue
            ell = raw_length(c)
            if ell > max_length:
                continue
            seen[c] = ell
            if len(seen) > cap:
                raise BudgetExceeded(f"more than {cap} anti-nef candidates on {graph.name}")
            queue.append(c)

    out = [EnumeratedCycle(Cycle(graph, c), ell, loj_relative(Cycle(graph, c), z)) for c, ell in seen.items()]
    out.sort(key=lambda e: (e.length, e.cycle.coeffs))
    return out


def cycles_of_length(enumeration: Iterable[EnumeratedCycle], ell: int) -> list[Cycle]:
    return [e.cycle for e in enumeration if e.length == ell]
