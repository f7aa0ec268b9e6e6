"""Exact rational scalars, matrices and linear solves.

Every scalar in lojax is a :class:`fractions.Fraction`, which is always
stored in lowest terms with a positive denominator.  Matrices are small
(the largest resolution graph in the catalog has a handful of vertices), so
they are kept as immutable tuples of tuples rather than arrays.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NonPositiveEntry, SingularMatrix

Rational = Fraction
RatVector = tuple  # tuple[Fraction, ...]


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a :class:`Fraction`.

    Floats are rejected so that inexact values never leak into the core.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


def format_rational(q) -> str:
    """Render as ``p`` or ``p/q``; never as a decimal."""
    q = as_rational(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class RatMatrix:
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(as_rational(x) for x in row) for row in self.entries)
        if not rows or not rows[0]:
            raise DimensionMismatch("matrix must have at least one row and column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("ragged matrix rows")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "RatMatrix":
        return RatMatrix(tuple(zip(*self.entries)))

    def is_symmetric(self) -> bool:
        return self.is_square and self.entries == self.transpose().entries

    def leading_minor(self, k: int) -> "RatMatrix":
        return RatMatrix(tuple(r[:k] for r in self.entries[:k]))

    def apply(self, v: Sequence) -> tuple:
        """Matrix-vector product ``self @ v``."""
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for {self.rows}x{self.cols} matrix")
        v = [as_rational(x) for x in v]
        return tuple(sum((a * b for a, b in zip(r, v)), Fraction(0)) for r in self.entries)

    def __matmul__(self, other):
        if isinstance(other, RatMatrix):
            if self.cols != other.rows:
                raise DimensionMismatch("inner dimensions differ")
            cols = [other.column(j) for j in range(other.cols)]
            return RatMatrix(
                tuple(tuple(sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols) for r in self.entries)
            )
        return self.apply(other)

    def bilinear(self, a: Sequence, b: Sequence) -> Fraction:
        """``a^T M b``."""
        mb = self.apply(b)
        return sum((as_rational(x) * y for x, y in zip(a, mb)), Fraction(0))

    def __str__(self):
        cells = [[format_rational(x) for x in r] for r in self.entries]
        width = max(len(c) for r in cells for c in r)
        return "\n".join(" ".join(c.rjust(width) for c in r) for r in cells)


def _integer_rows(rows: Iterable[Sequence[Fraction]]) -> list[list[int]]:
    # Scaling a row by a nonzero constant changes neither the solution set
    # nor the pivot structure, so elimination can run on integers.
    out = []
    for r in rows:
        den = reduce(lcm, (x.denominator for x in r), 1)
        out.append([int(x * den) for x in r])
    return out


def _bareiss(a: list[list[int]], ncols: int) -> tuple[list[list[int]], int, int]:
    """In-place fraction-free forward elimination on the first ``ncols`` columns.

    Returns the reduced rows, the number of row swaps, and the rank reached
    before a zero pivot column was encountered (``n`` when nonsingular).
    """
    n = len(a)
    swaps = 0
    prev = 1
    for k in range(ncols):
        pivot = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pivot is None:
            return a, swaps, k
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            swaps += 1
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, len(row_i)):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return a, swaps, ncols


def determinant(m: RatMatrix) -> Fraction:
    """Exact determinant by Bareiss fraction-free elimination."""
    if not m.is_square:
        raise DimensionMismatch(f"determinant of a {m.rows}x{m.cols} matrix")
    scale = Fraction(1)
    rows = []
    for r in m.entries:
        den = reduce(lcm, (x.denominator for x in r), 1)
        scale *= den
        rows.append([int(x * den) for x in r])
    n = m.rows
    a, swaps, rank = _bareiss(rows, n)
    if rank < n:
        return Fraction(0)
    det = a[n - 1][n - 1]
    if swaps % 2:
        det = -det
    return Fraction(det) / scale


def solve_linear(m: RatMatrix, b: Sequence) -> tuple:
    """Solve ``m @ x = b`` exactly for square nonsingular ``m``."""
    if not m.is_square:
        raise DimensionMismatch(f"solve with a {m.rows}x{m.cols} matrix")
    if len(b) != m.rows:
        raise DimensionMismatch(f"right-hand side of length {len(b)} for {m.rows} equations")
    n = m.rows
    aug = _integer_rows(r + (as_rational(x),) for r, x in zip(m.entries, b))
    a, _, rank = _bareiss(aug, n)
    if rank < n:
        raise SingularMatrix("matrix is singular")
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(a[i][n])
        for j in range(i + 1, n):
            acc -= a[i][j] * x[j]
        x[i] = acc / a[i][i]
    return tuple(x)


def primitive_integer_scale(v: Sequence) -> tuple[tuple[int, ...], Fraction]:
    """Write a positive rational vector as ``k * w`` with ``w`` primitive.

    ``w`` has positive, relatively prime integer entries and ``k`` is a
    positive rational.
    """
    q = [as_rational(x) for x in v]
    if not q:
        raise NonPositiveEntry("empty vector")
    for i, x in enumerate(q):
        if x <= 0:
            raise NonPositiveEntry(f"entry {i} is {format_rational(x)}, expected > 0")
    den = reduce(lcm, (x.denominator for x in q), 1)
    ints = [int(x * den) for x in q]
    g = reduce(gcd, ints)
    w = tuple(x // g for x in ints)
    return w, q[0] / w[0]
