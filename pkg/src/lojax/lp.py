"""Exact phase-one simplex for tiny feasibility problems.

Only feasibility is ever needed (Newton polygon membership), so there is no
objective beyond the artificial one.  Bland's rule guarantees termination.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .errors import DimensionMismatch


def feasible_point(a: Sequence[Sequence], b: Sequence) -> Optional[tuple]:
    """Find ``x >= 0`` with ``a @ x == b`` or return ``None``.

    Entries may be ints or Fractions; the returned point is a tuple of
    Fractions.
    """
    m = len(a)
    if m != len(b):
        raise DimensionMismatch("row count of a and length of b differ")
    n = len(a[0]) if m else 0
    if any(len(r) != n for r in a):
        raise DimensionMismatch("ragged constraint matrix")

    rows = []
    for r, rhs in zip(a, b):
        r = [Fraction(x) for x in r]
        rhs = Fraction(rhs)
        if rhs < 0:
            r, rhs = [-x for x in r], -rhs
        rows.append(r + [Fraction(int(i == len(rows))) for i in range(m)] + [rhs])

    # columns 0..n-1 original, n..n+m-1 artificial, last is the rhs
    basis = [n + i for i in range(m)]
    width = n + m
    cost = [Fraction(0)] * n + [Fraction(1)] * m

    while True:
        # reduced costs relative to the current basis
        reduced = list(cost)
        for i, bi in enumerate(basis):
            cb = cost[bi]
            if cb:
                row = rows[i]
                for j in range(width):
                    reduced[j] -= cb * row[j]
        entering = next((j for j in range(width) if reduced[j] < 0), None)
        if entering is None:
            break
        best = None
        for i, row in enumerate(rows):
            if row[entering] > 0:
                ratio = row[-1] / row[entering]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:  # unbounded; cannot happen for the bounded phase-one objective
            break
        _pivot(rows, best[1], entering)
        basis[best[1]] = entering

    objective = sum((cost[bi] * rows[i][-1] for i, bi in enumerate(basis)), Fraction(0))
    if objective != 0:
        return None
    x = [Fraction(0)] * n
    for i, bi in enumerate(basis):
        if bi < n:
            x[bi] = rows[i][-1]
    return tuple(x)


def _pivot(rows, r, c):
    prow = rows[r]
    p = prow[c]
    rows[r] = prow = [x / p for x in prow]
    for i, row in enumerate(rows):
        if i != r and row[c] != 0:
            f = row[c]
            rows[i] = [x - f * y for x, y in zip(row, prow)]
