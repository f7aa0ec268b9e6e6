"""Weighted-homogeneous closed forms and quasi-degree bounds."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, InvalidInput, NotQuasiHomogeneous
from .exact import as_rational
from .poly import Polynomial, jacobian_minors


@dataclass(frozen=True)
class WeightSystem:
    weights: tuple
    degree: Fraction | None = None

    def __post_init__(self):
        ws = tuple(as_rational(w) for w in self.weights)
        if not ws:
            raise InvalidInput("need at least one weight")
        if any(w <= 0 for w in ws):
            raise InvalidInput(f"weights must be positive, got {ws}")
        object.__setattr__(self, "weights", ws)
        if self.degree is not None:
            object.__setattr__(self, "degree", as_rational(self.degree))

    @property
    def num_vars(self) -> int:
        return len(self.weights)

    @property
    def min_weight(self) -> Fraction:
        return min(self.weights)


@dataclass(frozen=True)
class DegreeVector:
    degrees: tuple

    def __post_init__(self):
        ds = tuple(as_rational(d) for d in self.degrees)
        if any(d <= 0 for d in ds):
            raise InvalidInput(f"quasi-degrees must be positive, got {ds}")
        object.__setattr__(self, "degrees", ds)

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self):
        return len(self.degrees)


def weighted_loj(ws: WeightSystem) -> Fraction:
    """Lojasiewicz exponent at the origin of a weighted homogeneous germ.

    With ``m = min w``: ``(d - m)/m`` when every ``2 w_i <= d``, otherwise the
    smaller of that and ``prod(d/w_i - 1)``.
    """
    d = ws.degree
    if d is None:
        raise InvalidInput("weighted_loj needs a degree")
    if d <= 0:
        raise InvalidInput(f"degree must be positive, got {d}")
    m = ws.min_weight
    first = (d - m) / m
    if all(2 * w <= d for w in ws.weights):
        return first
    prod = math.prod((d / w - 1 for w in ws.weights), start=Fraction(1))
    return min(prod, first)


def quasi_degree(f: Polynomial, ws: WeightSystem) -> Fraction:
    if f.is_zero():
        raise InvalidInput("the zero polynomial has no quasi-degree")
    if f.num_vars != ws.num_vars:
        raise DimensionMismatch(f"{f.num_vars} variables but {ws.num_vars} weights")
    first = None
    for e in sorted(f.terms):
        deg = sum((w * k for w, k in zip(ws.weights, e)), Fraction(0))
        if first is None:
            first = (e, deg)
        elif deg != first[1]:
            raise NotQuasiHomogeneous(
                f"terms {_mono(first[0])} (degree {first[1]}) and {_mono(e)} (degree {deg}) disagree",
                terms=(first[0], e),
            )
    return first[1]


def _mono(e):
    return "*".join(f"z{i + 1}^{k}" if k > 1 else f"z{i + 1}" for i, k in enumerate(e) if k) or "1"


@dataclass(frozen=True)
class HarauxBounds:
    lower: Fraction
    upper: Fraction
    f_degrees: tuple
    minor_degrees: tuple
    min_weight: Fraction
    min_degree: Fraction = field(init=False)
    max_degree: Fraction = field(init=False)

    def __post_init__(self):
        all_d = self.f_degrees + self.minor_degrees
        object.__setattr__(self, "min_degree", min(all_d))
        object.__setattr__(self, "max_degree", max(all_d))


def haraux_bounds(fs: Sequence[Polynomial], ws: WeightSystem, minor_size: int) -> HarauxBounds:
    """Quasi-degree bounds ``min d / min w <= L0 <= max d / min w``.

    The degree pool is every ``f_i`` together with every nonzero
    ``minor_size`` Jacobian minor.
    """
    f_deg = tuple(quasi_degree(f, ws) for f in fs)
    g_deg = tuple(quasi_degree(g, ws) for g in jacobian_minors(fs, minor_size))
    pool = f_deg + g_deg
    m = ws.min_weight
    return HarauxBounds(min(pool) / m, max(pool) / m, f_deg, g_deg, m)


def gradient_exponents(theta2) -> Fraction:
    """``theta1 = theta2 / (1 + theta2)``."""
    t = as_rational(theta2)
    if t <= 0:
        raise InvalidInput(f"theta2 must be positive, got {t}")
    return t / (1 + t)
