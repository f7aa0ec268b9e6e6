"""Dual resolution graphs and their intersection matrices.

A graph stores the self-intersection weights ``w_i = -E_i^2`` of the
exceptional curves and which pairs of curves meet.  Vertex order is exactly
the order given by the caller (or the file): divisor tuples elsewhere in the
package are written against that order, so it is never canonicalized.

File format::

    graph E8
    vertices: 8
    weights: 2 2 2 2 2 2 2 2
    edges: 1-2 2-3 3-4 4-5 5-6 6-7 3-8

Indices in the file are 1-based; ``#`` starts a comment.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .errors import ParseError, ValidationError
from .exact import RatMatrix, determinant


@dataclass(frozen=True)
class ResolutionGraph:
    name: str
    weights: tuple
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        weights = tuple(int(w) for w in self.weights)
        n = len(weights)
        if n < 1:
            raise ValueError("a resolution graph needs at least one vertex")
        norm = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise ValueError(f"self-loop at vertex {i + 1}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge {i + 1}-{j + 1} out of range for {n} vertices")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, name, weights, edges, one_based=False):
        off = 1 if one_based else 0
        return cls(name, tuple(weights), frozenset((i - off, j - off) for i, j in edges))

    @property
    def vertex_count(self) -> int:
        return len(self.weights)

    def neighbours(self, i: int) -> list[int]:
        return sorted({b if a == i else a for a, b in self.edges if i in (a, b)})

    @cached_property
    def matrix(self) -> RatMatrix:
        return intersection_matrix(self)

    @cached_property
    def _int_matrix(self) -> tuple:
        # integer copy for the hot loops in the cycle calculus
        n = self.vertex_count
        m = [[0] * n for _ in range(n)]
        for i, w in enumerate(self.weights):
            m[i][i] = -w
        for i, j in self.edges:
            m[i][j] = m[j][i] = 1
        return tuple(tuple(r) for r in m)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def intersection_matrix(g: ResolutionGraph) -> RatMatrix:
    """Symmetric matrix with ``-w_i`` on the diagonal and 1 for meeting curves."""
    return RatMatrix(g._int_matrix)


@dataclass(frozen=True)
class ValidationReport:
    connected: bool
    weights_ok: bool
    negative_definite: bool
    leading_minors: tuple = ()
    problems: tuple = ()

    @property
    def ok(self) -> bool:
        return self.connected and self.weights_ok and self.negative_definite

    def __bool__(self):
        return self.ok


def _is_connected(g: ResolutionGraph) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in g.neighbours(v):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == g.vertex_count


def validate(g: ResolutionGraph, min_weight: int | None = 2) -> ValidationReport:
    """Check connectivity, weight bounds and negative definiteness.

    Negative definiteness uses the sign pattern of the leading principal
    minors: ``(-1)^k det(M_k) > 0`` for every ``k``.  Pass
    ``min_weight=None`` to skip the weight check.
    """
    problems = []
    connected = _is_connected(g)
    if not connected:
        problems.append("graph is not connected")
    low = [i for i, w in enumerate(g.weights) if min_weight is not None and w < min_weight]
    for i in low:
        problems.append(f"vertex {i + 1} has weight {g.weights[i]} < {min_weight}")
    m = intersection_matrix(g)
    minors = tuple(determinant(m.leading_minor(k)) for k in range(1, g.vertex_count + 1))
    bad = [k for k, d in enumerate(minors, start=1) if (-1) ** k * d <= 0]
    if bad:
        problems.append(f"intersection matrix is not negative definite (leading minor {bad[0]} has the wrong sign)")
    return ValidationReport(connected, not low, not bad, minors, tuple(problems))


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_graph(text: str, check: bool = True, min_weight: int | None = 2) -> ResolutionGraph:
    """Parse the line-oriented graph format; vertex order is the file order."""
    lines = [(no, raw) for no, raw in enumerate(text.splitlines(), start=1) if _strip(raw)]
    if not lines:
        raise ParseError("empty graph file", line=1)

    def field_value(idx, key):
        if idx >= len(lines):
            raise ParseError(f"missing '{key}' line", line=lines[-1][0] + 1)
        no, raw = lines[idx]
        body = _strip(raw)
        if key == "graph":
            head, _, rest = body.partition(" ")
            if head != "graph" or not rest.strip():
                raise ParseError("expected 'graph <name>'", line=no, column=raw.find(body) + 1)
            return no, raw, rest.strip()
        head, sep, rest = body.partition(":")
        if head.strip() != key or not sep:
            raise ParseError(f"expected '{key}:'", line=no, column=raw.find(body) + 1)
        return no, raw, rest

    _, _, name = field_value(0, "graph")
    no, raw, rest = field_value(1, "vertices")
    try:
        n = int(rest)
    except ValueError:
        raise ParseError(f"vertex count {rest.strip()!r} is not an integer", line=no, column=raw.find(":") + 2) from None
    if n < 1:
        raise ParseError("vertex count must be at least 1", line=no)

    no, raw, rest = field_value(2, "weights")
    tokens = rest.split()
    if len(tokens) != n:
        raise ParseError(f"expected {n} weights, found {len(tokens)}", line=no)
    weights = []
    for tok in tokens:
        try:
            weights.append(int(tok))
        except ValueError:
            raise ParseError(f"weight {tok!r} is not an integer", line=no, column=raw.find(tok) + 1) from None

    edges = set()
    if len(lines) > 3:
        no, raw, rest = field_value(3, "edges")
        for tok in rest.split():
            col = raw.find(tok) + 1
            a, sep, b = tok.partition("-")
            try:
                i, j = int(a), int(b)
            except ValueError:
                raise ParseError(f"bad edge {tok!r}, expected i-j", line=no, column=col) from None
            if not sep:
                raise ParseError(f"bad edge {tok!r}, expected i-j", line=no, column=col)
            if not (1 <= i <= n and 1 <= j <= n):
                raise ParseError(f"edge {tok}: vertex out of range 1..{n}", line=no, column=col)
            if i == j:
                raise ParseError(f"edge {tok}: self-loop", line=no, column=col)
            key = (min(i, j) - 1, max(i, j) - 1)
            if key in edges:
                raise ParseError(f"edge {tok}: duplicate edge", line=no, column=col)
            edges.add(key)
        if len(lines) > 4:
            raise ParseError("unexpected content after 'edges:' line", line=lines[4][0])
    elif n > 1:
        raise ParseError("missing 'edges:' line", line=lines[-1][0] + 1)

    g = ResolutionGraph(name, tuple(weights), frozenset(edges))
    if check:
        report = validate(g, min_weight=min_weight)
        if not report.ok:
            raise ValidationError(report)
    return g


def serialize_graph(g: ResolutionGraph) -> str:
    edges = " ".join(f"{i + 1}-{j + 1}" for i, j in g.sorted_edges())
    return (
        f"graph {g.name}\n"
        f"vertices: {g.vertex_count}\n"
        f"weights: {' '.join(map(str, g.weights))}\n"
        f"edges: {edges}\n"
    )


def chain(name: str, weights) -> ResolutionGraph:
    """Linear chain ``E_1 - E_2 - ... - E_n``."""
    weights = tuple(weights)
    return ResolutionGraph(name, weights, frozenset((i, i + 1) for i in range(len(weights) - 1)))


def chain_with_branch(name: str, weights, attach: int) -> ResolutionGraph:
    """Chain on the first ``n-1`` vertices with the last vertex hung below
    vertex ``attach`` (0-based)."""
    weights = tuple(weights)
    n = len(weights)
    edges = {(i, i + 1) for i in range(n - 2)} | {(attach, n - 1)}
    return ResolutionGraph(name, weights, frozenset(edges))

