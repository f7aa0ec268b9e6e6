"""Exact multivariate polynomials over Q and a Buchberger Groebner engine.

Polynomials are immutable maps from exponent tuples to nonzero Fractions.
The Groebner code works on plain dicts internally for speed and wraps the
results back into :class:`Polynomial` objects.

Colengths are computed globally, from the standard monomials of the whole
polynomial ring.  For quasi-homogeneous ideals (everything in the catalog)
this agrees with the local colength at the origin.
"""
from __future__ import annotations

import itertools
import math
import re
import warnings
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from ._budget import budget
from .errors import BudgetExceeded, DimensionMismatch, InvalidInput, ParseError, SizeTooLarge
from .exact import format_rational

INFINITE = math.inf


@dataclass(frozen=True)
class MonomialOrder:
    """``grevlex`` (default) or ``lex``; ``var_order`` lists variables from largest."""

    kind: str = "grevlex"
    var_order: tuple | None = None

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex"):
            raise InvalidInput(f"unknown monomial order {self.kind!r}")

    def _perm(self, n):
        if self.var_order is None:
            return tuple(range(n))
        if sorted(self.var_order) != list(range(n)):
            raise DimensionMismatch(f"variable order {self.var_order} is not a permutation of {n} variables")
        return self.var_order

    def key(self, e: Sequence[int]):
        """Sort key: larger key means larger monomial."""
        perm = self._perm(len(e))
        if self.kind == "lex":
            return tuple(e[i] for i in perm)
        return (sum(e),) + tuple(-e[i] for i in reversed(perm))

    def keyfunc(self, n: int):
        perm = self._perm(n)
        if self.kind == "lex":
            return lambda e: tuple(e[i] for i in perm)
        rev = tuple(reversed(perm))
        return lambda e: (sum(e),) + tuple(-e[i] for i in rev)


GREVLEX = MonomialOrder()
LEX = MonomialOrder("lex")


class Polynomial:
    __slots__ = ("num_vars", "_terms", "_hash")

    def __init__(self, num_vars: int, terms: Mapping | Iterable = ()):
        self.num_vars = int(num_vars)
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for e, c in items:
            e = tuple(int(x) for x in e)
            if len(e) != self.num_vars:
                raise DimensionMismatch(f"exponent {e} in a ring with {self.num_vars} variables")
            c = Fraction(c)
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
                if not clean[e]:
                    del clean[e]
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, num_vars, d):
        p = cls.__new__(cls)
        p.num_vars = num_vars
        p._terms = d
        p._hash = None
        return p

    @classmethod
    def constant(cls, num_vars, c=1):
        return cls(num_vars, {(0,) * num_vars: c})

    @classmethod
    def variable(cls, num_vars, i):
        e = [0] * num_vars
        e[i] = 1
        return cls(num_vars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exponent, c=1):
        return cls(len(exponent), {tuple(exponent): c})

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.num_vars, Fraction(0))

    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.num_vars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.num_vars != self.num_vars:
            raise DimensionMismatch(f"polynomials in {self.num_vars} and {other.num_vars} variables")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Polynomial._wrap(self.num_vars, _add(self._terms, other._terms, Fraction(1)))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._wrap(self.num_vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Polynomial._wrap(self.num_vars, _add(self._terms, other._terms, Fraction(-1)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Polynomial._wrap(self.num_vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.num_vars)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.num_vars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.num_vars == other.num_vars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num_vars, frozenset(self._terms.items())))
        return self._hash

    def diff(self, i: int) -> "Polynomial":
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return Polynomial._wrap(self.num_vars, out)

    def gradient(self) -> list["Polynomial"]:
        return [self.diff(i) for i in range(self.num_vars)]

    def leading_term(self, order: MonomialOrder = GREVLEX):
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        e = max(self._terms, key=order.keyfunc(self.num_vars))
        return e, self._terms[e]

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> tuple:
        return self.leading_term(order)[0]

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        _, c = self.leading_term(order)
        return Polynomial._wrap(self.num_vars, {e: v / c for e, v in self._terms.items()})

    def sorted_terms(self, order: MonomialOrder = GREVLEX) -> list:
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def monomials(self) -> list:
        return list(self._terms)

    def to_str(self, names: Sequence[str] | None = None, order: MonomialOrder = GREVLEX) -> str:
        names = names or [f"z{i + 1}" for i in range(self.num_vars)]
        if not self._terms:
            return "0"
        out = []
        for k, (e, c) in enumerate(self.sorted_terms(order)):
            mono = "*".join(n if p == 1 else f"{n}^{p}" for n, p in zip(names, e) if p)
            mag = abs(c)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            if k == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Polynomial({self.to_str()!r})"


def _add(a: dict, b: dict, s: Fraction) -> dict:
    out = dict(a)
    for e, c in b.items():
        v = out.get(e, 0) + s * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


# --------------------------------------------------------------------------
# Groebner bases


class _Basis:
    """Dict-based working basis: parallel lists of polys, LMs and LCs."""

    def __init__(self, n, key):
        self.n = n
        self.key = key
        self.polys = []
        self.lms = []

    def reduce(self, f: dict, skip=None) -> dict:
        """Full reduction (every term) of ``f`` by the active elements."""
        key = self.key
        p = dict(f)
        rem = {}
        active = [(i, lm) for i, lm in enumerate(self.lms) if lm is not None and i != skip]
        while p:
            lt = max(p, key=key)
            c = p[lt]
            for i, lm in active:
                if _divides(lm, lt):
                    shift = tuple(a - b for a, b in zip(lt, lm))
                    g = self.polys[i]
                    for e, v in g.items():
                        t = tuple(a + b for a, b in zip(e, shift))
                        w = p.get(t, 0) - c * v
                        if w:
                            p[t] = w
                        else:
                            p.pop(t, None)
                    break
            else:
                rem[lt] = c
                del p[lt]
        return rem

    def add(self, f: dict) -> int:
        lm = max(f, key=self.key)
        c = f[lm]
        self.polys.append({e: v / c for e, v in f.items()})
        self.lms.append(lm)
        return len(self.polys) - 1


def _spoly(f: dict, lf, g: dict, lg) -> dict:
    lcm = tuple(max(a, b) for a, b in zip(lf, lg))
    sf = tuple(a - b for a, b in zip(lcm, lf))
    sg = tuple(a - b for a, b in zip(lcm, lg))
    out = {}
    for e, c in f.items():
        out[tuple(a + b for a, b in zip(e, sf))] = c
    for e, c in g.items():
        t = tuple(a + b for a, b in zip(e, sg))
        v = out.get(t, 0) - c
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return out


@dataclass(frozen=True)
class GroebnerBasis:
    order: MonomialOrder
    elements: tuple
    num_vars: int

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def leading_monomials(self) -> list[tuple]:
        return [g.leading_monomial(self.order) for g in self.elements]

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()

    def is_unit_ideal(self) -> bool:
        return any(sum(lm) == 0 for lm in self.leading_monomials())

    def pure_powers(self) -> list:
        """Smallest pure power of each variable among the leading monomials, or None."""
        out = []
        for i in range(self.num_vars):
            best = None
            for lm in self.leading_monomials():
                if all(lm[j] == 0 for j in range(self.num_vars) if j != i):
                    best = lm[i] if best is None else min(best, lm[i])
            out.append(best)
        return out

    def is_zero_dimensional(self) -> bool:
        return all(p is not None for p in self.pure_powers())

    def standard_monomials(self) -> list[tuple]:
        if not self.is_zero_dimensional():
            raise ValueError("infinitely many standard monomials")
        lms = self.leading_monomials()
        box = self.pure_powers()
        return [
            e for e in itertools.product(*(range(b) for b in box)) if not any(_divides(lm, e) for lm in lms)
        ]

    def spolys_reduce_to_zero(self) -> bool:
        key = self.order.keyfunc(self.num_vars)
        work = _Basis(self.num_vars, key)
        for g in self.elements:
            work.add(dict(g._terms))
        for i, j in itertools.combinations(range(len(work.polys)), 2):
            s = _spoly(work.polys[i], work.lms[i], work.polys[j], work.lms[j])
            if work.reduce(s):
                return False
        return True

    def is_reduced(self) -> bool:
        lms = self.leading_monomials()
        for k, g in enumerate(self.elements):
            if g.leading_term(self.order)[1] != 1:
                return False
            others = lms[:k] + lms[k + 1:]
            if any(_divides(o, e) for e in g.terms for o in others):
                return False
        return True


def normal_form(f: Polynomial, basis: GroebnerBasis) -> Polynomial:
    """Remainder of ``f`` on division by ``basis`` (full reduction)."""
    if f.num_vars != basis.num_vars:
        raise DimensionMismatch(f"polynomial in {f.num_vars} variables, basis in {basis.num_vars}")
    work = _Basis(basis.num_vars, basis.order.keyfunc(basis.num_vars))
    for g in basis.elements:
        work.add(dict(g._terms))
    return Polynomial._wrap(f.num_vars, work.reduce(f._terms))


def buchberger(generators: Sequence[Polynomial], order: MonomialOrder = GREVLEX, max_pairs: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``generators``.

    Pairs are processed smallest-lcm first, skipping pairs with coprime
    leading monomials and pairs covered by the chain criterion.  The result
    is monic and sorted by leading monomial ascending.
    """
    gens = [g for g in generators]
    if not gens:
        raise InvalidInput("need at least one generator")
    n = gens[0].num_vars
    if any(g.num_vars != n for g in gens):
        raise DimensionMismatch("generators live in different rings")
    max_pairs = budget(200_000) if max_pairs is None else max_pairs
    key = order.keyfunc(n)
    work = _Basis(n, key)

    for g in gens:
        r = work.reduce(g._terms) if work.polys else dict(g._terms)
        if r:
            work.add(r)
    if not work.polys:
        return GroebnerBasis(order, (), n)

    pairs = {(i, j) for i in range(len(work.polys)) for j in range(i + 1, len(work.polys))}
    processed = 0

    def lcm_of(p):
        a, b = work.lms[p[0]], work.lms[p[1]]
        return tuple(max(x, y) for x, y in zip(a, b))

    while pairs:
        pair = min(pairs, key=lambda p: (key(lcm_of(p)), p))
        pairs.discard(pair)
        i, j = pair
        li, lj = work.lms[i], work.lms[j]
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        lcm = lcm_of(pair)
        if any(
            k not in pair
            and _divides(work.lms[k], lcm)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(work.polys))
        ):
            continue
        processed += 1
        if processed > max_pairs:
            raise BudgetExceeded(f"Buchberger exceeded {max_pairs} S-polynomial reductions")
        r = work.reduce(_spoly(work.polys[i], li, work.polys[j], lj))
        if r:
            k = work.add(r)
            pairs.update((m, k) for m in range(k))

    return GroebnerBasis(order, _interreduce(work, n), n)


def _interreduce(work: _Basis, n: int) -> tuple:
    key = work.key
    # drop elements whose leading monomial is divisible by another's
    keep = []
    for i, lm in enumerate(work.lms):
        if any(j != i and _divides(work.lms[j], lm) and (work.lms[j] != lm or j < i) for j in range(len(work.lms))):
            continue
        keep.append(i)
    red = _Basis(n, key)
    for i in keep:
        red.polys.append(work.polys[i])
        red.lms.append(work.lms[i])
    for idx in range(len(red.polys)):
        lm = red.lms[idx]
        tail = dict(red.polys[idx])
        lead = tail.pop(lm)
        r = red.reduce(tail, skip=idx)
        r[lm] = lead
        c = lead
        red.polys[idx] = {e: v / c for e, v in r.items()}
    polys = [Polynomial._wrap(n, p) for p in red.polys]
    polys.sort(key=lambda p: key(max(p._terms, key=key)))
    return tuple(polys)


def jacobian_minors(fs: Sequence[Polynomial], size: int) -> list[Polynomial]:
    """All nonzero ``size x size`` minors of the Jacobian matrix ``(df_i/dz_j)``.

    Minors are listed by row subset, then column subset, both in
    lexicographic order.
    """
    if not fs:
        raise InvalidInput("need at least one polynomial")
    n = fs[0].num_vars
    if size < 1 or size > min(len(fs), n):
        raise SizeTooLarge(f"minor size {size} exceeds min(#polynomials, #variables) = {min(len(fs), n)}")
    jac = [[f.diff(j) for j in range(n)] for f in fs]
    out = []
    for rows in itertools.combinations(range(len(fs)), size):
        for cols in itertools.combinations(range(n), size):
            det = _poly_det([[jac[r][c] for c in cols] for r in rows], n)
            if det:
                out.append(det)
    return out


def _poly_det(m, n) -> Polynomial:
    size = len(m)
    if size == 1:
        return m[0][0]
    total = Polynomial(n)
    for perm in itertools.permutations(range(size)):
        inv = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        term = Polynomial.constant(n, -1 if inv % 2 else 1)
        for r, c in enumerate(perm):
            term = term * m[r][c]
            if not term:
                break
        total = total + term
    return total


def colength(generators: Sequence[Polynomial], order: MonomialOrder = GREVLEX):
    """Dimension of ``Q[z]/I`` as a vector space; ``INFINITE`` unless zero-dimensional."""
    gens = [g for g in generators if g]
    if not gens:
        return INFINITE
    basis = buchberger(gens, order)
    return basis_colength(basis)


def basis_colength(basis: GroebnerBasis):
    if not basis.is_zero_dimensional():
        return INFINITE
    return len(basis.standard_monomials())


def power_membership(generators: Sequence[Polynomial], p: int, order: MonomialOrder = GREVLEX) -> bool:
    """Is ``m^p`` contained in the ideal, ``m`` the ideal of the variables?"""
    if p < 1:
        raise InvalidInput("p must be at least 1")
    basis = buchberger([g for g in generators if g], order)
    return basis_power_membership(basis, p)


def basis_power_membership(basis: GroebnerBasis, p: int) -> bool:
    n = basis.num_vars
    for e in _monomials_of_degree(n, p):
        if not normal_form(Polynomial.monomial(e), basis).is_zero():
            return False
    return True


def _monomials_of_degree(n, d):
    for cut in itertools.combinations(range(d + n - 1), n - 1):
        prev = -1
        e = []
        for c in cut:
            e.append(c - prev - 1)
            prev = c
        e.append(d + n - 1 - prev - 1)
        yield tuple(e)


def milnor_number(f: Polynomial):
    return colength(f.gradient())


def tjurina_number(f: Polynomial):
    """Colength of ``<f, df/dz_1, ..., df/dz_N>``.

    When the origin is not a singular point of ``f = 0`` the global
    colength is still returned, with a warning, since it no longer measures
    the germ at the origin.
    """
    if f.constant_term() != 0 or any(g.constant_term() != 0 for g in f.gradient()):
        warnings.warn("origin is smooth or not on f = 0; returning the global colength", stacklevel=2)
    return colength([f] + f.gradient())


# --------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.end() == pos:
            break
        if m.group(1) is not None:
            out.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch.isspace():
                pos = m.end()
                continue
            if ch not in "+-*^()":
                raise ParseError(f"unexpected character {ch!r}", line=1, column=m.start(3) + 1)
            out.append(("op", ch, m.start(3)))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text, names, line):
        self.tokens = _tokenize(text)
        self.i = 0
        self.names = {n: k for k, n in enumerate(names)}
        self.n = len(names)
        self.line = line
        self.text = text

    def error(self, msg, tok=None):
        col = (tok[2] + 1) if tok else len(self.text) + 1
        return ParseError(msg, line=self.line, column=col)

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self):
        if not self.tokens:
            raise self.error("empty polynomial")
        p = self.expr()
        if self.peek() is not None:
            raise self.error(f"unexpected {self.peek()[1]!r}", self.peek())
        return p

    def expr(self):
        p = self.term()
        while (tok := self.peek()) and tok[0] == "op" and tok[1] in "+-":
            self.take()
            q = self.term()
            p = p + q if tok[1] == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while (tok := self.peek()) and tok[0] == "op" and tok[1] == "*":
            self.take()
            p = p * self.unary()
        return p

    def unary(self):
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] in "+-":
            self.take()
            p = self.unary()
            return -p if tok[1] == "-" else p
        return self.power()

    def power(self):
        base = self.atom()
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] == "^":
            self.take()
            exp = self.take()
            if not exp or exp[0] != "int":
                raise self.error("exponent must be a nonnegative integer", exp)
            return base ** exp[1]
        return base

    def atom(self):
        tok = self.take()
        if tok is None:
            raise self.error("unexpected end of input")
        kind, val, _ = tok
        if kind == "int":
            return Polynomial.constant(self.n, val)
        if kind == "name":
            if val not in self.names:
                raise self.error(f"unknown variable {val!r}", tok)
            return Polynomial.variable(self.n, self.names[val])
        if val == "(":
            p = self.expr()
            close = self.take()
            if not close or close[1] != ")":
                raise self.error("expected ')'", close)
            return p
        raise self.error(f"unexpected {val!r}", tok)


def default_names(n: int) -> list[str]:
    return [f"z{i + 1}" for i in range(n)]


def parse_polynomial(text: str, variables: Sequence[str] | None = None, line: int = 1) -> Polynomial:
    """Parse one polynomial.  Without ``variables`` the ring is ``z1..zN`` with
    N the largest index used.  The zero polynomial is rejected."""
    if variables is None:
        idx = [int(m) for m in re.findall(r"\bz(\d+)\b", text)]
        variables = default_names(max(idx, default=1))
    p = _Parser(text, list(variables), line).parse()
    if p.is_zero():
        raise ParseError("zero polynomial is not allowed as a generator", line=line, column=1)
    return p


@dataclass(frozen=True)
class IdealFile:
    variables: tuple
    generators: tuple

    def __iter__(self):
        return iter(self.generators)


def parse_ideal(text: str) -> IdealFile:
    """Header ``vars: z1 z2 ... zN`` then one polynomial per line."""
    lines = [(no, raw.split("#", 1)[0]) for no, raw in enumerate(text.splitlines(), start=1)]
    lines = [(no, body) for no, body in lines if body.strip()]
    if not lines:
        raise ParseError("empty ideal file", line=1)
    no, head = lines[0]
    key, sep, rest = head.partition(":")
    if key.strip() != "vars" or not sep:
        raise ParseError("expected 'vars: z1 z2 ...'", line=no, column=1)
    names = rest.split()
    if not names:
        raise ParseError("no variables declared", line=no)
    if len(set(names)) != len(names):
        raise ParseError("duplicate variable name", line=no)
    polys = tuple(parse_polynomial(body, names, line=no) for no, body in lines[1:])
    if not polys:
        raise ParseError("no generators", line=lines[-1][0] + 1)
    return IdealFile(tuple(names), polys)


def serialize_ideal(variables: Sequence[str], generators: Sequence[Polynomial]) -> str:
    body = "\n".join(g.to_str(variables) for g in generators)
    return f"vars: {' '.join(variables)}\n{body}\n"
