"""Independent reference implementations used only by the tests.

None of these share code with the library: determinants by cofactor
expansion, anti-nef enumeration by brute force over the dual lattice,
graph reconstruction by exhaustive weight search, Groebner bases and
polynomial arithmetic by sympy, LP feasibility by scipy.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction

import numpy as np


def cofactor_det(rows) -> Fraction:
    rows = [[Fraction(x) for x in r] for r in rows]
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total


def gauss_det(rows) -> Fraction:
    a = [[Fraction(x) for x in r] for r in rows]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        p = next((i for i in range(k, n) if a[i][k] != 0), None)
        if p is None:
            return Fraction(0)
        if p != k:
            a[k], a[p] = a[p], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return det


def int_matrix(weights, edges):
    n = len(weights)
    m = [[0] * n for _ in range(n)]
    for i, w in enumerate(weights):
        m[i][i] = -w
    for i, j in edges:
        m[i][j] = m[j][i] = 1
    return m


def adjugate_det(m):
    """``(adj, det)`` for an integer matrix, exactly, via cofactors."""
    n = len(m)
    det = cofactor_det(m)
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [r[:j] + r[j + 1:] for k, r in enumerate(m) if k != i]
            adj[j][i] = int((-1) ** (i + j) * (cofactor_det(minor) if minor else 1))
    return adj, int(det)


def brute_antinef(weights, edges, max_length):
    """All anti-nef cycles with length <= max_length, by scanning ``y = -M D``.

    Every anti-nef D is ``N y`` with ``N = -M^{-1}`` (entrywise positive)
    and ``y >= 0`` integral.  Writing ``c = w - 2`` the length is
    ``((y - c/2)^T N (y - c/2) - c^T N c / 4) / 2`` and Cauchy-Schwarz with
    ``(N^{-1})_{jj} = w_j`` bounds each ``|y_j - c_j/2|``.  When every
    weight is 2 the sharper ``y_j^2 N_jj <= 2 L`` holds since N > 0.
    """
    m = int_matrix(weights, edges)
    n = len(weights)
    adj, det = adjugate_det(m)
    # N = -M^{-1} = -adj/det
    big = np.array([[-a for a in row] for row in adj], dtype=np.int64)
    if det < 0:
        big, det = -big, -det
    c = np.array([w - 2 for w in weights], dtype=np.int64)
    ctnc = Fraction(int(c @ big @ c), det)
    bounds = []
    for j, w in enumerate(weights):
        if not c.any():
            r = math.sqrt(2 * max_length * det / float(big[j][j]))
        else:
            r = math.sqrt(float(w * (2 * max_length + ctnc / 4))) + c[j] / 2
        bounds.append(int(math.floor(r + 1e-9)))
    out = {}
    ranges = [np.arange(b + 1, dtype=np.int64) for b in bounds]
    # chunk over the first coordinate to keep memory small
    rest = np.array(list(itertools.product(*ranges[1:])), dtype=np.int64).reshape(-1, n - 1) if n > 1 else np.zeros((1, 0), dtype=np.int64)
    for y0 in ranges[0]:
        ys = np.hstack([np.full((rest.shape[0], 1), y0, dtype=np.int64), rest])
        nu_num = ys @ big.T  # det * D
        ok = np.all(nu_num % det == 0, axis=1) & np.any(ys > 0, axis=1)
        for y, num in zip(ys[ok], nu_num[ok]):
            d = num // det
            # -D.D = y . D ;  length = (y.D - c.D)/2
            twice = int(y @ d) - int(c @ d)
            if twice % 2 == 0 and twice // 2 <= max_length:
                out[tuple(int(v) for v in d)] = twice // 2
    return out


def laufer(m):
    n = len(m)
    z = [1] * n
    while True:
        p = [sum(m[i][j] * z[j] for j in range(n)) for i in range(n)]
        bad = [i for i in range(n) if p[i] > 0]
        if not bad:
            return z
        z[bad[0]] += 1


def _length(m, weights, d):
    n = len(d)
    dd = sum(d[i] * m[i][j] * d[j] for i in range(n) for j in range(n))
    return Fraction(-dd - sum(d[i] * (weights[i] - 2) for i in range(n)), 2)


def reconstruct_weights(n, rows, weight_choices=(2, 3), branches=None):
    """Exhaustive search for graphs consistent with a divisor table.

    Trees are a chain on the first ``n - 1`` vertices with vertex ``n``
    hung on one chain vertex.  ``rows`` holds ``(cycle, length, L0)``.
    Returns ``(fully_consistent, best)`` where each item is
    ``(score, branch, weights, failing_rows)``.
    """
    results = []
    branches = range(n - 1) if branches is None else branches
    for b in branches:
        edges = [(i, i + 1) for i in range(n - 2)] + [(b, n - 1)]
        combos = list(itertools.product(weight_choices, repeat=n))
        mats = np.array([int_matrix(w, edges) for w in combos], dtype=float)
        eig = np.linalg.eigvalsh(mats)
        for w, ev in zip(combos, eig):
            if ev.max() >= -1e-9:
                continue
            m = int_matrix(w, edges)
            if any((-1) ** k * gauss_det([r[:k] for r in m[:k]]) <= 0 for k in range(1, n + 1)):
                continue
            z = laufer(m)
            fails = []
            for d, ell, l0 in rows:
                got_l = _length(m, w, d)
                got_e = max(Fraction(a, b) for a, b in zip(d, z))
                if got_l != ell or got_e != l0:
                    fails.append((d, got_l, got_e))
            results.append((len(rows) - len(fails), b, w, fails))
    results.sort(key=lambda r: -r[0])
    full = [r for r in results if not r[3]]
    return full, results[:5]


def lp_feasible(a, b) -> bool:
    """Float LP oracle (scipy) for ``a x = b, x >= 0``; only for tiny integer data."""
    from scipy.optimize import linprog

    a = np.array(a, dtype=float)
    b = np.array(b, dtype=float)
    res = linprog(np.zeros(a.shape[1]), A_eq=a, b_eq=b, bounds=[(0, None)] * a.shape[1], method="highs")
    return res.status == 0


def np_member_oracle(point, gens) -> bool:
    """Is there a convex combination of ``gens`` below ``point``? (scipy)"""
    n = len(point)
    k = len(gens)
    a = [[g[i] for g in gens] + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    a.append([1] * k + [0] * n)
    return lp_feasible(a, list(point) + [1])
