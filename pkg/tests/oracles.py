"""Independent reference computations used only by the tests.

Everything here is deliberately naive: full word bases, sympy ranks over Q,
power series by direct convolution.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import comb

import sympy


def words(n, k):
    return list(product(range(n), repeat=k))


def sympy_rank(rows, ncols):
    if not rows or not ncols:
        return 0
    M = sympy.Matrix([[sympy.Rational(r.get(c, 0)) for c in range(ncols)] for r in rows])
    return M.rank()


def naive_hilbert(n, relations, N):
    """h_A(k) = n^k - dim span{u r v}, with relations as dicts {word: Fraction}, unit weights."""
    out = []
    for k in range(N + 1):
        W = words(n, k)
        idx = {w: i for i, w in enumerate(W)}
        rows = []
        for r in relations:
            d = len(next(iter(r)))
            if d > k:
                continue
            for i in range(k - d + 1):
                for u in words(n, i):
                    for v in words(n, k - d - i):
                        rows.append({idx[u + w + v]: c for w, c in r.items()})
        out.append(len(W) - sympy_rank(rows, len(W)))
    return out


def poly_relations(P):
    return [{w: Fraction(c) for w, c in r.terms.items()} for r in P.relations]


def series_mul(a, b, N):
    return [sum(a[i] * b[k - i] for i in range(k + 1) if i < len(a) and k - i < len(b)) for k in range(N + 1)]


def series_inverse(a, N):
    inv = [Fraction(1, 1) / a[0]]
    for k in range(1, N + 1):
        s = sum(a[i] * inv[k - i] for i in range(1, k + 1) if i < len(a))
        inv.append(-s / a[0])
    return inv


def free_module_series(hR, n, N):
    """Coefficients of H_R(t) / (1 - t)^n."""
    geo = [comb(k + n - 1, n - 1) if n else int(k == 0) for k in range(N + 1)]
    return series_mul(hR, geo, N)
