"""Sparse exact Gaussian elimination over a :class:`FieldSpec`.

Vectors are dicts ``{column: nonzero scalar}``. The pivot of a row is its
smallest column; with columns indexed by words sorted descending, that is
the largest word, so echelon pivots are leading words.
"""

from __future__ import annotations

import heapq
from math import lcm

from .freealg import FieldSpec

try:
    import flint
except ImportError:  # pragma: no cover
    flint = None


def axpy(F: FieldSpec, vec: dict, row: dict, factor) -> None:
    """In place ``vec -= factor * row``."""
    if F.is_prime:
        p = F.characteristic
        for col, a in row.items():
            s = (vec.get(col, 0) - factor * a) % p
            if s:
                vec[col] = s
            else:
                vec.pop(col, None)
    else:
        for col, a in row.items():
            s = vec.get(col, 0) - factor * a
            if s:
                vec[col] = s
            else:
                vec.pop(col, None)


class Echelon:
    """Incrementally maintained echelon basis of a subspace of K^m."""

    def __init__(self, field: FieldSpec):
        self.field = field
        self.pivots: dict = {}

    def __len__(self):
        return len(self.pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def insert(self, vec: dict) -> bool:
        """Add ``vec`` to the span; return True if it was independent."""
        F = self.field
        vec = dict(vec)
        pivots = self.pivots
        while vec:
            c = min(vec)
            row = pivots.get(c)
            if row is None:
                inv = F.inv(vec[c])
                pivots[c] = {k: F.mul(a, inv) for k, a in vec.items()}
                return True
            axpy(F, vec, row, vec[c])
        return False

    def reduce(self, vec: dict) -> dict:
        """Remainder of ``vec`` after eliminating every pivot column."""
        F = self.field
        vec = dict(vec)
        pivots = self.pivots
        heap = [c for c in vec if c in pivots]
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            a = vec.get(c)
            if not a:
                continue
            row = pivots[c]
            for k in row:
                if k != c and k in pivots and k not in vec:
                    heapq.heappush(heap, k)
            axpy(F, vec, row, a)
        return vec

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def rref(self) -> list:
        """Fully reduce the stored rows in place; return them sorted by pivot."""
        F = self.field
        pivots = self.pivots
        for c in sorted(pivots, reverse=True):
            row = pivots[c]
            for d in sorted(k for k in row if k != c and k in pivots):
                a = row.get(d)
                if a:
                    axpy(F, row, pivots[d], a)
        return [pivots[c] for c in sorted(pivots)]


def echelon_of(field: FieldSpec, vectors) -> Echelon:
    E = Echelon(field)
    for v in vectors:
        if v:
            E.insert(v)
    return E


def rank(field: FieldSpec, rows: list, ncols: int) -> int:
    """Exact rank of the matrix whose rows are the sparse dicts ``rows``.

    Large matrices go to FLINT (``nmod_mat`` over GF(p), ``fmpz_mat`` after
    clearing row denominators over Q); small ones use :class:`Echelon`.
    """
    rows = [r for r in rows if r]
    if not rows or not ncols:
        return 0
    if flint is None or len(rows) * ncols < 4096:
        return echelon_of(field, rows).rank
    m = len(rows)
    if field.is_prime:
        flat = [0] * (m * ncols)
        for i, r in enumerate(rows):
            base = i * ncols
            for c, a in r.items():
                flat[base + c] = a
        return flint.nmod_mat(m, ncols, flat, field.characteristic).rank()
    flat = [0] * (m * ncols)
    for i, r in enumerate(rows):
        base = i * ncols
        den = lcm(*(a.denominator for a in r.values()))
        for c, a in r.items():
            flat[base + c] = int(a * den)
    return flint.fmpz_mat(m, ncols, flat).rank()
