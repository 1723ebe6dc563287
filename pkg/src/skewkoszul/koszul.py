"""Bounded-degree Koszulness probes.

* ``bar_ext_table``: dimensions of Ext^{s,p}_A(K, K) = Tor^A_{s,p}(K, K)^*
  from the normalized bar complex, strand by strand.
* ``hilbert_duality_check``: h_A(t) h_{A!}(-t) = 1 up to degree N.
* ``distributivity_probe``: distributivity of the lattice generated by
  X_i = L_{i-1} P L_{k-i-1} inside L_k.

A Fail from any probe is a sound refutation at its bound. A Pass is bounded
evidence only; the PBW shortcut is the one unbounded certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Sequence

import numpy as np

from .errors import PreconditionError
from .freealg import GeneratorOrder, words_of_degree
from .linalg import rank
from .presentation import (
    Presentation,
    Subspace,
    _require_quadratic,
    hilbert,
    ideal_component,
    is_homogeneous_quadratic,
    quadratic_dual,
    quotient,
    subspace_intersect,
    subspace_sum,
    validate,
)
from .rewriting import PbwVerdict, _Reducer, complete, normal_words, orient, pbw_check

PASS, FAIL, INCONCLUSIVE = "Pass", "Fail", "Inconclusive"


@dataclass(frozen=True)
class Verdict:
    status: str
    witness: object = None
    reason: str = ""
    bounds: str = ""

    def __post_init__(self):
        if self.status == FAIL and self.witness is None:
            raise ValueError("a Fail verdict needs a witness")


@dataclass
class ExtTable:
    s_max: int
    p_max: int
    dims: list  # dims[s][p]
    strand_dims: dict = dc_field(default_factory=dict)  # (s, p) -> dim of bar term

    def __getitem__(self, sp):
        s, p = sp
        return self.dims[s][p]

    def nonzero(self) -> dict:
        return {
            (s, p): self.dims[s][p]
            for s in range(self.s_max + 1)
            for p in range(self.p_max + 1)
            if self.dims[s][p]
        }

    def render(self) -> str:
        head = "s\\p " + " ".join(f"{p:>4}" for p in range(self.p_max + 1))
        rows = [head]
        for s in range(self.s_max + 1):
            rows.append(f"{s:>3} " + " ".join(f"{self.dims[s][p]:>4}" for p in range(self.p_max + 1)))
        return "\n".join(rows)


# -- multiplication oracles ------------------------------------------------------


class _RewritingOracle:
    """Normal words and products from a completed rewriting system."""

    def __init__(self, P: Presentation, bound: int):
        self.system = complete(orient(P), bound)
        self.field = P.field
        self._red = _Reducer(P.ring, self.system.rule_dict())
        self._bases: dict = {}
        self._index: dict = {}

    def basis(self, k: int) -> list:
        if k not in self._bases:
            words = normal_words(self.system, k)
            self._bases[k] = words
            self._index[k] = {w: i for i, w in enumerate(words)}
        return self._bases[k]

    def multiply(self, p: int, a: int, q: int, b: int) -> dict:
        w = self.basis(p)[a] + self.basis(q)[b]
        self.basis(p + q)
        idx = self._index[p + q]
        return {idx[u]: c for u, c in self._red.nf_terms({w: self.field.one}).items()}


class _QuotientOracle:
    def __init__(self, P: Presentation, bound: int):
        self.Q = quotient(P).extend_to(bound)

    def basis(self, k: int) -> list:
        return self.Q.basis(k)

    def multiply(self, p: int, a: int, q: int, b: int) -> dict:
        return self.Q.multiply(p, a, q, b)


def _oracle(P: Presentation, bound: int, kind: str):
    if kind == "linear":
        return _QuotientOracle(P, bound)
    if kind in ("rewriting", "auto"):
        return _RewritingOracle(P, bound)
    raise ValueError(f"unknown oracle {kind!r}")


# -- bar complex -------------------------------------------------------------


def _compositions(p: int, s: int):
    if s == 1:
        if p >= 1:
            yield (p,)
        return
    for first in range(1, p - s + 2):
        for rest in _compositions(p - first, s - 1):
            yield (first,) + rest


def bar_ext_table(P: Presentation, s_max: int = 5, p_max: int = 5, oracle: str = "auto") -> ExtTable:
    """dim Ext^{s,p}_A(K,K) for s <= s_max, p <= p_max from the normalized bar complex.

    ``oracle`` selects the multiplication: ``"rewriting"`` (normal forms of a
    system completed to ``p_max``, the ``"auto"`` default) or ``"linear"``
    (quotient linear algebra). Both are exact and give the same table.
    """
    if not P.ord.unit_weights:
        raise PreconditionError("the bar-complex probe needs generators of weight 1")
    for r in P.relations:
        if not r.is_homogeneous() or r.is_zero() or r.degree() < 2:
            raise PreconditionError(f"relation {r} does not define a connected graded algebra")
    F = P.field
    orc = _oracle(P, p_max, oracle)
    h = [len(orc.basis(k)) for k in range(p_max + 1)]
    dims = [[0] * (p_max + 1) for _ in range(s_max + 1)]
    dims[0][0] = 1
    strand_dims = {(0, 0): 1}
    products: dict = {}

    def mult(p, a, q, b):
        key = (p, a, q, b)
        v = products.get(key)
        if v is None:
            v = products[key] = orc.multiply(p, a, q, b)
        return v

    for p in range(1, p_max + 1):
        top = min(p, s_max + 1)
        bases: dict = {}
        for s in range(1, top + 1):
            cells = []
            for comp in _compositions(p, s):
                if any(h[c] == 0 for c in comp):
                    continue
                for idxs in product(*(range(h[c]) for c in comp)):
                    cells.append((comp, idxs))
            bases[s] = {cell: i for i, cell in enumerate(cells)}
        ranks = {1: 0}
        for s in range(2, top + 1):
            target = bases[s - 1]
            rows = []
            for comp, idxs in bases[s]:
                row: dict = {}
                for i in range(s - 1):
                    sign = F.one if i % 2 else F.neg(F.one)  # (-1)^(i+1) for 0-based i
                    prod_vec = mult(comp[i], idxs[i], comp[i + 1], idxs[i + 1])
                    new_comp = comp[:i] + (comp[i] + comp[i + 1],) + comp[i + 2:]
                    for c, a in prod_vec.items():
                        col = target[(new_comp, idxs[:i] + (c,) + idxs[i + 2:])]
                        val = F.add(row.get(col, F.zero), F.mul(sign, a))
                        if val:
                            row[col] = val
                        else:
                            row.pop(col, None)
                rows.append(row)
            ranks[s] = rank(F, rows, len(target))
        for s in range(1, min(p, s_max) + 1):
            n = len(bases[s])
            strand_dims[(s, p)] = n
            dims[s][p] = n - ranks[s] - ranks.get(s + 1, 0)
    return ExtTable(s_max, p_max, dims, strand_dims)


def diagonal_check(T: ExtTable) -> Verdict:
    """Fail at the first off-diagonal nonzero Ext^{s,p} (ordered by p, then s)."""
    bounds = f"s<={T.s_max},p<={T.p_max}"
    for p in range(T.p_max + 1):
        for s in range(T.s_max + 1):
            if s != p and T.dims[s][p]:
                return Verdict(FAIL, (s, p), f"dim Ext^{{{s},{p}}} = {T.dims[s][p]}", bounds)
    return Verdict(PASS, bounds=bounds)


# -- Hilbert series duality ----------------------------------------------------------


def hilbert_duality_check(P: Presentation, N: int = 8) -> Verdict:
    """Check sum_i (-1)^i h_{A!}(i) h_A(k-i) = 0 for 1 <= k <= N."""
    _require_quadratic(P)
    hA = hilbert(P, N)
    hD = hilbert(quadratic_dual(P), N)
    bounds = f"N={N}"
    for k in range(1, N + 1):
        total = sum((-1) ** i * hD[i] * hA[k - i] for i in range(k + 1))
        if total:
            return Verdict(FAIL, k, f"coefficient {total} in degree {k}", bounds)
    return Verdict(PASS, bounds=bounds)


# -- lattice distributivity -----------------------------------------------------


def koszul_collection(P: Presentation, k: int) -> list:
    """The subspaces X_i = L_{i-1} P L_{k-i-1} of L_k, i = 1..k-1."""
    _require_quadratic(P)
    if k < 2:
        raise PreconditionError("k must be at least 2")
    rels = ideal_component(P, 2)
    Rw = rels.ambient_words
    words = words_of_degree(P.ord, k)
    index = {w: i for i, w in enumerate(words)}
    out = []
    for i in range(1, k):
        left = words_of_degree(P.ord, i - 1)
        right = words_of_degree(P.ord, k - i - 1)
        vecs = []
        for row in rels.basis:
            for u in left:
                for v in right:
                    vecs.append({index[u + Rw[c] + v]: a for c, a in row})
        out.append(Subspace.span(P.field, k, words, vecs))
    return out


def lattice_distributive(subspaces: Sequence[Subspace], cap: int = 500, bounds: str = "") -> Verdict:
    """Close under sum and intersection, then test a∧(b∨c) = (a∧b)∨(a∧c) on all triples."""
    elems: list = []
    keys: dict = {}

    def add(X):
        i = keys.get(X.basis)
        if i is None:
            i = keys[X.basis] = len(elems)
            elems.append(X)
        return i

    for X in subspaces:
        add(X)
    join: dict = {}
    meet: dict = {}
    changed = True
    while changed:
        changed = False
        n = len(elems)
        for i in range(n):
            for j in range(i, n):
                if (i, j) in join:
                    continue
                before = len(elems)
                a = add(subspace_sum(elems[i], elems[j]))
                b = add(subspace_intersect(elems[i], elems[j]))
                join[i, j] = join[j, i] = a
                meet[i, j] = meet[j, i] = b
                if len(elems) > before:
                    changed = True
                if len(elems) > cap:
                    return Verdict(INCONCLUSIVE, reason=f"cap exceeded: more than {cap} subspaces", bounds=bounds)
    n = len(elems)
    J = np.empty((n, n), dtype=np.int64)
    M = np.empty((n, n), dtype=np.int64)
    for (i, j), v in join.items():
        J[i, j] = v
    for (i, j), v in meet.items():
        M[i, j] = v
    for a in range(n):
        lhs = M[a][J]  # a ∧ (b ∨ c)
        rhs = J[M[a][:, None], M[a][None, :]]  # (a ∧ b) ∨ (a ∧ c)
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            b, c = (int(t) for t in bad[0])
            return Verdict(
                FAIL,
                (elems[a], elems[b], elems[c]),
                f"distributive law fails on closure elements ({a}, {b}, {c}) of {n}",
                bounds,
            )
    return Verdict(PASS, reason=f"closure of {n} subspaces", bounds=bounds)


def distributivity_probe(P: Presentation, k: int, cap: int = 500) -> Verdict:
    return lattice_distributive(koszul_collection(P, k), cap, bounds=f"k={k},cap={cap}")


# -- aggregated report -------------------------------------------------------


@dataclass(frozen=True)
class Bounds:
    s_max: int = 5
    p_max: int = 5
    N: int = 8
    k_max: int = 4
    cap: int = 500


@dataclass
class KoszulReport:
    pbw_shortcut: PbwVerdict | Verdict
    ext_diagonal: Verdict
    hilbert_duality: Verdict
    distributivity: dict
    overall: str
    bounds: Bounds
    ext_table: ExtTable | None = None

    @property
    def probes(self) -> list:
        out = [("ext_diagonal", self.ext_diagonal), ("hilbert_duality", self.hilbert_duality)]
        out += [(f"distributivity_k{k}", v) for k, v in sorted(self.distributivity.items())]
        return out

    def render(self) -> str:
        pbw = self.pbw_shortcut
        lines = []
        if isinstance(pbw, PbwVerdict):
            order = "<".join(pbw.order.names)
            wit = "-" if pbw.witness is None else str(pbw.witness).replace(" ", "")
            lines.append(f"probe=pbw status={pbw.status} witness={wit} bounds=order:{order}")
        else:
            lines.append(f"probe=pbw status={pbw.status} witness=- bounds=- reason={_q(pbw.reason)}")
        for name, v in self.probes:
            line = f"probe={name} status={v.status} witness={_fmt_witness(v.witness)} bounds={v.bounds or '-'}"
            if v.status == INCONCLUSIVE:
                line += f" reason={_q(v.reason)}"
            lines.append(line)
        lines.append(f"overall={self.overall}")
        return "\n".join(lines)


def _q(text: str) -> str:
    return '"' + text.replace('"', "'") + '"'


def _fmt_witness(w) -> str:
    if w is None:
        return "-"
    if isinstance(w, tuple) and w and isinstance(w[0], Subspace):
        return "(" + ",".join(f"dim{X.dim}" for X in w) + ")"
    if isinstance(w, tuple):
        return "(" + ",".join(str(t) for t in w) + ")"
    return str(w)


def koszul_report(
    P: Presentation,
    ord: GeneratorOrder | Sequence[str] | None = None,
    bounds: Bounds | None = None,
    oracle: str = "auto",
) -> KoszulReport:
    b = bounds or Bounds()
    report = validate(P)
    quad, witness = is_homogeneous_quadratic(P)
    if not report.ok:
        why = "; ".join(i.message for i in report.errors)
        bad = Verdict(INCONCLUSIVE, reason=f"invalid presentation: {why}")
        return KoszulReport(bad, bad, bad, {k: bad for k in range(3, b.k_max + 1)}, INCONCLUSIVE, b)
    if isinstance(ord, (list, tuple)):
        ord = P.ord.permuted(ord)
    if quad:
        pbw = pbw_check(P, ord, bound=3)
        duality = hilbert_duality_check(P, b.N)
        dist = {k: distributivity_probe(P, k, b.cap) for k in range(3, b.k_max + 1)}
    else:
        why = f"not homogeneous quadratic: {witness}"
        pbw = Verdict(INCONCLUSIVE, reason=why)
        duality = Verdict(INCONCLUSIVE, reason=why, bounds=f"N={b.N}")
        dist = {k: Verdict(INCONCLUSIVE, reason=why, bounds=f"k={k}") for k in range(3, b.k_max + 1)}
    table = None
    if P.ord.unit_weights:
        table = bar_ext_table(P, b.s_max, b.p_max, oracle)
        ext = diagonal_check(table)
    else:
        ext = Verdict(INCONCLUSIVE, reason="weighted generators", bounds=f"s<={b.s_max},p<={b.p_max}")
    probes = [ext, duality, *dist.values()]
    if any(v.status == FAIL for v in probes):
        overall = FAIL
    elif ext.status == PASS:
        overall = PASS
    else:
        overall = INCONCLUSIVE
    return KoszulReport(pbw, ext, duality, dist, overall, b, table)
