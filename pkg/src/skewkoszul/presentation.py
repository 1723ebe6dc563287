"""Finitely presented graded algebras A = K<x_1, ..., x_n>/I.

Graded pieces are computed by exact linear algebra. :class:`GradedQuotient`
builds A degree by degree as (A_{k-w} x) modulo the images of the
relations, which keeps the column count at ``sum_j h_A(k - w_j)`` instead of
``n**k``; :func:`ideal_component` spans I_k inside the full word space and
is used where the actual subspace of L_k is needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import NamedTuple, Sequence

from .errors import PreconditionError, StructuralError
from .freealg import FieldSpec, FreeAlgebra, FreePoly, GeneratorOrder, words_of_degree
from .linalg import Echelon, echelon_of


@dataclass(frozen=True)
class Presentation:
    """Generators, weights and homogeneous relations over an exact field."""

    ring: FreeAlgebra
    relations: tuple = ()
    name: str = ""

    def __post_init__(self):
        rels = tuple(self.relations)
        for r in rels:
            if not isinstance(r, FreePoly) or r.ring != self.ring:
                raise StructuralError("relations must be polynomials in the presentation's free algebra")
        object.__setattr__(self, "relations", rels)

    @classmethod
    def from_strings(
        cls,
        names: Sequence[str],
        relations: Sequence[str] = (),
        field: FieldSpec | None = None,
        weights: Sequence[int] | None = None,
        params: dict | None = None,
        name: str = "",
    ) -> Presentation:
        ring = FreeAlgebra(field or FieldSpec.Q(), GeneratorOrder(tuple(names), weights))
        return cls(ring, tuple(ring.parse(r, params) for r in relations), name)

    @property
    def field(self) -> FieldSpec:
        return self.ring.field

    @property
    def ord(self) -> GeneratorOrder:
        return self.ring.order

    @property
    def ngens(self) -> int:
        return len(self.ring.order)

    def __str__(self):
        gens = ", ".join(self.ord.names)
        rels = ", ".join(str(r) for r in self.relations)
        return f"{self.name or 'A'} = {self.field}<{gens}>/({rels})"

    def reorder(self, names: Sequence[str]) -> Presentation:
        """The same algebra with generators listed in the order ``names``."""
        order = self.ord.permuted(names)
        ring = FreeAlgebra(self.field, order)
        letter_map = [order.index(n) for n in self.ord.names]
        return Presentation(ring, tuple(r.change_ring(ring, letter_map) for r in self.relations), self.name)

    def over(self, field: FieldSpec) -> Presentation:
        if field == self.field:
            return self
        ring = FreeAlgebra(field, self.ord)
        return Presentation(ring, tuple(r.change_ring(ring) for r in self.relations), self.name)


class Issue(NamedTuple):
    severity: str  # "error" | "warning"
    message: str
    item: object = None


@dataclass
class ValidationReport:
    issues: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not any(i.severity == "error" for i in self.issues)

    @property
    def errors(self) -> list:
        return [i for i in self.issues if i.severity == "error"]

    def error(self, message, item=None):
        self.issues.append(Issue("error", message, item))

    def warn(self, message, item=None):
        self.issues.append(Issue("warning", message, item))

    def extend(self, other: ValidationReport, prefix: str = ""):
        for i in other.issues:
            self.issues.append(Issue(i.severity, prefix + i.message, i.item))

    def __bool__(self):
        return self.ok

    def render(self) -> str:
        lines = [f"ok={'true' if self.ok else 'false'}"]
        for i in self.issues:
            item = "" if i.item is None else f" item={i.item}"
            lines.append(f"{i.severity}: {i.message}{item}")
        return "\n".join(lines)


def validate(P: Presentation) -> ValidationReport:
    report = ValidationReport()
    if P.ord.has_duplicates:
        seen = set()
        for n in P.ord.names:
            if n in seen:
                report.error("duplicate generator name", n)
            seen.add(n)
    by_degree: dict = {}
    for r in P.relations:
        if r.is_zero():
            report.error("zero relation", r)
            continue
        if not r.is_homogeneous():
            report.error("inhomogeneous relation", r)
            continue
        d = r.degree()
        if d < 2:
            report.error(f"relation of degree {d} < 2", r)
            continue
        by_degree.setdefault(d, []).append(r)
    for d, rels in by_degree.items():
        E = echelon_of(P.field, (_word_vector(r) for r in rels))
        if E.rank < len(rels):
            report.warn(f"relations of degree {d} are linearly dependent", d)
    return report


def _word_vector(f: FreePoly) -> dict:
    """Coordinates keyed by deglex rank among words (smaller index = larger word)."""
    key = f.ring.order.key
    return {(-key(w)[0], tuple(-i for i in w)): c for w, c in f.terms.items()}


def is_homogeneous_quadratic(P: Presentation):
    """Return ``(flag, witness)``; the witness is the first violating item."""
    for name, w in zip(P.ord.names, P.ord.weights):
        if w != 1:
            return False, name
    for r in P.relations:
        if r.is_zero() or not r.is_homogeneous() or r.degree() != 2:
            return False, r
    return True, None


def _require_quadratic(P: Presentation):
    ok, witness = is_homogeneous_quadratic(P)
    if not ok:
        raise PreconditionError(f"not a homogeneous quadratic presentation: {witness}")


# -- subspaces of L_k ----------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """A subspace of L_k in reduced row-echelon form over the word basis.

    ``basis`` rows are tuples of ``(column, coefficient)`` pairs sorted by
    column; the canonical form makes equality of subspaces tuple equality.
    """

    field: FieldSpec
    ambient_degree: int
    ambient_words: tuple
    basis: tuple

    @classmethod
    def span(cls, field: FieldSpec, k: int, words: Sequence, vectors) -> Subspace:
        E = echelon_of(field, ({c: field(a) for c, a in v.items() if a} for v in vectors))
        rows = tuple(tuple(sorted(r.items())) for r in E.rref())
        return cls(field, k, tuple(words), rows)

    @classmethod
    def of_polys(cls, ring: FreeAlgebra, k: int, polys) -> Subspace:
        words = words_of_degree(ring.order, k)
        index = {w: i for i, w in enumerate(words)}
        vecs = []
        for f in polys:
            v = {}
            for w, c in f.terms.items():
                if w not in index:
                    raise StructuralError(f"{f} is not in degree {k}")
                v[index[w]] = c
            vecs.append(v)
        return cls.span(ring.field, k, words, vecs)

    @classmethod
    def zero(cls, field: FieldSpec, k: int, words: Sequence) -> Subspace:
        return cls(field, k, tuple(words), ())

    @classmethod
    def whole(cls, field: FieldSpec, k: int, words: Sequence) -> Subspace:
        return cls(field, k, tuple(words), tuple(((i, field.one),) for i in range(len(words))))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def ambient_dim(self) -> int:
        return len(self.ambient_words)

    def vectors(self) -> list:
        return [dict(r) for r in self.basis]

    @property
    def pivots(self) -> tuple:
        return tuple(r[0][0] for r in self.basis)

    def polys(self, ring: FreeAlgebra) -> list:
        W = self.ambient_words
        return [FreePoly(ring, {W[c]: a for c, a in r}) for r in self.basis]

    def contains(self, other: Subspace) -> bool:
        _check_ambient(self, other)
        E = Echelon(self.field)
        E.pivots = {r[0][0]: dict(r) for r in self.basis}
        return all(not E.reduce(v) for v in other.vectors())

    def __le__(self, other: Subspace) -> bool:
        return other.contains(self)

    def __add__(self, other: Subspace) -> Subspace:
        return subspace_sum(self, other)

    def __and__(self, other: Subspace) -> Subspace:
        return subspace_intersect(self, other)

    def __repr__(self):
        return f"Subspace(dim={self.dim} in L_{self.ambient_degree}, ambient_dim={self.ambient_dim})"


def _check_ambient(X: Subspace, Y: Subspace):
    if X.field != Y.field or X.ambient_degree != Y.ambient_degree or X.ambient_words != Y.ambient_words:
        raise StructuralError("subspaces live in different ambient spaces")


def subspace_sum(X: Subspace, Y: Subspace) -> Subspace:
    _check_ambient(X, Y)
    return Subspace.span(X.field, X.ambient_degree, X.ambient_words, X.vectors() + Y.vectors())


def subspace_intersect(X: Subspace, Y: Subspace) -> Subspace:
    """Zassenhaus: echelonize ``[x | x]`` and ``[y | 0]``; rows with empty left half span X ∩ Y."""
    _check_ambient(X, Y)
    m = X.ambient_dim
    E = Echelon(X.field)
    for v in X.vectors():
        row = dict(v)
        row.update({c + m: a for c, a in v.items()})
        E.insert(row)
    for v in Y.vectors():
        E.insert(v)
    meet = [{c - m: a for c, a in row.items()} for piv, row in E.pivots.items() if piv >= m]
    return Subspace.span(X.field, X.ambient_degree, X.ambient_words, meet)


def subspace_equal(X: Subspace, Y: Subspace) -> bool:
    _check_ambient(X, Y)
    return X.basis == Y.basis


# -- graded pieces of the ideal and of the quotient --------------------------------


@lru_cache(maxsize=256)
def ideal_component(P: Presentation, k: int) -> Subspace:
    """I ∩ L_k as the span of all ``u*r*v`` of degree ``k``.

    Uses I_k = sum_j x_j I_{k - w_j} + span{r v}, which spans the same set.
    """
    words = words_of_degree(P.ord, k)
    index = {w: i for i, w in enumerate(words)}
    vecs = []
    for r in P.relations:
        d = r.degree()
        if r.is_zero() or d > k or not r.is_homogeneous():
            continue
        for v in words_of_degree(P.ord, k - d):
            vecs.append({index[w + v]: c for w, c in r.terms.items()})
    for j, wt in enumerate(P.ord.weights):
        if wt >= k:
            continue
        lower = ideal_component(P, k - wt)
        for row in lower.basis:
            vecs.append({index[(j,) + lower.ambient_words[c]]: a for c, a in row})
    return Subspace.span(P.field, k, words, vecs)


class GradedQuotient:
    """Normal-word basis and multiplication for A = L/I, built degree by degree.

    A word is *normal* when it is not the leading word of an element of I;
    normal words of degree k form a basis of A_k. Every other word reduces
    to a combination of smaller normal words, so this doubles as the
    linear-algebra multiplication oracle.
    """

    def __init__(self, P: Presentation):
        self.P = P
        self.field = P.field
        self.order = P.ord
        self.normal: list = [[()]]
        self.index: list = [{(): 0}]
        self.reductions: list = [{}]
        self.leading: list = [[]]
        rels = [r for r in P.relations if not r.is_zero() and r.is_homogeneous()]
        self._relations = rels

    @property
    def built_to(self) -> int:
        return len(self.normal) - 1

    def extend_to(self, N: int) -> GradedQuotient:
        while self.built_to < N:
            self._build(self.built_to + 1)
        return self

    def _build(self, k: int):
        F = self.field
        order = self.order
        cands = []
        for j, wt in enumerate(order.weights):
            if wt <= k:
                cands.extend(u + (j,) for u in self.normal[k - wt])
        cands.sort(reverse=True)
        col = {w: i for i, w in enumerate(cands)}
        E = Echelon(F)
        for r in self._relations:
            d = r.degree()
            if d > k:
                continue
            for u in self.normal[k - d]:
                vec: dict = {}
                for w, c in r.terms.items():
                    uw = u + w
                    head = self.reduce_word(uw[:-1])
                    last = uw[-1]
                    for b, a in head.items():
                        key = col[self.normal[k - order.weights[last]][b] + (last,)]
                        s = F.add(vec.get(key, F.zero), F.mul(a, c))
                        if s:
                            vec[key] = s
                        else:
                            vec.pop(key, None)
                if vec:
                    E.insert(vec)
        rows = E.rref()
        pivot_cols = {min(r) for r in rows}
        normal = [w for i, w in enumerate(cands) if i not in pivot_cols]
        nindex = {w: i for i, w in enumerate(normal)}
        reductions = {}
        for r in rows:
            p = min(r)
            reductions[cands[p]] = {nindex[cands[c]]: F.neg(a) for c, a in r.items() if c != p}
        self.normal.append(normal)
        self.index.append(nindex)
        self.reductions.append(reductions)
        self.leading.append([cands[min(r)] for r in rows])

    def dim(self, k: int) -> int:
        self.extend_to(k)
        return len(self.normal[k])

    def basis(self, k: int) -> list:
        self.extend_to(k)
        return self.normal[k]

    def times_gen(self, vec: dict, k: int, j: int) -> dict:
        """Right multiplication of a degree-``k`` coordinate vector by generator ``j``."""
        F = self.field
        k2 = k + self.order.weights[j]
        self.extend_to(k2)
        nidx, red, normal = self.index[k2], self.reductions[k2], self.normal[k]
        out: dict = {}
        for b, a in vec.items():
            w = normal[b] + (j,)
            i = nidx.get(w)
            if i is not None:
                s = F.add(out.get(i, F.zero), a)
                if s:
                    out[i] = s
                else:
                    out.pop(i, None)
            else:
                for i, c in red[w].items():
                    s = F.add(out.get(i, F.zero), F.mul(a, c))
                    if s:
                        out[i] = s
                    else:
                        out.pop(i, None)
        return out

    def reduce_word(self, w) -> dict:
        """Coordinates of the class of word ``w`` in the normal basis of its degree."""
        w = tuple(w)
        k = self.order.degree(w)
        self.extend_to(k)
        i = self.index[k].get(w)
        if i is not None:
            return {i: self.field.one}
        if w in self.reductions[k]:
            return dict(self.reductions[k][w])
        vec = {0: self.field.one}
        deg = 0
        for j in w:
            vec = self.times_gen(vec, deg, j)
            deg += self.order.weights[j]
            if not vec:
                break
        return vec

    def reduce(self, f: FreePoly) -> FreePoly:
        """Normal form of a polynomial (each homogeneous part reduced)."""
        F = self.field
        out: dict = {}
        for w, c in f.terms.items():
            k = self.order.degree(w)
            for i, a in self.reduce_word(w).items():
                nw = self.normal[k][i]
                s = F.add(out.get(nw, F.zero), F.mul(a, c))
                if s:
                    out[nw] = s
                else:
                    out.pop(nw, None)
        return FreePoly(f.ring, out)

    def contains(self, f: FreePoly) -> bool:
        """Ideal membership for polynomials."""
        return self.reduce(f).is_zero()

    def multiply(self, p: int, a: int, q: int, b: int) -> dict:
        """Product of basis element ``a`` of A_p and ``b`` of A_q, in A_{p+q} coordinates."""
        vec = {a: self.field.one}
        deg = p
        for j in self.normal[q][b]:
            vec = self.times_gen(vec, deg, j)
            deg += self.order.weights[j]
            if not vec:
                break
        return vec


_QUOTIENTS: dict = {}


def quotient(P: Presentation) -> GradedQuotient:
    """Shared :class:`GradedQuotient` per presentation."""
    Q = _QUOTIENTS.get(P)
    if Q is None:
        if len(_QUOTIENTS) > 64:
            _QUOTIENTS.clear()
        Q = _QUOTIENTS[P] = GradedQuotient(P)
    return Q


def hilbert(P: Presentation, N: int) -> list:
    """Dimensions h_A(0), ..., h_A(N)."""
    if N < 0:
        return []
    Q = quotient(P).extend_to(N)
    return [len(Q.normal[k]) for k in range(N + 1)]


def quadratic_dual(P: Presentation, names: Sequence[str] | None = None) -> Presentation:
    """The quadratic dual: relations span the orthogonal complement of the relation space.

    The word basis of L_2 is taken to be orthonormal.
    """
    _require_quadratic(P)
    F = P.field
    names = tuple(names) if names is not None else tuple(f"{n}_dual" for n in P.ord.names)
    ring = FreeAlgebra(F, GeneratorOrder(names))
    R = ideal_component(P, 2)
    W = R.ambient_words
    pivots = set(R.pivots)
    perp = []
    for f in range(len(W)):
        if f in pivots:
            continue
        v = {W[f]: F.one}
        for row in R.basis:
            d = dict(row)
            if f in d:
                v[W[row[0][0]]] = F.neg(d[f])
        perp.append(FreePoly(ring, v))
    return Presentation(ring, tuple(perp), f"{P.name}!" if P.name else "")


def relation_space(P: Presentation) -> Subspace:
    """The span of the quadratic relations inside L_2."""
    return ideal_component(P, 2)
