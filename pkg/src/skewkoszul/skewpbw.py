"""Graded skew PBW extensions A = sigma(R)<x_1, ..., x_n>.

The data are the images of the base generators under each sigma_i and
delta_i, the scalars c_{i,j} and the lower parts d_{ji} of
x_j x_i - c_{i,j} x_i x_j. Maps are given on generators only; they are
extended multiplicatively (sigma) or by the twisted Leibniz rule (delta)
and checked against the base relations.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Mapping, Sequence

from .errors import StructuralError
from .freealg import FreeAlgebra, FreePoly, GeneratorOrder
from .linalg import echelon_of
from .presentation import Presentation, ValidationReport, hilbert, quotient, validate


@dataclass(frozen=True)
class ExtensionData:
    base: Presentation
    vars: tuple
    sigma: tuple  # sigma[i][k] = sigma_i(t_k), over base.ring
    delta: tuple  # delta[i][k] = delta_i(t_k), over base.ring
    c: tuple  # c[i][j], used for i < j
    lower: Mapping  # (j, i) with j > i -> d_{ji}, over self.ring
    name: str = ""

    @property
    def field(self):
        return self.base.field

    @property
    def m(self) -> int:
        return self.base.ngens

    @property
    def n(self) -> int:
        return len(self.vars)

    @property
    def ring(self) -> FreeAlgebra:
        """The free algebra on base generators followed by the new variables."""
        b = self.base.ord
        order = GeneratorOrder(tuple(b.names) + tuple(self.vars), tuple(b.weights) + (1,) * self.n)
        return FreeAlgebra(self.field, order)

    def lift(self, f: FreePoly) -> FreePoly:
        """A base-ring polynomial viewed in :attr:`ring`."""
        return f.change_ring(self.ring)

    def x(self, i: int) -> FreePoly:
        return self.ring.word((self.m + i,))

    @classmethod
    def build(
        cls,
        base: Presentation,
        vars: Sequence[str],
        sigma: Mapping | None = None,
        delta: Mapping | None = None,
        c: Mapping | None = None,
        lower: Mapping | None = None,
        params: Mapping | None = None,
        name: str = "",
    ) -> ExtensionData:
        """Build from names and strings; omitted data default to sigma = id, delta = 0, c = 1, lower = 0.

        ``sigma``/``delta`` map ``(var, gen)`` to a polynomial, ``c`` maps
        ``(var_i, var_j)`` to a scalar and ``lower`` maps ``(var_j, var_i)``
        to a polynomial in base generators and variables.
        """
        vars = tuple(vars)
        R = base.ring
        F = base.field
        n, m = len(vars), base.ngens
        vidx = {v: i for i, v in enumerate(vars)}
        if len(vidx) != n:
            raise StructuralError("duplicate variable name")

        def poly(ring, p):
            if isinstance(p, FreePoly):
                return p.change_ring(ring) if p.ring != ring else p
            return ring.parse(str(p), params)

        def var(name):
            if name not in vidx:
                raise StructuralError(f"unknown variable {name!r}")
            return vidx[name]

        sig = [[R.word((k,)) for k in range(m)] for _ in range(n)]
        dlt = [[R.zero() for _ in range(m)] for _ in range(n)]
        for (v, t), p in (sigma or {}).items():
            sig[var(v)][R.order.index(t)] = poly(R, p)
        for (v, t), p in (delta or {}).items():
            dlt[var(v)][R.order.index(t)] = poly(R, p)
        cc = [[F.one] * n for _ in range(n)]
        for (a, b), s in (c or {}).items():
            i, j = var(a), var(b)
            cc[i][j] = _scalar(F, s, params)
        E = cls(base, vars, (), (), (), {}, name)
        big = E.ring
        low = {}
        for (a, b), p in (lower or {}).items():
            low[var(a), var(b)] = poly(big, p)
        return cls(
            base,
            vars,
            tuple(tuple(r) for r in sig),
            tuple(tuple(r) for r in dlt),
            tuple(tuple(r) for r in cc),
            low,
            name,
        )

    def __hash__(self):
        return hash((self.base, self.vars, self.sigma, self.delta, self.c, tuple(sorted(self.lower.items()))))

    def __eq__(self, other):
        if not isinstance(other, ExtensionData):
            return NotImplemented
        return (
            self.base == other.base
            and self.vars == other.vars
            and self.sigma == other.sigma
            and self.delta == other.delta
            and self.c == other.c
            and {k: v for k, v in self.lower.items() if v} == {k: v for k, v in other.lower.items() if v}
        )

    def lower_term(self, j: int, i: int) -> FreePoly:
        return self.lower.get((j, i)) or self.ring.zero()

    def over(self, field) -> ExtensionData:
        """The same data with scalars coerced into ``field``."""
        if field == self.field:
            return self
        base = self.base.over(field)
        R = base.ring
        E = ExtensionData(base, self.vars, (), (), (), {}, self.name)
        A = E.ring
        return ExtensionData(
            base,
            self.vars,
            tuple(tuple(p.change_ring(R) for p in row) for row in self.sigma),
            tuple(tuple(p.change_ring(R) for p in row) for row in self.delta),
            tuple(tuple(field(s) for s in row) for row in self.c),
            {k: p.change_ring(A) for k, p in self.lower.items()},
            self.name,
        )


def _scalar(F, s, params):
    if isinstance(s, str):
        s = s.strip()
        if params and s in params:
            return F(params[s])
        if s.startswith("-") and params and s[1:].strip() in params:
            return F.neg(F(params[s[1:].strip()]))
    return F(s)


@dataclass(frozen=True)
class ClassFlags:
    pre_commutative: bool
    quasi_commutative: bool
    derivation_type: bool
    endomorphism_type: bool
    constant: bool
    semi_commutative: bool
    bijective_to_bound: bool
    bound: int

    def render(self) -> str:
        keys = (
            "pre_commutative",
            "quasi_commutative",
            "derivation_type",
            "endomorphism_type",
            "constant",
            "semi_commutative",
        )
        lines = [f"{k}={'true' if getattr(self, k) else 'false'}" for k in keys]
        lines.append(f"bijective_to_bound={'true' if self.bijective_to_bound else 'false'} bound={self.bound}")
        return "\n".join(lines)


# -- extending sigma and delta from generators ----------------------------------


def apply_sigma(E: ExtensionData, i: int, f: FreePoly) -> FreePoly:
    """sigma_i extended to the free algebra as an algebra map."""
    return f.substitute(E.sigma[i], E.base.ring)


def apply_delta(E: ExtensionData, i: int, f: FreePoly) -> FreePoly:
    """delta_i extended by delta(ab) = sigma(a) delta(b) + delta(a) b."""
    R = E.base.ring
    sig, dlt = E.sigma[i], E.delta[i]
    out = R.zero()
    for w, c in f.terms.items():
        head = R.one()
        for pos, k in enumerate(w):
            if dlt[k]:
                out = out + (head * dlt[k] * R.word(w[pos + 1:])).scale(c)
            head = head * sig[k]
    return out


def _sigma_matrix_rank(E: ExtensionData, i: int, d: int):
    """(rank, dim R_d) of the map induced by sigma_i on R_d."""
    Q = quotient(E.base)
    basis = Q.basis(d)
    R = E.base.ring
    rows = [Q.reduce(apply_sigma(E, i, R.word(w))).terms for w in basis]
    return echelon_of(E.field, rows).rank, len(basis)


def _is_graded_sigma(E: ExtensionData) -> bool:
    deg = E.base.ord.weights
    return all(
        s.is_zero() or (s.is_homogeneous() and s.degree() == deg[k])
        for row in E.sigma
        for k, s in enumerate(row)
    )


# -- validation -----------------------------------------------------------------


def _lower_shape_errors(E: ExtensionData) -> list:
    """Terms of lower parts outside R_2 + R_1 x_1 + ... + R_1 x_n."""
    m = E.m
    bw = E.base.ord.weights
    bad = []
    for (j, i), d in sorted(E.lower.items()):
        if not (0 <= i < j < E.n):
            bad.append(((j, i), None, "lower term must be indexed by a pair j > i"))
            continue
        for w in d.terms:
            ts = [a for a in w if a < m]
            xs = [a for a in w if a >= m]
            tdeg = sum(bw[a] for a in ts)
            if not xs and tdeg == 2:
                continue
            if len(xs) == 1 and w[-1] >= m and tdeg == 1:
                continue
            bad.append(((j, i), w, "term outside R_2 + R_1 x_1 + ... + R_1 x_n"))
    return bad


def validate_extension(E: ExtensionData, bound: int = 4, freeness: bool = True) -> ValidationReport:
    """Check the axioms on the data; every failure is reported, nothing raises.

    (a) sigma_i respects the base relations, (b) sigma_i is injective on
    R_d for d <= bound, (c) delta_i respects the base relations, (d) lower
    terms have the graded shape, (e) c_{i,j} != 0. When all of those hold
    and ``freeness`` is set, the Hilbert function of the emitted
    presentation is compared with that of a free R-module on Mon(A).
    """
    report = ValidationReport()
    report.extend(validate(E.base), "base: ")
    n, m = E.n, E.m
    names = E.base.ord.names
    if len(set(E.vars)) != n:
        report.error("duplicate variable name")
    clash = set(E.vars) & set(names)
    if clash:
        report.error("variable names clash with base generators", ",".join(sorted(clash)))
    shapes_ok = (
        len(E.sigma) == n
        and len(E.delta) == n
        and all(len(r) == m for r in E.sigma + E.delta)
        and len(E.c) == n
        and all(len(r) == n for r in E.c)
    )
    if not shapes_ok:
        report.error("sigma, delta and c must have one entry per variable and base generator")
        return report
    if not report.ok:
        return report
    Q = quotient(E.base)
    F = E.field
    for i, v in enumerate(E.vars):
        for r in E.base.relations:
            img = apply_sigma(E, i, r)
            if not Q.contains(img):
                report.error(f"(a) sigma_{v} does not preserve the relation {r}", img)
            dimg = apply_delta(E, i, r)
            if not Q.contains(dimg):
                report.error(f"(c) delta_{v} does not preserve the relation {r}", dimg)
        if _is_graded_sigma(E):
            for d in range(1, bound + 1):
                rk, dim = _sigma_matrix_rank(E, i, d)
                if rk < dim:
                    report.error(f"(b) sigma_{v} is not injective on R_{d}", d)
                    break
        else:
            for k, s in enumerate(E.sigma[i]):
                if s.is_zero():
                    report.error(f"(b) sigma_{v} kills {names[k]}", names[k])
            report.warn(f"(b) sigma_{v} is not degree preserving; injectivity not checked")
    for key, w, msg in _lower_shape_errors(E):
        report.error(f"(d) {msg}", key if w is None else E.ring.order.format_word(w))
    for i in range(n):
        for j in range(i + 1, n):
            if not F(E.c[i][j]):
                report.error(f"(e) c_{{{E.vars[i]},{E.vars[j]}}} is zero", (i, j))
    if freeness and report.ok and check_graded(E).ok:
        N = min(bound, 6) if bound > 0 else 0
        got = hilbert(emit_presentation(E), N)
        want = module_hilbert(E, N)
        if got != want:
            report.error(f"(f) Hilbert function {got} differs from the free-module count {want}")
    return report


def check_graded(E: ExtensionData) -> ValidationReport:
    report = ValidationReport()
    names = E.base.ord.names
    deg = E.base.ord.weights
    F = E.field
    for i, v in enumerate(E.vars):
        for k, s in enumerate(E.sigma[i]):
            if not s.is_zero() and not (s.is_homogeneous() and s.degree() == deg[k]):
                report.error(f"sigma_{v}({names[k]}) is not homogeneous of degree {deg[k]}", s)
        for k, d in enumerate(E.delta[i]):
            if not d.is_zero() and not (d.is_homogeneous() and d.degree() == deg[k] + 1):
                report.error(f"delta_{v}({names[k]}) is not homogeneous of degree {deg[k] + 1}", d)
    for i in range(E.n):
        for j in range(i + 1, E.n):
            if not F(E.c[i][j]):
                report.error(f"c_{{{E.vars[i]},{E.vars[j]}}} is zero", (i, j))
    for key, w, msg in _lower_shape_errors(E):
        report.error(msg, key if w is None else E.ring.order.format_word(w))
    return report


# -- presentation, classification, Hilbert function -------------------------------------


def emit_presentation(E: ExtensionData) -> Presentation:
    """Base relations, f_hk = x_h t_k - sigma_h(t_k) x_h - delta_h(t_k) and g_ji for j > i."""
    A = E.ring
    m = E.m
    rels = [E.lift(r) for r in E.base.relations]
    for h in range(E.n):
        xh = E.x(h)
        for k in range(m):
            t = A.word((k,))
            rels.append(xh * t - E.lift(E.sigma[h][k]) * xh - E.lift(E.delta[h][k]))
    for j in range(E.n):
        for i in range(j):
            g = E.x(j) * E.x(i) - (E.x(i) * E.x(j)).scale(E.c[i][j]) - E.lower_term(j, i)
            rels.append(g)
    return Presentation(A, tuple(rels), E.name)


def classify(E: ExtensionData, bound: int = 4) -> ClassFlags:
    m = E.m
    ident = all(E.sigma[i][k] == E.base.ring.word((k,)) for i in range(E.n) for k in range(m))
    no_delta = all(d.is_zero() for row in E.delta for d in row)
    no_lower = all(d.is_zero() for d in E.lower.values())
    pre = all(any(a >= m for a in w) for d in E.lower.values() for w in d.terms)
    quasi = no_delta and no_lower
    constant = ident and no_delta
    bij = _is_graded_sigma(E)
    if bij:
        for i in range(E.n):
            for d in range(1, bound + 1):
                rk, dim = _sigma_matrix_rank(E, i, d)
                if rk < dim:
                    bij = False
                    break
            if not bij:
                break
    return ClassFlags(pre, quasi, ident, no_delta, constant, quasi and constant, bij, bound)


def module_hilbert(E: ExtensionData, N: int) -> list:
    """h_A(p) = sum_t h_R(t) C(p - t + n - 1, n - 1): a free R-module on monomials in the x's."""
    hR = hilbert(E.base, N)
    n = E.n
    out = []
    for p in range(N + 1):
        if n == 0:
            out.append(hR[p])
        else:
            out.append(sum(hR[t] * comb(p - t + n - 1, n - 1) for t in range(p + 1)))
    return out
