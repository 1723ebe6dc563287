"""Built-in example algebras and extensions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .errors import ParameterError
from .freealg import FieldSpec
from .presentation import Presentation
from .skewpbw import ExtensionData


def polynomial_ring(names: Sequence[str] = ("t",), field: FieldSpec | None = None) -> Presentation:
    """K[t_1, ..., t_m] as a quadratic presentation (m = 0 gives K)."""
    names = tuple(names)
    rels = [f"{names[j]}*{names[i]} - {names[i]}*{names[j]}" for i in range(len(names)) for j in range(i + 1, len(names))]
    label = "K[" + ",".join(names) + "]" if names else "K"
    return Presentation.from_strings(names, rels, field, name=label)


def _nonzero(F: FieldSpec, name: str, value):
    v = F(value)
    if not v:
        raise ParameterError(f"{name} must be nonzero")
    return v


# -- extensions from the examples ------------------------------------------------


def jordan_plane(field: FieldSpec | None = None) -> ExtensionData:
    """K<x,y>/(yx - xy - x^2) as sigma(K[x])<y> with sigma = id, delta(x) = x^2."""
    return ExtensionData.build(
        polynomial_ring(("x",), field), ("y",), delta={("y", "x"): "x^2"}, name="jordan_plane"
    )


def quantum_plane(q=2, field: FieldSpec | None = None) -> ExtensionData:
    """K<t,x>/(xt - q tx): sigma(t) = q t, delta = 0, q != 0."""
    base = polynomial_ring(("t",), field)
    q = _nonzero(base.field, "q", q)
    return ExtensionData.build(base, ("x",), sigma={("x", "t"): "q*t"}, params={"q": q}, name="quantum_plane")


def free_over(R: Presentation | None = None, names: Sequence[str] = ("x1", "x2")) -> ExtensionData:
    """The trivial extension R[x_1, ..., x_n]: sigma = id, delta = 0, c = 1, lower = 0."""
    R = R if R is not None else polynomial_ring(())
    return ExtensionData.build(R, tuple(names), name="free_over")


def remark_order_algebra(field: FieldSpec | None = None, order: Sequence[str] = ("x", "y", "z")) -> Presentation:
    """K<x,y,z>/(z^2 - xy - yx, zx - xz, zy - yz); PBW for z<x<y but not for x<y<z."""
    P = Presentation.from_strings(
        ("x", "y", "z"), ("z^2 - x*y - y*x", "z*x - x*z", "z*y - y*z"), field, name="remark_order_algebra"
    )
    return P.reorder(order) if tuple(order) != ("x", "y", "z") else P


def remark_order_extension(field: FieldSpec | None = None) -> ExtensionData:
    """The same algebra as sigma(K[z])<x,y> with yx = -xy + z^2."""
    return ExtensionData.build(
        polynomial_ring(("z",), field),
        ("x", "y"),
        c={("x", "y"): -1},
        lower={("y", "x"): "z^2"},
        name="remark_order_extension",
    )


def _check_a(F: FieldSpec, a):
    a = F(a)
    if a == F.zero or a == F.one:
        raise ParameterError("a must differ from 0 and 1")
    return a


def koszul_non_pbw_base(a=2, field: FieldSpec | None = None) -> Presentation:
    """K<x,y,z>/(x^2 + yz, x^2 + a zy), a not in {0, 1}: Koszul, not PBW."""
    F = field or FieldSpec.Q()
    a = _check_a(F, a)
    return Presentation.from_strings(
        ("x", "y", "z"), ("x^2 + y*z", "x^2 + a*z*y"), F, params={"a": a}, name="koszul_non_pbw_base"
    )


def koszul_non_pbw_extension(a=2, field: FieldSpec | None = None) -> ExtensionData:
    return ExtensionData.build(koszul_non_pbw_base(a, field), ("u",), name="koszul_non_pbw")


def koszul_non_pbw(a=2, field: FieldSpec | None = None) -> Presentation:
    """R[u] for the base above: u is central."""
    from .skewpbw import emit_presentation

    return emit_presentation(koszul_non_pbw_extension(a, field))


def remark_v_algebra(field: FieldSpec | None = None) -> Presentation:
    """K<x,y>/(y^2 - xy, y^2); the relation space is spanned by the monomials xy and y^2."""
    return Presentation.from_strings(("x", "y"), ("y^2 - x*y", "y^2"), field, name="remark_v_algebra")


def remark_v_extension(field: FieldSpec | None = None) -> ExtensionData:
    return ExtensionData.build(remark_v_algebra(field), ("u",), name="remark_v_extension")


def non_koszul_fixture(field: FieldSpec | None = None) -> Presentation:
    """A quadratic algebra with Ext^{3,4} != 0, found by searching small 3-generator presentations."""
    return Presentation.from_strings(
        ("x", "y", "z"), NON_KOSZUL_RELATIONS, field, name="non_koszul_fixture"
    )


NON_KOSZUL_RELATIONS = ("x^2", "x*y - y^2")


# -- homogenized enveloping algebras -------------------------------------------


def lie_constants(n: int, brackets: Mapping) -> dict:
    """Structure constants {(i, j, k): c^k_ij} from brackets {(i, j): {k: c}} given for i < j."""
    out: dict = {}
    for (i, j), vals in brackets.items():
        for k, v in vals.items():
            v = Fraction(v)
            if v:
                out[i, j, k] = v
                out[j, i, k] = -v
    return out


def _check_lie(F: FieldSpec, c: Mapping, n: int):
    def get(i, j, k):
        return F(c.get((i, j, k), 0))

    for (i, j, k), v in c.items():
        if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
            raise ParameterError(f"structure constant index out of range: {(i, j, k)}")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if F.add(get(i, j, k), get(j, i, k)):
                    raise ParameterError(f"antisymmetry fails: c^{k + 1}_{i + 1}{j + 1}")
    # [x_i, [x_j, x_k]] + [x_j, [x_k, x_i]] + [x_k, [x_i, x_j]] = 0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for m in range(n):
                    s = F.zero
                    for a, b, d in ((i, j, k), (j, k, i), (k, i, j)):
                        for l in range(n):
                            s = F.add(s, F.mul(get(b, d, l), get(a, l, m)))
                    if s:
                        raise ParameterError(f"Jacobi identity fails for ({i + 1},{j + 1},{k + 1})")


def homogenized_enveloping(
    c: Mapping,
    n: int,
    names: Sequence[str] | None = None,
    field: FieldSpec | None = None,
    name: str = "homogenized_enveloping",
) -> ExtensionData:
    """sigma(K[z])<x_1..x_n> with x_j x_i - x_i x_j = z sum_k c^k_ji x_k.

    ``c`` maps 0-based ``(i, j, k)`` to c^k_ij; both antisymmetric entries
    must be present.
    """
    base = polynomial_ring(("z",), field)
    F = base.field
    _check_lie(F, c, n)
    names = tuple(names) if names is not None else tuple(f"x{i + 1}" for i in range(n))
    if len(names) != n:
        raise ParameterError("one name per basis element")
    ring = ExtensionData.build(base, names).ring
    lower = {}
    for j in range(n):
        for i in range(j):
            d = ring.zero()
            for k in range(n):
                d = d + ring.word((0, 1 + k)).scale(F(c.get((j, i, k), 0)))
            if d:
                lower[names[j], names[i]] = d
    return ExtensionData.build(base, names, lower=lower, name=name)


HEISENBERG = lie_constants(3, {(0, 1): {2: 1}})
SL2 = lie_constants(3, {(0, 1): {2: 1}, (0, 2): {0: -2}, (1, 2): {1: 2}})  # e, f, h


# -- registry -------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str  # "presentation" | "extension"
    params: tuple  # (name, default) pairs
    make: Callable
    doc: str = ""

    def build(self, field: FieldSpec | None = None, **params):
        unknown = set(params) - {p for p, _ in self.params}
        if unknown:
            raise ParameterError(f"{self.name} has no parameter {sorted(unknown)[0]!r}")
        kw = {p: params.get(p, d) for p, d in self.params}
        for p, v in kw.items():
            if isinstance(v, str):
                try:
                    kw[p] = Fraction(v)
                except (ValueError, ZeroDivisionError):
                    raise ParameterError(f"parameter {p} must be rational, got {v!r}") from None
        return self.make(field=field, **kw)


def _entries():
    E = CatalogEntry
    return [
        E("jordan_plane", "extension", (), jordan_plane, "yx = xy + x^2 over K[x]"),
        E("quantum_plane", "extension", (("q", 2),), quantum_plane, "xt = q tx over K[t], q != 0"),
        E("free_over", "extension", (), lambda field=None: free_over(polynomial_ring((), field)), "K[x1,x2] over K"),
        E("remark_order_algebra", "presentation", (), remark_order_algebra, "<z^2-xy-yx, zx-xz, zy-yz>, x<y<z"),
        E(
            "remark_order_algebra_zxy",
            "presentation",
            (),
            lambda field=None: remark_order_algebra(field, ("z", "x", "y")),
            "the same algebra, z<x<y",
        ),
        E("remark_order_extension", "extension", (), remark_order_extension, "the same algebra over K[z]"),
        E("koszul_non_pbw_base", "presentation", (("a", 2),), koszul_non_pbw_base, "<x^2+yz, x^2+azy>, a != 0,1"),
        E("koszul_non_pbw", "presentation", (("a", 2),), koszul_non_pbw, "the base with a central u"),
        E("koszul_non_pbw_extension", "extension", (("a", 2),), koszul_non_pbw_extension, "R[u] as extension data"),
        E("remark_v_algebra", "presentation", (), remark_v_algebra, "<y^2-xy, y^2>"),
        E("remark_v_extension", "extension", (), remark_v_extension, "R[u] over the algebra above"),
        E("non_koszul_fixture", "presentation", (), non_koszul_fixture, "Ext^{3,4} != 0"),
        E(
            "enveloping_abelian",
            "extension",
            (),
            lambda field=None: homogenized_enveloping({}, 2, field=field, name="enveloping_abelian"),
            "abelian Lie algebra of dimension 2",
        ),
        E(
            "enveloping_heisenberg",
            "extension",
            (),
            lambda field=None: homogenized_enveloping(HEISENBERG, 3, field=field, name="enveloping_heisenberg"),
            "Heisenberg Lie algebra, [x1,x2] = x3",
        ),
        E(
            "enveloping_sl2",
            "extension",
            (),
            lambda field=None: homogenized_enveloping(SL2, 3, ("e", "f", "h"), field, "enveloping_sl2"),
            "sl2 with [e,f] = h, [h,e] = 2e, [h,f] = -2f",
        ),
    ]


CATALOG = {e.name: e for e in _entries()}


def names() -> list:
    return sorted(CATALOG)


def entry(name: str) -> CatalogEntry:
    try:
        return CATALOG[name]
    except KeyError:
        raise ParameterError(f"unknown catalog entry {name!r}") from None


def build(name: str, field: FieldSpec | None = None, **params):
    return entry(name).build(field, **params)
