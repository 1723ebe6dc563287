from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from oracles import free_module_series
from skewkoszul import catalog
from skewkoszul.catalog import polynomial_ring
from skewkoszul.presentation import Presentation, hilbert, is_homogeneous_quadratic
from skewkoszul.skewpbw import (
    ExtensionData,
    apply_delta,
    check_graded,
    classify,
    emit_presentation,
    module_hilbert,
    validate_extension,
)

KX = polynomial_ring(("x",))


def rels(E):
    return [str(r) for r in emit_presentation(E).relations]


def test_jordan_plane():
    E = catalog.build("jordan_plane")
    assert validate_extension(E).ok and check_graded(E).ok
    assert rels(E) == ["y*x - x*y - x^2"]
    f = classify(E)
    assert f.derivation_type and not f.endomorphism_type and not f.quasi_commutative
    assert module_hilbert(E, 4) == [1, 2, 3, 4, 5]


def test_quantum_plane():
    E = catalog.build("quantum_plane", q=3)
    assert validate_extension(E).ok
    assert rels(E) == ["x*t - 3*t*x"]
    f = classify(E)
    assert f.quasi_commutative and not f.constant and not f.derivation_type
    assert classify(catalog.build("quantum_plane", q=1)).semi_commutative


def test_zero_sigma_fails_injectivity():
    E = ExtensionData.build(KX, ("y",), sigma={("y", "x"): "0"})
    report = validate_extension(E)
    assert not report.ok
    assert any(i.message.startswith("(b)") for i in report.errors)


def test_delta_wrong_degree():
    E = ExtensionData.build(KX, ("y",), delta={("y", "x"): "x^3"})
    assert not check_graded(E).ok


def test_sigma_must_respect_relations():
    # on K[s,t], sigma(s) = t, sigma(t) = t is an endomorphism but not injective
    R = polynomial_ring(("s", "t"))
    E = ExtensionData.build(R, ("y",), sigma={("y", "s"): "t"})
    assert not validate_extension(E).ok
    # on K<s,t>/(st), sigma swapping s and t does not preserve the relation
    R2 = Presentation.from_strings("st", ["s*t"], name="R2")
    E2 = ExtensionData.build(R2, ("y",), sigma={("y", "s"): "t", ("y", "t"): "s"})
    assert any(i.message.startswith("(a)") for i in validate_extension(E2).errors)


def test_delta_must_respect_relations():
    # on K<s,t>/(st) with sigma = id: delta(s) = s^2 keeps st in the ideal, delta(s) = t^2 does not
    R = Presentation.from_strings("st", ["s*t"], name="R")
    good = ExtensionData.build(R, ("y",), delta={("y", "s"): "s^2"})
    assert validate_extension(good).ok
    bad = ExtensionData.build(R, ("y",), delta={("y", "s"): "t^2"})
    report = validate_extension(bad)
    assert any(i.message.startswith("(c)") for i in report.errors)


def test_leibniz_extension():
    E = catalog.build("jordan_plane")
    x = E.base.ring.gen("x")
    assert apply_delta(E, 0, x * x) == E.base.ring.parse("2*x^3")


def test_lower_shape_and_c():
    R = polynomial_ring(("z",))
    bad_shape = ExtensionData.build(R, ("a", "b"), lower={("b", "a"): "a*z"})
    assert not check_graded(bad_shape).ok
    bad_c = ExtensionData.build(R, ("a", "b"), c={("a", "b"): 0})
    assert any(i.message.startswith("(e)") for i in validate_extension(bad_c).errors)


def test_freeness_check_catches_bad_axioms():
    # sigma_x(z) = 2z with yx = xy + z^2: the overlap yxz forces z^3 = 0
    R = polynomial_ring(("z",))
    E = ExtensionData.build(R, ("x", "y"), sigma={("x", "z"): "2*z"}, lower={("y", "x"): "z^2"})
    assert check_graded(E).ok
    report = validate_extension(E, 4)
    assert [i.message[:3] for i in report.errors] == ["(f)"]
    assert not validate_extension(E, 4, freeness=False).issues


def test_module_hilbert_examples():
    K = polynomial_ring(())
    assert module_hilbert(catalog.free_over(K), 3) == [1, 2, 3, 4]
    assert module_hilbert(catalog.build("enveloping_sl2"), 2) == [1, 4, 10]
    trivial = ExtensionData.build(KX, ())
    assert module_hilbert(trivial, 4) == hilbert(KX, 4)
    assert emit_presentation(trivial).relations == KX.relations


def test_enveloping_presentations():
    E = catalog.build("enveloping_sl2")
    r = rels(E)
    assert "e*z - z*e" in r
    assert "f*e - e*f + z*h" in r
    assert "h*e - e*h - 2*z*e" in r
    assert "h*f - f*h + 2*z*f" in r
    assert check_graded(E).ok
    assert is_homogeneous_quadratic(emit_presentation(E))[0]


def test_catalog_extensions_free():
    for name in catalog.names():
        obj = catalog.build(name)
        if isinstance(obj, ExtensionData):
            assert validate_extension(obj, 6).ok, name
            assert check_graded(obj).ok, name
            P = emit_presentation(obj)
            assert hilbert(P, 6) == module_hilbert(obj, 6)
            assert hilbert(P, 6) == free_module_series(hilbert(obj.base, 6), obj.n, 6)


def _flags_consistent(f):
    assert not f.semi_commutative or (f.quasi_commutative and f.constant)
    assert not f.quasi_commutative or f.endomorphism_type


# -- random quasi-commutative and q-skew data -------------------------------------

nonzero = st.integers(-3, 3).filter(bool).map(Fraction)


@st.composite
def qskew(draw):
    """K[t] base, variables scaled by sigma(t) = q_i t, x_j x_i = c_ij x_i x_j."""
    n = draw(st.integers(1, 3))
    names = tuple(f"x{i + 1}" for i in range(n))
    qs = [draw(nonzero) for _ in range(n)]
    cs = {(names[i], names[j]): draw(nonzero) for i in range(n) for j in range(i + 1, n)}
    R = polynomial_ring(("t",))
    t = R.ring.gen("t")
    return ExtensionData.build(R, names, sigma={(v, "t"): t.scale(q) for v, q in zip(names, qs)}, c=cs)


@given(qskew())
@settings(max_examples=25, deadline=None)
def test_qskew_extensions(E):
    assert validate_extension(E, 4).ok
    f = classify(E)
    _flags_consistent(f)
    assert f.quasi_commutative and f.endomorphism_type
    P = emit_presentation(E)
    for g in P.relations[E.m * E.n:]:
        assert len(g.terms) == 2
    assert hilbert(P, 5) == module_hilbert(E, 5)
    assert is_homogeneous_quadratic(P)[0]


def test_flag_implications_on_catalog():
    for name in catalog.names():
        obj = catalog.build(name)
        if isinstance(obj, ExtensionData):
            _flags_consistent(classify(obj))
