from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from skewkoszul.errors import ParseError, StructuralError
from skewkoszul.freealg import (
    FieldSpec,
    FreeAlgebra,
    FreePoly,
    GeneratorOrder,
    compare_deglex,
    format_poly,
    words_of_degree,
)

Q = FieldSpec.Q()
GF = FieldSpec.GF()
XY = FreeAlgebra(Q, GeneratorOrder(("x", "y")))
XYZ = FreeAlgebra(Q, GeneratorOrder(("x", "y", "z")))


def words3(max_len=4):
    return st.lists(st.integers(0, 2), max_size=max_len).map(tuple)


def polys(ring=XYZ, max_terms=4):
    coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return st.dictionaries(words3(3), coeff, max_size=max_terms).map(lambda t: FreePoly(ring, t))


def test_field_arithmetic():
    assert Q("-3/4") == Fraction(-3, 4)
    assert GF(Fraction(1, 2)) * 2 % GF.characteristic == 1
    assert GF.inv(GF(3)) * 3 % GF.characteristic == 1
    assert GF.to_str(GF(-1)) == "-1"
    with pytest.raises(StructuralError):
        FieldSpec.GF(4)
    with pytest.raises(ZeroDivisionError):
        Q.inv(Q.zero)


def test_deglex_examples():
    ord = GeneratorOrder(("x", "y"))
    assert compare_deglex((0, 1), (1, 0), ord) == -1  # xy < yx
    assert compare_deglex((1,), (0, 0), ord) == -1  # degree first
    assert compare_deglex((1, 0), (1, 0), ord) == 0
    weighted = GeneratorOrder(("t", "z"), (1, 2))
    assert compare_deglex((1,), (0, 0), weighted) == 1  # z > t^2 by letter after equal degree
    assert words_of_degree(weighted, 3) == [(1, 0), (0, 1), (0, 0, 0)]


def test_words_of_degree_counts():
    ord = GeneratorOrder(("t", "z"), (1, 2))
    fib = [len(words_of_degree(ord, k)) for k in range(8)]
    assert fib == [1, 1, 2, 3, 5, 8, 13, 21]


def test_parse_and_format():
    f = XY.parse("y*x - x*y - x^2")
    assert str(f) == "y*x - x*y - x^2"
    assert f.leading_word == (1, 0)
    assert XY.parse("-1/2*x^3 + q*y", {"q": 3}) == XY.word((0, 0, 0), Fraction(-1, 2)) + XY.word((1,), 3)
    assert XY.parse("x*y - x*y").is_zero()
    for bad in ["", "x +", "x ** y", "w*x", "x^y", "x^1/2"]:
        with pytest.raises(ParseError):
            XY.parse(bad)


def test_parse_error_column():
    with pytest.raises(ParseError) as info:
        XY.parse("x*y + w")
    assert info.value.column == 7


def test_homogeneity_and_components():
    f = XY.parse("x*y + y - x")
    assert not f.is_homogeneous()
    assert set(f.components()) == {1, 2}
    assert f.component(1) == XY.parse("y - x")
    assert XY.zero().degree() == -1
    with pytest.raises(ValueError):
        XY.zero().leading_word


def test_substitute_and_change_ring():
    t = FreeAlgebra(Q, GeneratorOrder(("t",)))
    f = t.parse("t^2")
    assert f.substitute([t.parse("3*t")]) == t.parse("9*t^2")
    g = XY.parse("x*y").change_ring(XY, [1, 0])
    assert g == XY.parse("y*x")
    h = XY.parse("1/2*x").change_ring(FreeAlgebra(GF, XY.order))
    assert h.coeff((0,)) == GF(Fraction(1, 2))


def test_mixed_rings_rejected():
    with pytest.raises(StructuralError):
        XY.gen("x") + XYZ.gen("x")


@given(polys(), polys(), polys())
@settings(max_examples=60, deadline=None)
def test_ring_axioms(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f + g) * h == f * h + g * h
    assert f + g == g + f
    assert f - f == XYZ.zero()
    assert f * XYZ.one() == f


@given(words3(), words3(), words3(), words3())
@settings(max_examples=100, deadline=None)
def test_deglex_is_monomial_order(u, v, a, b):
    ord = XYZ.order
    c = compare_deglex(u, v, ord)
    assert compare_deglex(v, u, ord) == -c
    if c < 0:
        assert compare_deglex(a + u + b, a + v + b, ord) < 0
    assert compare_deglex((), u, ord) <= 0


@given(polys())
@settings(max_examples=60, deadline=None)
def test_format_parse_roundtrip(f):
    assert XYZ.parse(format_poly(f)) == f


@given(polys(), polys())
@settings(max_examples=40, deadline=None)
def test_leading_word_multiplicative(f, g):
    if f.is_zero() or g.is_zero():
        return
    assert (f * g).leading_word == f.leading_word + g.leading_word


def test_spec_examples():
    ord = XYZ.order
    assert compare_deglex((), (), ord) == 0
    assert compare_deglex((2, 2), (0, 1), ord) == 1  # z^2 > xy
    assert XY.parse("x + y") * XY.parse("x - y") == XY.parse("x^2 - x*y + y*x - y^2")
    assert XY.one() * XY.parse("y*x") == XY.parse("y*x")
    assert XY.zero().component(3).is_zero()
    assert XY.parse("x + x^2").component(1) == XY.gen("x")
    for n in (1, 2, 3):
        names = tuple("abc"[:n])
        for k in range(6):
            assert len(words_of_degree(GeneratorOrder(names), k)) == n**k
    assert words_of_degree(GeneratorOrder(("t", "z"), (1, 2)), 2) == [(1,), (0, 0)]


def test_invalid_word_rejected():
    with pytest.raises(StructuralError):
        compare_deglex((0, 5), (0,), XY.order)
    with pytest.raises(StructuralError):
        GeneratorOrder(("x",), (0,))


@given(polys(), polys(), st.integers(0, 6))
@settings(max_examples=40, deadline=None)
def test_component_of_product(f, g, k):
    expect = XYZ.zero()
    for a in range(k + 1):
        expect = expect + f.component(a) * g.component(k - a)
    assert (f * g).component(k) == expect
    total = XYZ.zero()
    for part in f.components().values():
        total = total + part
    assert total == f
