from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from skewkoszul.errors import PreconditionError
from skewkoszul.freealg import FieldSpec, FreeAlgebra, FreePoly, GeneratorOrder
from skewkoszul.presentation import Presentation, hilbert, quotient
from skewkoszul.rewriting import (
    complete,
    complete_with_history,
    find_pbw_order,
    normal_form,
    normal_words,
    orient,
    pbw_check,
)

Q = FieldSpec.Q()
JORDAN = Presentation.from_strings("xy", ["y*x - x*y - x^2"])
ORDER = Presentation.from_strings("xyz", ["z^2 - x*y - y*x", "z*x - x*z", "z*y - y*z"])


def rules(RS):
    return {RS.ord.format_word(r.lhs): str(r.rhs) for r in RS.rules}


def test_orient_examples():
    assert rules(orient(JORDAN)) == {"y*x": "x*y + x^2"}
    assert rules(orient(ORDER)) == {"z*x": "x*z", "z*y": "y*z", "z^2": "y*x + x*y"}
    empty = orient(Presentation.from_strings("xy", []))
    assert empty.rules == () and len(normal_words(empty, 3)) == 8
    with pytest.raises(PreconditionError):
        orient(Presentation.from_strings("xy", ["x^2 + y"]))


def test_rules_are_monic_and_decreasing():
    for P in (JORDAN, ORDER):
        for r in complete(orient(P), 4).rules:
            key = P.ord.key
            assert all(key(w) < key(r.lhs) for w in r.rhs.terms)


def test_normal_form_examples():
    RS = orient(JORDAN)
    y, x = JORDAN.ring.gen("y"), JORDAN.ring.gen("x")
    assert normal_form(RS, y * x) == JORDAN.ring.parse("x*y + x^2")
    assert normal_form(RS, x * y) == x * y
    full = complete(orient(ORDER), 3)
    f = ORDER.ring.parse("z^2*x - x*z^2")
    assert normal_form(full, f).is_zero()
    # before completion the two reductions disagree; the residue is the dependence
    assert str(normal_form(orient(ORDER), f)) == "y*x^2 - x^2*y"


def test_complete_examples():
    RS, added = complete_with_history(orient(JORDAN), 4)
    assert added == [] and RS.confluent_to == 4
    RS, added = complete_with_history(orient(ORDER), 3)
    assert str(added[0].poly()) == "y*x^2 - x^2*y"
    empty = orient(Presentation.from_strings("xy", []))
    assert complete(empty, 4).rules == ()


def test_interreduced():
    RS = complete(orient(ORDER), 5)
    lhs = [r.lhs for r in RS.rules]
    for a in lhs:
        for b in lhs:
            if a != b:
                assert not any(b[i:i + len(a)] == a for i in range(len(b) - len(a) + 1))


def test_pbw_examples():
    v = pbw_check(JORDAN)
    assert v.status == "IsPBW"
    assert [len(v.s_monomials(m)) for m in range(6)] == hilbert(JORDAN, 5)
    bad = pbw_check(ORDER, ["x", "y", "z"])
    assert bad.status == "NotPBW"
    assert str(bad.witness) == "y*x^2 - x^2*y"
    assert bad.format_pairs() == "{(1,1), (1,2), (1,3), (2,1), (2,2), (2,3)}"
    good = pbw_check(ORDER, ["z", "x", "y"])
    assert good.status == "IsPBW"
    assert good.format_pairs() == "{(1,1), (1,2), (1,3), (2,2), (2,3), (3,3)}"
    # S-monomials are exactly the nondecreasing words z^a x^b y^c
    assert all(list(w) == sorted(w) for w in good.s_monomials(4))
    assert pbw_check(ORDER, bound=2).status == "Inconclusive"
    with pytest.raises(PreconditionError):
        pbw_check(Presentation.from_strings("xy", ["x^3"]))


def test_find_pbw_order():
    v = find_pbw_order(ORDER)
    assert v is not None and v.status == "IsPBW"


def test_witness_lies_in_ideal():
    bad = pbw_check(ORDER, ["x", "y", "z"])
    assert quotient(ORDER).contains(bad.witness)


# -- properties ---------------------------------------------------------------

words2 = [(0, 0), (0, 1), (1, 0), (1, 1)]
R2 = FreeAlgebra(Q, GeneratorOrder(("x", "y")))
quad = st.lists(st.integers(-2, 2), min_size=4, max_size=4).map(lambda cs: FreePoly(R2, dict(zip(words2, cs))))
small_poly = st.dictionaries(
    st.lists(st.integers(0, 1), min_size=2, max_size=4).map(tuple), st.integers(-3, 3), max_size=4
).map(lambda t: FreePoly(R2, t))


def _pres(rels):
    return Presentation(R2, tuple(r for r in rels if not r.is_zero()))


@given(st.lists(quad, max_size=2), small_poly, small_poly, st.integers(-2, 2))
@settings(max_examples=50, deadline=None)
def test_normal_form_laws(rels, f, g, a):
    P = _pres(rels)
    RS = complete(orient(P), 8)
    nf = lambda h: normal_form(RS, h)
    assert nf(nf(f)) == nf(f)
    assert nf(f.scale(a) + g) == nf(f).scale(a) + nf(g)
    assert nf(f * g) == nf(nf(f) * nf(g))
    # f - nf(f) lies in the ideal
    assert quotient(P).contains(f - nf(f))


@given(st.lists(quad, max_size=3))
@settings(max_examples=40, deadline=None)
def test_pbw_counts(rels):
    P = _pres(rels)
    v = pbw_check(P)
    h = hilbert(P, 5)
    counts = [len(v.s_monomials(m)) for m in range(6)]
    if v.status == "IsPBW":
        assert counts == h
    else:
        assert v.status == "NotPBW" and v.witness is not None
        assert counts != h
        assert quotient(P).contains(v.witness)
