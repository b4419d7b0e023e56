import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import ambient, ideal, poly
from mwb import LogAmbient, Polynomial, PolyIdeal
from mwb.errors import AmbientMismatch, MwbError
from mwb.poly import (
    constant,
    derivative,
    format_polynomial,
    log_derivation,
    monomial,
    monomial_saturation,
    rename,
    restrict,
    strip_inverted_units,
    substitute,
    variable,
)


@st.composite
def polys(draw, amb, max_terms=4):
    terms = {}
    for _ in range(draw(st.integers(min_value=1, max_value=max_terms))):
        e = tuple(
            draw(st.integers(min_value=0, max_value=3)) for _ in range(amb.n)
        )
        c = draw(st.integers(min_value=-4, max_value=4))
        if c:
            terms[e] = terms.get(e, 0) + c
    return Polynomial(amb, {e: c for e, c in terms.items() if c})


A2 = ambient(ordinary="x", monomial="y")
A3 = ambient(ordinary="x,y,z")


def test_describe_strings():
    assert ambient(monomial="x,y,z").describe() == "A^{3;3}(x monomial, y monomial, z monomial)"
    assert (
        ambient(ordinary="x", monomial="y,z").describe()
        == "A^{3;2}(x ordinary, y monomial, z monomial)"
    )
    amb = ambient(ordinary="x", monomial="z", inverted=("z",))
    assert amb.describe() == "A^{2;1}(x ordinary, z monomial*)"


def test_with_inverted_unions():
    amb = ambient(ordinary="x,y", inverted=("x",))
    more = amb.with_inverted(("y",))
    assert more.inverted == frozenset({"x", "y"})


def test_arithmetic_expansion():
    f = poly(A3, "(x + y)^2")
    assert f.terms == {(2, 0, 0): 1, (1, 1, 0): 2, (0, 2, 0): 1}
    g = poly(A3, "(x + y) (x - y)")
    assert g.terms == {(2, 0, 0): 1, (0, 2, 0): -1}
    h = poly(A3, "1/2 x - 1/2 x")
    assert h.is_zero()


@given(polys(A3), polys(A3), polys(A3))
def test_ring_axioms(f, g, h):
    assert (f + g).terms == (g + f).terms
    assert ((f + g) + h).terms == (f + (g + h)).terms
    assert (f * (g + h)).terms == (f * g + f * h).terms
    assert ((f * g) * h).terms == (f * (g * h)).terms
    assert (f - f).is_zero()


@given(polys(A2), polys(A2))
def test_log_derivation_is_a_derivation(f, g):
    for name in ("x", "y"):
        left = log_derivation(f * g, name)
        right = log_derivation(f, name) * g + f * log_derivation(g, name)
        assert left.terms == right.terms


def test_log_derivation_styles():
    # ordinary coordinates differentiate, monomial ones scale
    f = poly(A2, "x^3 y^2")
    assert log_derivation(f, "x").terms == {(2, 2): 3}
    assert log_derivation(f, "y").terms == {(3, 2): 2}
    assert derivative(f, "y").terms == {(3, 1): 2}


def test_evaluate():
    f = poly(A3, "x^2 + y z - 3")
    assert f.evaluate((1, 2, 3)) == 4
    assert f.evaluate((Fraction(1, 2), 0, 0)) == Fraction(-11, 4)


def test_restrict_drops_the_variable():
    f = poly(A3, "x^2 + x z + y")
    r = restrict(f, "x")
    assert r.ambient.n == 2
    assert [v for v, _ in r.ambient.variables] == ["y", "z"]
    assert r.terms == {(1, 0): 1}
    s = restrict(f, "x", value=poly(ambient(ordinary="y,z"), "y + z"))
    # substituting x = y + z: (y+z)^2 + (y+z) z + y
    assert s.terms == poly(ambient(ordinary="y,z"), "(y+z)^2 + (y+z) z + y").terms


def test_substitute_and_rename():
    target = ambient(ordinary="u,v")
    f = poly(A3, "x y + z^2")
    images = {
        "x": poly(target, "u"),
        "y": poly(target, "v"),
        "z": poly(target, "u + v"),
    }
    g = substitute(f, images, target)
    assert g.terms == poly(target, "u v + (u + v)^2").terms
    h = rename(poly(A3, "x^2 + y"), {"x": "u", "y": "v", "z": "w"}, ambient(ordinary="u,v,w"))
    assert format_polynomial(h) == "u^2 + v"


def test_substitute_requires_all_names():
    target = ambient(ordinary="u")
    with pytest.raises(MwbError):
        substitute(poly(A3, "x + y"), {"x": poly(target, "u")}, target)


def test_ambient_mismatch_is_rejected():
    f = poly(A3, "x")
    g = poly(ambient(ordinary="x,y"), "x")
    with pytest.raises(AmbientMismatch):
        f + g


def test_strip_inverted_units():
    amb = ambient(ordinary="x,y", inverted=("y",))
    f = poly(amb, "y^2 x + y^3")
    s, e = strip_inverted_units(f)
    assert e == (0, 2)
    assert s.terms == {(1, 0): 1, (0, 1): 1}
    g = poly(amb, "y^2")
    s, e = strip_inverted_units(g)
    assert e == (0, 2) and s.terms == {(0, 0): 1}


def test_monomial_saturation():
    amb = ambient(monomial="x,y,z")
    assert set(monomial_saturation(ideal(amb, "x^2 + y^2 + z^2")).gens) == {
        (2, 0, 0),
        (0, 2, 0),
        (0, 0, 2),
    }
    assert set(monomial_saturation(ideal(amb, "x^2 + y^2 z + z^3")).gens) == {
        (2, 0, 0),
        (0, 2, 1),
        (0, 0, 3),
    }


def test_format_ordering_is_stable():
    f = poly(A3, "z^3 + x^2 + y^2 z")
    assert format_polynomial(f) == "y^2*z + z^3 + x^2"
    assert str(ideal(A3, "0")) == "(0)"
    assert format_polynomial(constant(A3, Fraction(3, 2))) == "3/2"
    assert format_polynomial(constant(A3, 0)) == "0"
    assert format_polynomial(variable(A3, "y") ** 2 - monomial(A3, (1, 0, 0), 2)) == "y^2 - 2*x"


def test_ideal_container():
    i = ideal(A3, "x^2 + y, z")
    assert len(i.generators) == 2
    assert str(i) == "(x^2 + y, z)"
