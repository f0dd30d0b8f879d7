from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from arithsurf.errors import ZeroPolynomial
from arithsurf.intpoly import (
    IntPoly,
    discriminant,
    divides,
    format_intpoly,
    gcd_int,
    parse_intpoly,
    rational_roots,
    resultant,
    resultant_sylvester,
    spot_check_irreducible,
    squarefree_part,
)

small_polys = st.lists(
    st.integers(min_value=-9, max_value=9), min_size=1, max_size=5
).map(IntPoly).filter(lambda h: not h.is_zero)


def test_basic_arithmetic():
    a = parse_intpoly("t^2+1")
    b = parse_intpoly("t-1")
    assert a * b == parse_intpoly("t^3 - t^2 + t - 1")
    assert a + b == parse_intpoly("t^2 + t")
    assert (a - a).is_zero
    assert a.evaluate(2) == 5
    assert a.evaluate(Fraction(1, 2)) == Fraction(5, 4)


def test_parse_format_round_trip():
    for s in ("t", "t-1", "2*t-1", "t^3-2", "-t^2+3*t-5", "7"):
        h = parse_intpoly(s)
        assert parse_intpoly(format_intpoly(h)) == h


@given(small_polys, small_polys)
@settings(max_examples=150, deadline=None)
def test_resultant_matches_sylvester(a, b):
    assert resultant(a, b) == resultant_sylvester(a, b)


@given(small_polys, small_polys, small_polys)
@settings(max_examples=80, deadline=None)
def test_resultant_multiplicative(a, b, c):
    # Res(ab, c) = Res(a,c) Res(b,c)
    assert resultant(a * b, c) == resultant(a, c) * resultant(b, c)


def test_resultant_shared_root_vanishes():
    a = parse_intpoly("t-3") * parse_intpoly("t+1")
    b = parse_intpoly("t-3") * parse_intpoly("t^2+1")
    assert resultant(a, b) == 0


def test_discriminant_fixtures():
    assert discriminant(parse_intpoly("t^2+1")) == -4
    assert discriminant(parse_intpoly("t^2-5")) == 20
    assert discriminant(parse_intpoly("t^3-2")) == -108


def test_monicize_preserves_roots():
    # lc^(d-1) h(t/lc) is monic with the roots scaled by lc
    h = parse_intpoly("2*t^2 - t - 6")  # roots 2, -3/2
    m = h.monicize()
    assert m.lc == 1
    assert m.evaluate(4) == 0  # 2*2
    assert m.evaluate(-3) == 0  # 2*(-3/2)


def test_reverse_and_scale():
    h = parse_intpoly("2*t^3 + 3*t + 5")
    assert h.reverse() == parse_intpoly("5*t^3 + 3*t^2 + 2")
    # scale_arg(c) = c^deg * h(t/c)
    assert h.scale_arg(2) == parse_intpoly("2*t^3 + 12*t + 40")
    assert h.shift(1) == parse_intpoly("2*t^3+6*t^2+9*t+10")


def test_content_primitive():
    h = parse_intpoly("6*t^2 - 4*t + 2")
    c, prim = h.content_primitive()
    assert c == 2 and prim == parse_intpoly("3*t^2 - 2*t + 1")
    assert parse_intpoly("-4*t").content_primitive()[0] == -4


@given(small_polys, small_polys)
@settings(max_examples=100, deadline=None)
def test_gcd_divides_both(a, b):
    d = gcd_int(a, b)
    assert divides(d, a) and divides(d, b)


def test_squarefree_part():
    h = parse_intpoly("t-1") ** 3 * parse_intpoly("t^2+1")
    sf = squarefree_part(h)
    assert divides(parse_intpoly("t-1"), sf)
    assert divides(parse_intpoly("t^2+1"), sf)
    assert not divides(parse_intpoly("t-1") ** 2, sf)


def test_rational_roots():
    h = parse_intpoly("2*t-1") * parse_intpoly("t+3") * parse_intpoly("t^2+1")
    assert set(rational_roots(h)) == {Fraction(1, 2), Fraction(-3)}


def test_spot_check_irreducible():
    for s in ("t", "t-5", "t^2+1", "t^2-2", "t^3-2", "2*t-1", "t^4+1"):
        assert spot_check_irreducible(parse_intpoly(s))
    for s in ("t^2-1", "t^2+3*t+2", "t^3-t", "4*t^2-1"):
        assert not spot_check_irreducible(parse_intpoly(s))
    # irreducibility is judged on the primitive part; content is the unit's job
    assert spot_check_irreducible(parse_intpoly("2*t^2+2"))


def test_zero_poly_guard():
    with pytest.raises(ZeroPolynomial):
        IntPoly(()).monicize()
