import random
from fractions import Fraction

import pytest
from mpmath import mp

from arithsurf.errors import UnsupportedOrder
from arithsurf.intpoly import parse_intpoly
from arithsurf.surface import (
    make_function,
    parse_curve,
    parse_function,
    parse_point,
)
from arithsurf.symbols import (
    archimedean_symbol,
    branch_decomposition,
    curve_point_symbol,
    det2,
    rank2_vertical,
)

F = parse_function


def test_det2():
    assert det2(1, 0, 0, 1) == 1
    assert det2(2, 3, 4, 6) == 0
    assert det2(Fraction(1, 2), 1, 1, 4) == 1


def test_transverse_flag():
    # the standard worked pair: f = t, g = 5 at the flag (H:t, 5:t)
    assert curve_point_symbol(parse_curve("H:t"), parse_point("5:t"), F("1*(t)^1"), F("5")) == 1
    assert curve_point_symbol(parse_curve("V:5"), parse_point("5:t"), F("1*(t)^1"), F("5")) == -1


def test_rank2_vertical_values():
    pt = parse_point("5:t")
    # nu1 = v_5(unit), nu2 = order of vanishing of the residue at the point
    assert rank2_vertical(F("5"), 5, pt) == (1, 0)
    assert rank2_vertical(F("1*(t)^2"), 5, pt) == (0, 2)
    assert rank2_vertical(F("25 * (t-1)^1"), 5, pt) == (2, 0)


def test_branch_table_quadratic():
    """t^2+1 over Q_p: ramified at 2, inert at 3, split at 5 -- read off the
    branches of the curve H:t^2+1 at its points over those primes."""
    c = parse_curve("H:t^2+1")
    f, g = F("1*(t^2+1)^1"), F("1*(t-1)^1")
    table = {
        "2:t+1": [(2, 1)],
        "3:t^2+1": [(1, 2)],
        "5:t+2": [(1, 1)],
        "5:t+3": [(1, 1)],
    }
    for label, shape in table.items():
        bs = branch_decomposition(c, parse_point(label), f, g)
        assert [(b.e, b.f) for b in bs] == shape
        assert all(b.weight == 1 for b in bs)


def test_branch_eisenstein_cubic():
    bs = branch_decomposition(
        parse_curve("H:t^3-2"), parse_point("3:t+1"), F("1*(t^3-2)^1"), F("3")
    )
    assert [(b.e, b.f) for b in bs] == [(3, 1)]


def test_linear_curve_exact_path():
    # degree-1 curves go through exact rational evaluation, no p-adics
    c = parse_curve("H:2*t-1")
    assert curve_point_symbol(c, parse_point("2:inf"), F("1*(2*t-1)^1"), F("2")) == 1
    # <t - 5, 5> along H:t-5 at 5:t (theta = 5): v_5(5) pairs with nu1
    c2 = parse_curve("H:t-5")
    assert curve_point_symbol(c2, parse_point("5:t"), F("1*(t-5)^1"), F("5")) == 1


def test_symbol_additive_in_exponents():
    rng = random.Random(3)
    c = parse_curve("H:t^2+1")
    pt = parse_point("5:t+2")
    g = F("7 * (t-1)^1")
    for _ in range(20):
        e1, e2 = rng.randint(-3, 3), rng.randint(-3, 3)
        f1 = make_function(Fraction(2), [(parse_intpoly("t"), e1)] if e1 else [])
        f2 = make_function(Fraction(3), [(parse_intpoly("t"), e2)] if e2 else [])
        s1 = curve_point_symbol(c, pt, f1, g)
        s2 = curve_point_symbol(c, pt, f2, g)
        s12 = curve_point_symbol(c, pt, f1 * f2, g)
        assert s12 == s1 + s2


def test_antisymmetry_of_flag_symbol():
    c = parse_curve("H:t^2+2")
    # -2 is a square mod 11 (3^2 = 9 = -2) and a non-residue mod 5
    for label in ("2:t", "5:t^2+2", "11:t+3"):
        pt = parse_point(label)
        f = F("6 * (t)^2 * (t-1)^-1")
        g = F("15 * (t^2+2)^1")
        assert curve_point_symbol(c, pt, f, g) == -curve_point_symbol(c, pt, g, f)


def test_unsupported_order():
    # p divides the leading coefficient and the curve has degree 2
    c = parse_curve("H:2*t^2+t+1")
    with pytest.raises(UnsupportedOrder):
        branch_decomposition(c, parse_point("2:t+1"), F("1*(2*t^2+t+1)^1"), F("3"))


def test_infinity_handled_by_chart_swap():
    # the symbol at a fiber-infinity point equals the symbol of the swapped
    # data at the origin of the second chart
    c = parse_curve("H:2*t-1")
    pt = parse_point("2:inf")
    f, g = F("1*(2*t-1)^1"), F("6 * (t)^-1")
    direct = curve_point_symbol(c, pt, f, g)
    assert isinstance(direct, int)


def test_archimedean_fixture():
    with mp.workprec(128):
        v = archimedean_symbol(
            parse_intpoly("t^2+1"), mp.mpc(0, 1),
            F("1*(t^2+1)^1"), F("1*(t-1)^1"), prec=128,
        )
        want = -mp.log(mp.sqrt(2))
        assert abs(v - want) < mp.mpf(2) ** -100


def test_archimedean_closed_form_constant():
    # f = 2, g = t at theta = 0 on H:t: value log 2
    with mp.workprec(128):
        v = archimedean_symbol(parse_intpoly("t"), mp.mpf(0), F("2"), F("1*(t)^1"), prec=128)
        assert abs(v - mp.log(2)) < mp.mpf(2) ** -100
