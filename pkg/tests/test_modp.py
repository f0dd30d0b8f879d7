import random

from hypothesis import given, settings, strategies as st

from arithsurf.intpoly import parse_intpoly
from arithsurf.modp import (
    ModPPoly,
    factor_mod_p,
    gcd_modp,
    is_irreducible_modp,
    multiplicity,
    random_monic_irreducible,
    x_poly,
)

PRIMES = (2, 3, 5, 7, 13, 101)


def rand_poly(rng, p, d):
    return ModPPoly(p, [rng.randrange(p) for _ in range(d)] + [rng.randrange(1, p)])


@given(st.integers(0, 5), st.data())
@settings(max_examples=150, deadline=None)
def test_factor_round_trip(pi, data):
    p = PRIMES[pi]
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    h = rand_poly(rng, p, rng.randint(1, 6))
    unit, fac = factor_mod_p(h, p, seed=7)
    prod = ModPPoly(p, [unit])
    for pi_poly, e in fac:
        assert pi_poly.lc == 1
        assert is_irreducible_modp(pi_poly)
        for _ in range(e):
            prod = prod * pi_poly
    assert prod == h


def test_factor_fixture_split():
    # t^2+1 mod 5 = (t+2)(t+3)
    h = ModPPoly.from_intpoly(parse_intpoly("t^2+1"), 5)
    _, fac = factor_mod_p(h, 5, seed=0)
    assert sorted(str(f.to_intpoly()) for f, _ in fac) == ["t+2", "t+3"]
    assert all(e == 1 for _, e in fac)


def test_factor_fixture_inert():
    h = ModPPoly.from_intpoly(parse_intpoly("t^2+1"), 3)
    _, fac = factor_mod_p(h, 3, seed=0)
    assert len(fac) == 1 and fac[0][1] == 1
    assert fac[0][0].degree == 2


def test_factor_fixture_ramified():
    # t^2+1 = (t+1)^2 mod 2
    h = ModPPoly.from_intpoly(parse_intpoly("t^2+1"), 2)
    _, fac = factor_mod_p(h, 2, seed=0)
    assert len(fac) == 1
    assert str(fac[0][0].to_intpoly()) == "t+1" and fac[0][1] == 2


def test_factor_seed_determinism():
    h = ModPPoly.from_intpoly(parse_intpoly("t^6+t^3+2*t+5"), 13)
    a = factor_mod_p(h, 13, seed=123)
    b = factor_mod_p(h, 13, seed=123)
    assert a == b


def test_multiplicity():
    p = 5
    pi = ModPPoly(p, [2, 1])  # t+2
    h = pi * pi * ModPPoly(p, [3, 1])
    assert multiplicity(h, pi) == 2
    assert multiplicity(h, ModPPoly(p, [3, 1])) == 1
    assert multiplicity(h, ModPPoly(p, [1, 1])) == 0


def test_random_monic_irreducible():
    rng = random.Random(9)
    for p in (2, 5, 13):
        for d in (1, 2, 3):
            f = random_monic_irreducible(p, d, rng)
            assert f.degree == d and f.lc == 1 and is_irreducible_modp(f)


@given(st.integers(0, 5), st.data())
@settings(max_examples=100, deadline=None)
def test_gcd_divides(pi, data):
    p = PRIMES[pi]
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    a, b = rand_poly(rng, p, rng.randint(1, 5)), rand_poly(rng, p, rng.randint(1, 5))
    d = gcd_modp(a, b)
    assert (a % d).is_zero and (b % d).is_zero


def test_x_poly_and_eval():
    x = x_poly(7)
    assert x.evaluate(3) == 3
    assert ((x * x + ModPPoly(7, [1])).evaluate(2)) == 5
