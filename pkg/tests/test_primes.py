import pytest
from hypothesis import given, settings, strategies as st

from arithsurf.primes import factor_integer, is_prime


def test_is_prime_small_table():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    for n in range(-2, 50):
        assert is_prime(n) == (n in primes)


def test_is_prime_large():
    assert is_prime(2**61 - 1)  # Mersenne
    assert not is_prime(2**61 + 1)
    assert is_prime(10**18 + 9)
    assert not is_prime(3215031751)  # strong pseudoprime to bases 2,3,5,7


@given(st.integers(min_value=2, max_value=10**9))
@settings(max_examples=200, deadline=None)
def test_factor_round_trip(n):
    sign, fac = factor_integer(n)
    assert sign == 1
    prod = 1
    for p, e in fac:
        assert is_prime(p)
        prod *= p**e
    assert prod == n
    assert fac == sorted(fac)


def test_factor_semiprime():
    p, q = 1000003, 1000033
    assert factor_integer(p * q) == (1, [(p, 1), (q, 1)])


def test_factor_sign_and_one():
    assert factor_integer(1) == (1, [])
    assert factor_integer(-12) == (-1, [(2, 2), (3, 1)])


def test_factor_rejects_zero():
    with pytest.raises(ValueError):
        factor_integer(0)
