"""Integer primality and factorization at desk scale.

Trial division up to a fixed bound, then Brent's variant of Pollard rho
with a step budget.  Primality: deterministic Miller-Rabin below 2^64
(known witness set), 64 pseudorandom rounds above.
"""

import math
import random

from .errors import FactorizationTimeout

TRIAL_BOUND = 10**6

# Witnesses making Miller-Rabin deterministic for n < 2^64 (Sinclair set).
_MR_WITNESSES_64 = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)


def _miller_rabin_round(n, a):
    """One Miller-Rabin round; True means "probably prime"."""
    if a % n == 0:
        return True
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    if n < 2**64:
        return all(_miller_rabin_round(n, a) for a in _MR_WITNESSES_64)
    rng = random.Random(0xC0FFEE ^ n)
    return all(_miller_rabin_round(n, rng.randrange(2, n - 1)) for _ in range(64))


def _brent_rho(n, rng, budget):
    """One Brent-cycle attempt at a nontrivial factor of odd composite n.

    Returns a factor or None if the budget ran out.
    """
    if n % 2 == 0:
        return 2
    y = rng.randrange(1, n)
    c = rng.randrange(1, n)
    m = 128
    g = r = q = 1
    steps = 0
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
            steps += m
            if steps > budget:
                return None
        r *= 2
    if g == n:
        # Backtrack one step at a time.
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return g if g != n else None


def factor_integer(n, budget=2_000_000):
    """Factor a nonzero integer; returns (sign, [(prime, exponent), ...]).

    The prime list is sorted; 1 factors as (1, []).  Raises
    FactorizationTimeout when rho exceeds its step budget.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    sign = -1 if n < 0 else 1
    n = abs(n)
    factors = {}
    for p in range(2, TRIAL_BOUND + 1):
        if p * p > n:
            break
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    rng = random.Random(0x5EED)
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = None
        for _ in range(32):
            d = _brent_rho(m, rng, budget)
            if d is not None and d not in (1, m):
                break
            d = None
        if d is None:
            raise FactorizationTimeout(f"rho budget exhausted on {m}")
        stack.append(d)
        stack.append(m // d)
    return sign, sorted(factors.items())
