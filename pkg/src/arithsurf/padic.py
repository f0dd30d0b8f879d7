"""p-adic polynomial factorization at desk scale.

Supported inputs: monic h in Z[t].  Strategy ladder:

  (a) reduction squarefree mod p -> full Hensel lift of the mod-p
      factorization, every factor unramified-certified (e = 1);
  (b) otherwise split into clusters along the irreducible factors of the
      reduction and handle each cluster:
        * multiplicity 1          -> unramified factor as in (a),
        * degree 2                -> explicit quadratic analysis via the
                                     p-adic square criterion on the
                                     discriminant (split / inert / ramified),
        * degree >= 3 over a linear residue -> Eisenstein-after-shift
                                     certificate (totally ramified) or bust.

Anything else raises UnsupportedFactorization; general Montes/Round-4
machinery is deliberately out of scope.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InsufficientPrecision,
    UnsupportedFactorization,
    ZeroPolynomial,
)
from .intpoly import IntPoly
from .modp import (
    ModPPoly,
    factor_mod_p,
    gcd_modp,
    one_poly,
)

DEFAULT_PRECISION = 20
PRECISION_CAP = 1280


def vp(n, p):
    """p-adic valuation of a nonzero integer (or Fraction)."""
    if isinstance(n, Fraction):
        return vp(n.numerator, p) - vp(n.denominator, p)
    if n == 0:
        raise ZeroPolynomial("valuation of zero")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass(frozen=True)
class PadicPoly:
    """Monic polynomial with coefficients known modulo p^N."""

    p: int
    N: int
    coeffs: tuple  # low-to-high, each in [0, p^N)

    def __post_init__(self):
        q = self.p**self.N
        assert self.coeffs and self.coeffs[-1] % q != 0
        assert all(0 <= c < q for c in self.coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def to_intpoly(self):
        return IntPoly(self.coeffs)

    def reduce_mod_p(self):
        return ModPPoly(self.p, self.coeffs)

    def at_precision(self, M):
        """Forget down to precision M <= N."""
        assert M <= self.N
        q = self.p**M
        return PadicPoly(self.p, M, tuple(c % q for c in self.coeffs))

    def __str__(self):
        return f"{self.to_intpoly()} (mod {self.p}^{self.N})"


@dataclass(frozen=True)
class PadicFactor:
    poly: PadicPoly
    e: int  # ramification index
    f: int  # residue degree
    residue: ModPPoly  # irreducible pi with poly mod p = pi^e
    exact: bool  # True when poly's integer lift is an exact divisor (= whole h)


@dataclass(frozen=True)
class PadicFactorization:
    h: IntPoly
    p: int
    N: int  # smallest per-factor precision
    factors: tuple  # of PadicFactor

    def __post_init__(self):
        assert sum(f.e * f.f for f in self.factors) == self.h.degree


# -- modular polynomial helpers (coefficient lists mod m) -------------------


def _trim(cs):
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _mul_mod(a, b, m):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % m
    return _trim(out)


def _add_mod(a, b, m):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % m for i in range(n)]
    return _trim(out)


def _sub_mod(a, b, m):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % m for i in range(n)]
    return _trim(out)


def _divmod_monic(a, b, m):
    """Divide by a monic b, coefficients mod m."""
    assert b and b[-1] == 1
    rem = [c % m for c in a]
    d = len(b) - 1
    quo = [0] * max(0, len(rem) - d)
    for k in range(len(rem) - d - 1, -1, -1):
        q = rem[k + d] % m
        if q:
            quo[k] = q
            for i, bc in enumerate(b):
                rem[k + i] = (rem[k + i] - q * bc) % m
    return _trim(quo), _trim(rem[:d])


def hensel_lift_pair(f, g0, h0, a0, b0, p, target_N):
    """Quadratic Hensel: from f = g0*h0 and a0*g0 + b0*h0 = 1 (mod p),
    lift to f = g*h (mod p^target_N) with g, h monic.  All inputs are
    coefficient lists; f has integer coefficients, g0, h0, a0, b0 mod p.
    """
    k = 1
    g, h, a, b = list(g0), list(h0), list(a0), list(b0)
    while k < target_N:
        k = min(2 * k, target_N)
        m = p**k
        fk = [c % m for c in f]
        e = _sub_mod(fk, _mul_mod(g, h, m), m)
        # delta_g = (b*e) mod g ; delta_h = a*e + (b*e div g)*h
        q, r = _divmod_monic(_mul_mod(b, e, m), g, m)
        g_new = _add_mod(g, r, m)
        dh = _add_mod(_mul_mod(a, e, m), _mul_mod(q, h, m), m)
        h_new = _add_mod(h, dh, m)
        assert _sub_mod(fk, _mul_mod(g_new, h_new, m), m) == []
        g, h = g_new, h_new
        # refresh Bezout: (a, b) <- (a, b) * (1 + r) with r = 1 - a g - b h,
        # then reduce a mod h to control degrees.
        r1 = _sub_mod([1], _add_mod(_mul_mod(a, g, m), _mul_mod(b, h, m), m), m)
        one_plus = _add_mod([1], r1, m)
        a = _mul_mod(a, one_plus, m)
        b = _mul_mod(b, one_plus, m)
        qa, ra = _divmod_monic(a, h, m)
        a = ra
        b = _add_mod(b, _mul_mod(qa, g, m), m)
        assert _sub_mod([1], _add_mod(_mul_mod(a, g, m), _mul_mod(b, h, m), m), m) == []
    return g, h


def _bezout_modp(g, h, p):
    """a, b with a*g + b*h = 1 in F_p[t] for coprime g, h."""
    G = ModPPoly(p, g)
    H = ModPPoly(p, h)
    r0, r1 = G, H
    s0, s1 = one_poly(p), ModPPoly(p)
    t0, t1 = ModPPoly(p), one_poly(p)
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    assert r0.degree == 0, "factors not coprime"
    inv = pow(r0.lc, -1, p)
    return list((s0 * inv).coeffs), list((t0 * inv).coeffs)


def hensel_lift_list(h, parts, p, N):
    """Lift pairwise-coprime monic parts of h mod p to factors mod p^N.

    parts: list of monic ModPPoly with product = h mod p.  Returns
    coefficient lists mod p^N in the same order.
    """
    f = list(h.coeffs)
    if len(parts) == 1:
        m = p**N
        return [[c % m for c in f]]
    first = list(parts[0].coeffs)
    rest = parts[1]
    for q in parts[2:]:
        rest = rest * q
    a, b = _bezout_modp(first, list(rest.coeffs), p)
    g_lift, h_lift = hensel_lift_pair(f, first, list(rest.coeffs), a, b, p, N)
    out = [g_lift]
    # recurse on the cofactor, which is h_lift as an integer-coefficient poly
    sub = hensel_lift_list(IntPoly(h_lift), parts[1:], p, N)
    out.extend(sub)
    return out


# -- p-adic square roots ----------------------------------------------------


def _sqrt_mod_p(a, p):
    """Tonelli-Shanks square root of a QR a mod odd prime p."""
    a %= p
    if a == 0:
        return 0
    assert pow(a, (p - 1) // 2, p) == 1, "not a quadratic residue"
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


def padic_unit_sqrt(u, p, N):
    """Square root of a p-adic unit square u, modulo p^N.

    p odd: u must be a QR mod p.  p = 2: u must be 1 mod 8 (then N >= 3).
    """
    m = p**N
    u %= m
    if p != 2:
        s = _sqrt_mod_p(u, p)
        k = 1
        while k < N:
            k = min(2 * k, N)
            mm = p**k
            s = (s + u * pow(s, -1, mm)) % mm * pow(2, -1, mm) % mm
        assert s * s % m == u
        return s
    assert u % 8 == 1, "2-adic square must be 1 mod 8"
    s = 1
    for k in range(3, N):
        # invariant: s*s = u mod 2^k
        if (s * s - u) % (1 << (k + 1)):
            s += 1 << (k - 1)
        assert (s * s - u) % (1 << (k + 1)) == 0
    s %= m
    assert s * s % m == u % m
    return s


def padic_square_class(d, p, N):
    """Classify nonzero d mod p^N: ('square', v) / ('nonsquare_unramified', v)
    / ('ramified', v) for the quadratic extension Q_p(sqrt(d)).

    Raises InsufficientPrecision when d = 0 mod p^(N - guard): the valuation
    is then not certified by the available digits.
    """
    guard = 3 if p == 2 else 1
    if d % p ** max(N - guard, 1) == 0:
        raise InsufficientPrecision(f"discriminant valuation >= {N - guard} at precision {N}")
    v = vp(d, p)
    u = d // p**v
    if v % 2 == 1:
        return "ramified", v
    if p == 2:
        r = u % 8
        if r == 1:
            return "square", v
        if r == 5:
            return "nonsquare_unramified", v
        return "ramified", v
    if pow(u % p, (p - 1) // 2, p) == 1:
        return "square", v
    return "nonsquare_unramified", v


def newton_slopes(h, p):
    """Lower Newton polygon of h w.r.t. p: list of (slope, horizontal length).

    Vertices run from the lowest-degree nonzero coefficient to the leading
    one; slopes are Fractions, increasing.
    """
    pts = [(i, vp(c, p)) for i, c in enumerate(h.coeffs) if c != 0]
    hull = [pts[0]]
    for pt in pts[1:]:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop hull[-1] if it lies above the segment hull[-2] -> pt
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    out = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        out.append((Fraction(y2 - y1, x2 - x1), x2 - x1))
    return out


# -- the factorization entry point ------------------------------------------


def padic_factor(h, p, N=DEFAULT_PRECISION, seed=0):
    """Factor monic squarefree-over-Q h into irreducible factors over Z_p,
    each with certified (e, f), to precision at least p^N per factor.

    Raises UnsupportedFactorization for clusters outside the supported
    class and InsufficientPrecision when N does not determine an answer.
    """
    if h.is_zero:
        raise ZeroPolynomial("cannot factor zero")
    assert h.lc == 1, "padic_factor requires monic input"
    unit, red_factors = factor_mod_p(h, p, seed=seed)
    assert unit == 1
    factors = []
    if all(e == 1 for _, e in red_factors):
        # (a) squarefree reduction: every factor unramified.
        parts = [pi for pi, _ in red_factors]
        lifted = hensel_lift_list(h, parts, p, N)
        for pi, cs in zip(parts, lifted):
            poly = PadicPoly(p, N, tuple(cs))
            factors.append(
                PadicFactor(poly, 1, pi.degree, pi, exact=(len(parts) == 1))
            )
        return PadicFactorization(h, p, N, tuple(factors))

    # (b) cluster per irreducible pi.
    clusters = []
    for pi, e in red_factors:
        cl = one_poly(p)
        for _ in range(e):
            cl = cl * pi
        clusters.append((pi, e, cl))
    lifted = hensel_lift_list(h, [cl for _, _, cl in clusters], p, N)
    single = len(clusters) == 1
    min_prec = N
    for (pi, e, _), cs in zip(clusters, lifted):
        if single:
            cs = list(h.coeffs)  # the cluster is all of h: exact coefficients
        cluster_poly = IntPoly(cs)
        if e == 1:
            poly = PadicPoly(p, N, tuple(c % p**N for c in cs))
            factors.append(PadicFactor(poly, 1, pi.degree, pi, exact=single))
            continue
        D = e * pi.degree
        if D == 2:
            sub, prec = _quadratic_cluster(cluster_poly, pi, p, N, exact=single)
            factors.extend(sub)
            min_prec = min(min_prec, prec)
            continue
        if pi.degree == 1:
            fac = _eisenstein_cluster(cluster_poly, pi, p, N, exact=single)
            if fac is not None:
                factors.append(fac)
                continue
        raise UnsupportedFactorization(
            f"cluster {pi.to_intpoly()}^{e} of degree {D} at p={p} is outside "
            "the supported class (no Montes/Round-4 ladder)"
        )
    factors.sort(key=lambda f: (f.residue.degree, f.residue.coeffs, f.e))
    return PadicFactorization(h, p, min_prec, tuple(factors))


def _quadratic_cluster(H, pi, p, N, exact):
    """Monic quadratic H (coefficients mod p^N, exact if flagged) whose
    reduction is pi^2.  Returns ([PadicFactor...], effective_precision)."""
    m = p**N
    b, c = H[1], H[0]
    disc = (b * b - 4 * c) % m
    if disc == 0:
        # True disc is nonzero (h squarefree over Q), so digits ran out.
        raise InsufficientPrecision(f"quadratic discriminant vanishes mod {p}^{N}")
    kind, v = padic_square_class(disc, p, N)
    q = p**N
    if kind == "square":
        k = v // 2
        u = (disc // p**v) % q
        s = padic_unit_sqrt(u, p, N) * p**k
        # roots (-b +- s) / 2; for p = 2 the division costs one digit.
        prec = N - k - (1 if p == 2 else 0)
        if prec < 2:
            raise InsufficientPrecision(f"split quadratic needs more than {N} digits")
        mm = p**prec
        if p == 2:
            assert (-b + s) % 2 == 0
            r1 = ((-b + s) // 2) % mm
            r2 = ((-b - s) // 2) % mm
        else:
            inv2 = pow(2, -1, mm)
            r1 = (-b + s) * inv2 % mm
            r2 = (-b - s) * inv2 % mm
        out = []
        for r in sorted((r1, r2)):
            poly = PadicPoly(p, prec, ((-r) % mm, 1))
            out.append(PadicFactor(poly, 1, 1, pi, exact=False))
        return out, prec
    poly = PadicPoly(p, N, tuple(x % q for x in (c, b, 1)))
    if kind == "nonsquare_unramified":
        return [PadicFactor(poly, 1, 2, pi, exact=exact)], N
    return [PadicFactor(poly, 2, 1, pi, exact=exact)], N


def _eisenstein_cluster(H, pi, p, N, exact):
    """Eisenstein-after-shift certificate for a cluster over a linear residue.

    Returns a totally ramified PadicFactor, or None when the certificate
    does not apply (caller then reports UnsupportedFactorization).
    """
    assert pi.degree == 1
    r = (-pi[0]) % p  # the residue root
    m = p**N
    shifted = IntPoly([c % m for c in H.coeffs]).shift(r)
    cs = [c % m for c in shifted.coeffs]
    if any(c % p for c in cs[:-1]):
        return None
    if cs[0] % p**2 == 0:
        return None
    # Eisenstein at p: irreducible, totally ramified with e = deg, f = 1.
    poly = PadicPoly(p, N, tuple(c % m for c in H.coeffs))
    return PadicFactor(poly, H.degree, 1, pi, exact=exact)


def dedekind_p_maximal(h, p, seed=0):
    """Dedekind's criterion: is Z[t]/(h) maximal at p?  h monic irreducible."""
    assert h.lc == 1, "Dedekind criterion requires monic input"
    _, fs = factor_mod_p(h, p, seed=seed)
    gbar = one_poly(p)
    hstar_bar = one_poly(p)
    for pi, e in fs:
        gbar = gbar * pi
        for _ in range(e - 1):
            hstar_bar = hstar_bar * pi
    g_lift = gbar.to_intpoly()
    hstar_lift = hstar_bar.to_intpoly()
    diff = g_lift * hstar_lift - h
    assert all(c % p == 0 for c in diff.coeffs)
    F = IntPoly([c // p for c in diff.coeffs])
    Fbar = ModPPoly.from_intpoly(F, p)
    if Fbar.is_zero:
        common = gcd_modp(gbar, hstar_bar)
    else:
        common = gcd_modp(Fbar, gcd_modp(gbar, hstar_bar))
    return common.degree == 0
