"""Two-dimensional reciprocity symbols on curve/point flags.

For a flag (curve C, closed point x on C) the completed local ring has a
rank-2 valuation (nu1, nu2): nu1 is the order of vanishing along C, nu2
the valuation of the leading coefficient along the fiber direction at x.
The symbol of two functions is the 2x2 determinant

    nu(f, g) = nu1(f) nu2(g) - nu1(g) nu2(f),

summed over the analytic branches of C at x with weights [k_i : k(x)].

Vertical flags are exact and immediate.  Horizontal flags go through the
p-adic factorization of the (monicized) curve polynomial: each p-adic
factor is a branch, nu2 is computed from resultants against the factor's
coefficient lift, with a doubling precision ladder on top.  Degree-one
curves (including non-monic ones like 2t-1) bypass all of that with exact
rational arithmetic.
"""

from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp

from .errors import (
    EvaluationAtZero,
    InsufficientPrecision,
    UnsupportedOrder,
)
from .intpoly import IntPoly, T, resultant
from .modp import ModPPoly, multiplicity
from .padic import (
    DEFAULT_PRECISION,
    PRECISION_CAP,
    dedekind_p_maximal,
    padic_factor,
    vp,
)
from .surface import (
    HORIZONTAL,
    INFINITY_SECTION,
    VERTICAL,
    Curve,
    chart_swap,
    chart_swap_curve,
    chart_swap_point,
    horizontal_order,
    incident,
    vertical_order,
    vp_fraction,
)


def det2(a, b, c, d):
    return a * d - b * c


# -- vertical flags ----------------------------------------------------------


def rank2_vertical(f, p, point):
    """(nu1, nu2) of f at the flag (fiber over p, point).

    nu1 = v_p(unit); nu2 = order at the point of the mod-p reduction of
    p^-nu1 f.  Fiber-infinity points reduce to the affine case in the
    second chart.
    """
    if point.at_infinity:
        return rank2_vertical(chart_swap(f), p, chart_swap_point(point))
    nu1 = vertical_order(f, p)
    pi = point.residue
    nu2 = 0
    for b, e in f.factors:
        bbar = ModPPoly.from_intpoly(b, p)
        assert not bbar.is_zero, "primitive polynomial cannot vanish mod p"
        if bbar.degree >= 1:
            nu2 += e * multiplicity(bbar, pi)
    return nu1, nu2


def vertical_flag_symbol(p, point, f, g):
    a, b = rank2_vertical(f, p, point)
    c, d = rank2_vertical(g, p, point)
    return det2(a, c, b, d)


# -- horizontal flags --------------------------------------------------------


@dataclass
class BranchData:
    """One analytic branch of a horizontal curve at a closed point."""

    e: int  # ramification index of the branch field over Q_p
    f: int  # residue degree over F_p
    weight: int  # [k_branch : k(x)] = f / deg(x)
    nu2_f: int
    nu2_g: int


def _monic_point_residue(h, point):
    """The residue of a branch of monicize(h) over the given point of h.

    Under y = lc * t a point pi of h corresponds to the monic irreducible
    pi_hat(y) = cbar^deg(pi) * pi(y / cbar) mod p.  Requires p not | lc."""
    p = point.p
    cbar = h.lc % p
    assert cbar != 0
    pi = point.residue
    d = pi.degree
    coeffs = tuple(
        (pi[j] * pow(cbar, d - j, p)) % p for j in range(d + 1)
    )
    return ModPPoly(p, coeffs)


def _restriction_valuation(fn, h, factor, N):
    """Valuation on the branch field of the restriction of fn to the branch,
    with the exponent of h itself already stripped from fn.

    fn(theta) with theta a root of factor (as a factor of monicize(h)):
    for each base b, w(b(theta)) = v_p(Res(factor_lift, B)) / f
    - deg(b) * e * v_p(lc h), where B(y) = lc^deg(b) * b(y/lc).  Trusted
    only when the resultant valuation stays below the working precision N.
    """
    p = factor.poly.p
    lc = h.lc
    lift = factor.poly.to_intpoly()
    total = Fraction(factor.e) * vp_fraction(fn.unit, p)
    v_lc = vp(lc, p) if lc % p == 0 else 0
    for b, e in fn.factors:
        if b == h:
            continue
        B = b.scale_arg(lc) if lc != 1 else b
        res = resultant(lift, B)
        if res == 0 or vp(res, p) >= N:
            raise InsufficientPrecision(
                f"resultant valuation not resolved at precision {N}"
            )
        w_num = vp(res, p)
        assert w_num % factor.f == 0, "norm valuation must be divisible by f"
        total += e * (Fraction(w_num, factor.f) - b.degree * factor.e * v_lc)
    assert total.denominator == 1
    return int(total)


def _strip(fn, h):
    """Drop the h-factor from fn (returning the complementary part)."""
    from .surface import FactoredRationalFunction

    rest = tuple((b, e) for b, e in fn.factors if b != h)
    return FactoredRationalFunction(fn.unit, rest)


def _linear_flag_branch(h, point, f, g):
    """Exact branch data for deg(h) = 1: the branch field is Q_p and the
    root -h(0)/lc is rational."""
    p = point.p
    theta = Fraction(-h[0], h[1])

    def nu2(fn):
        fn0 = _strip(fn, h)
        total = vp_fraction(fn0.unit, p)
        for b, e in fn0.factors:
            val = b.evaluate(theta)
            assert val != 0, "only h vanishes at the root of h"
            total += e * vp_fraction(Fraction(val), p)
        return total

    return BranchData(e=1, f=1, weight=1, nu2_f=nu2(f), nu2_g=nu2(g))


def branch_decomposition(curve, point, f, g, start_precision=DEFAULT_PRECISION, seed=0):
    """Analytic branches of the horizontal curve at the point, with the
    nu2 valuations of f and g on each branch.

    Raises UnsupportedOrder for curves the p-adic ladder cannot certify
    (p | lc with degree >= 2, non p-maximal orders, unsupported clusters).
    """
    h = curve.h
    p = point.p
    assert incident(curve, point) and not point.at_infinity
    if h.degree == 1:
        return [_linear_flag_branch(h, point, f, g)]
    if h.lc % p == 0:
        raise UnsupportedOrder(
            f"p = {p} divides the leading coefficient of {h} (degree >= 2)"
        )
    hm = h.monicize()
    if not dedekind_p_maximal(hm, p, seed=seed):
        raise UnsupportedOrder(
            f"Z[t]/({hm}) is not maximal at {p}; branch data uncertified"
        )
    pi_hat = _monic_point_residue(h, point)
    N = start_precision
    while True:
        try:
            fac = padic_factor(hm, p, N=N, seed=seed)
            branches = []
            for factor in fac.factors:
                if factor.residue != pi_hat:
                    continue
                assert factor.f % point.degree == 0
                branches.append(
                    BranchData(
                        e=factor.e,
                        f=factor.f,
                        weight=factor.f // point.degree,
                        nu2_f=_restriction_valuation(f, h, factor, factor.poly.N),
                        nu2_g=_restriction_valuation(g, h, factor, factor.poly.N),
                    )
                )
            assert branches, "incident point must carry at least one branch"
            return branches
        except InsufficientPrecision:
            if N >= PRECISION_CAP:
                raise
            N = min(2 * N, PRECISION_CAP)


def horizontal_flag_symbol(curve, point, f, g, start_precision=DEFAULT_PRECISION, seed=0):
    """Weighted symbol sum over the branches of the horizontal curve at x."""
    if curve.kind == INFINITY_SECTION or point.at_infinity:
        return horizontal_flag_symbol(
            chart_swap_curve(curve),
            chart_swap_point(point),
            chart_swap(f),
            chart_swap(g),
            start_precision=start_precision,
            seed=seed,
        )
    nu1_f = horizontal_order(f, curve)
    nu1_g = horizontal_order(g, curve)
    total = 0
    for br in branch_decomposition(
        curve, point, f, g, start_precision=start_precision, seed=seed
    ):
        total += br.weight * det2(nu1_f, nu1_g, br.nu2_f, br.nu2_g)
    return total


def curve_point_symbol(curve, point, f, g, start_precision=DEFAULT_PRECISION, seed=0):
    """nu_{C,x}(f, g): the branch-weighted rank-2 symbol at the flag."""
    if not incident(curve, point):
        raise ValueError(f"point {point} does not lie on curve {curve}")
    if curve.kind == VERTICAL:
        return vertical_flag_symbol(curve.p, point, f, g)
    return horizontal_flag_symbol(
        curve, point, f, g, start_precision=start_precision, seed=seed
    )


# -- archimedean symbol -------------------------------------------------------


def _abs_value(fn, h, theta, prec):
    """|fn_0(theta)| with the h-part stripped, at prec working bits."""
    with mp.workprec(prec + 32):
        acc = mp.mpf(abs(fn.unit.numerator)) / abs(fn.unit.denominator)
        floor = mp.mpf(2) ** (-(prec // 2))
        for b, e in fn.factors:
            if b == h:
                continue
            val = abs(evaluate_mp(b, theta))
            if val < floor:
                raise EvaluationAtZero(
                    f"|{b}({theta})| below resolution at {prec} bits"
                )
            acc *= val**e
        return acc


def evaluate_mp(b, z):
    acc = mp.mpf(0)
    for c in reversed(b.coeffs):
        acc = acc * z + c
    return acc


def archimedean_symbol(h, theta, f, g, prec=128):
    """nu_P(f, g) = m_g log|f_1(theta)| - m_f log|g_1(theta)| at the
    archimedean place of Q[t]/(h) represented by the root theta, where
    m = order along the curve h and f_1, g_1 are the h-stripped parts."""
    m_f = f.exponent_of(h)
    m_g = g.exponent_of(h)
    with mp.workprec(prec + 32):
        out = mp.mpf(0)
        if m_g:
            out += m_g * mp.log(_abs_value(f, h, theta, prec))
        if m_f:
            out -= m_f * mp.log(_abs_value(g, h, theta, prec))
        return out
