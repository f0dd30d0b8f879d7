"""Exact univariate integer polynomials.

Coefficients are stored low-to-high in a tuple with no trailing zeros;
the zero polynomial is the empty tuple.  The variable prints as `t`.
All arithmetic is exact over Z; division helpers that need Q return
fractions.Fraction coefficients.
"""

import math
import re
from fractions import Fraction

from .errors import ParseError, ZeroPolynomial
from .primes import factor_integer


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficients required, got {c!r}")
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *_):
        raise AttributeError("IntPoly is immutable")

    # -- structure -------------------------------------------------------

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        if self.is_zero:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly([self[i] + other[i] for i in range(n)])

    def __sub__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly([self[i] - other[i] for i in range(n)])

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        other = _coerce(other)
        if self.is_zero or other.is_zero:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__
    __radd__ = __add__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of IntPoly")
        out, base = IntPoly([1]), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def evaluate(self, x):
        """Horner evaluation; works for int, Fraction, mpf, mpc inputs."""
        acc = 0 * x  # zero of the right type
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self):
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    # -- integer-polynomial specifics -------------------------------------

    def content_primitive(self):
        """Return (content, primitive) with primitive's leading coefficient > 0.

        content * primitive == self; the content carries the sign.
        """
        if self.is_zero:
            raise ZeroPolynomial("content of zero polynomial")
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, abs(c))
        if self.lc < 0:
            g = -g
        return g, IntPoly([c // g for c in self.coeffs])

    def primitive_part(self):
        return self.content_primitive()[1]

    def reverse(self):
        """t^deg * self(1/t); strips any factor t first is NOT done here,
        so the constant coefficient must be nonzero to preserve the degree."""
        return IntPoly(tuple(reversed(self.coeffs)))

    def shift(self, a):
        """self(t + a) for integer a."""
        out = IntPoly()
        lin = IntPoly([a, 1])
        for c in reversed(self.coeffs):
            out = out * lin + IntPoly([c])
        return out

    def scale_arg(self, c):
        """c^deg * self(t/c): coefficient a_i becomes a_i * c^(deg-i)."""
        d = self.degree
        return IntPoly([a * c ** (d - i) for i, a in enumerate(self.coeffs)])

    def monicize(self):
        """lc^(deg-1) * self(t/lc): the classical monic normalization.

        The result is monic with integer coefficients and defines the same
        number field; the root map is theta -> lc * theta.
        """
        d = self.degree
        c = self.lc
        return IntPoly([a * c ** (d - 1 - i) for i, a in enumerate(self.coeffs[:-1])] + [1])

    def __repr__(self):
        return f"IntPoly({format_intpoly(self)!r})"

    def __str__(self):
        return format_intpoly(self)


def _coerce(x):
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly([x])
    raise TypeError(f"cannot coerce {x!r} to IntPoly")


T = IntPoly([0, 1])
ONE = IntPoly([1])


def divmod_exact(a, b):
    """Division in Q[t] returning Fraction-coefficient (quotient, remainder)."""
    if b.is_zero:
        raise ZeroPolynomial("division by zero polynomial")
    rem = [Fraction(c) for c in a.coeffs]
    quo = [Fraction(0)] * max(0, len(rem) - len(b.coeffs) + 1)
    blc = Fraction(b.lc)
    db = b.degree
    while len(rem) - 1 >= db and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < db:
            break
        k = len(rem) - 1 - db
        q = rem[-1] / blc
        quo[k] = q
        for i, bc in enumerate(b.coeffs):
            rem[k + i] -= q * bc
        rem.pop()
    return quo, rem


def divides(b, a):
    """True when b | a in Q[t] (equivalently in Z[t] up to content)."""
    _, rem = divmod_exact(a, b)
    return not any(rem)


def pseudo_rem(a, b):
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a modulo b, in Z[t]."""
    if b.is_zero:
        raise ZeroPolynomial("pseudo-division by zero")
    delta = a.degree - b.degree
    if delta < 0:
        return a
    r = list(a.coeffs)
    blc = b.lc
    d = b.degree
    for k in range(delta, -1, -1):
        top = r[k + d]
        for i in range(len(r)):
            r[i] *= blc
        # r <- blc*r - top*(t^k * b); kills the coefficient at k+d exactly.
        for i, bc in enumerate(b.coeffs):
            r[k + i] -= top * bc
        assert r[k + d] == 0
    return IntPoly(r[:d])


def resultant(a, b):
    """Res(a, b) = lc(a)^deg(b) * prod b(alpha_i) over the roots of a.

    Subresultant PRS (Cohen, Alg. 3.3.7); exact over Z.
    """
    if a.is_zero or b.is_zero:
        raise ZeroPolynomial("resultant of zero polynomial")
    s = 1
    if a.degree < b.degree:
        if (a.degree & 1) and (b.degree & 1):
            s = -s
        a, b = b, a
    if b.degree == 0:
        return s * b.lc**a.degree
    ca, a1 = a.content_primitive()
    cb, b1 = b.content_primitive()
    t = ca**b.degree * cb**a.degree
    g = h = 1
    A, B = a1, b1
    while True:
        dA, dB = A.degree, B.degree
        delta = dA - dB
        if (dA & 1) and (dB & 1):
            s = -s
        R = pseudo_rem(A, B)
        A = B
        if R.is_zero:
            return 0
        div = g * h**delta
        assert all(c % div == 0 for c in R.coeffs)
        B = IntPoly([c // div for c in R.coeffs])
        g = A.lc
        if delta == 1:
            h = g
        elif delta > 1:
            num = g**delta
            den = h ** (delta - 1)
            assert num % den == 0
            h = num // den
        if B.degree == 0:
            break
    # Closing step: Res = s * t * lc(B)^deg(A) / h^(deg(A) - 1).
    num = B.lc ** A.degree
    den = h ** (A.degree - 1) if A.degree >= 1 else 1
    assert den != 0 and num % den == 0, "subresultant bookkeeping broke"
    return s * t * (num // den)


def sylvester_matrix(a, b):
    """Sylvester matrix of (a, b) as a list of rows (ints)."""
    m, n = a.degree, b.degree
    if m < 0 or n < 0:
        raise ZeroPolynomial("sylvester matrix needs nonzero polynomials")
    size = m + n
    rows = []
    ac = list(reversed(a.coeffs))
    bc = list(reversed(b.coeffs))
    for i in range(n):
        rows.append([0] * i + ac + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + bc + [0] * (size - n - 1 - i))
    return rows


def det_bareiss(rows):
    """Exact integer determinant via Bareiss fraction-free elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def resultant_sylvester(a, b):
    """Resultant as the Sylvester determinant; the independent slow route."""
    if a.is_zero or b.is_zero:
        raise ZeroPolynomial("resultant of zero polynomial")
    if a.degree == 0:
        return a.lc**b.degree
    if b.degree == 0:
        return b.lc**a.degree
    return det_bareiss(sylvester_matrix(a, b))


def discriminant(h):
    if h.degree < 1:
        raise ZeroPolynomial("discriminant needs degree >= 1")
    d = h.degree
    r = resultant(h, h.derivative())
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    q, rem = divmod(sign * r, h.lc)
    assert rem == 0
    return q


def gcd_int(a, b):
    """Polynomial gcd over Z (primitive, positive leading coefficient)."""
    if a.is_zero:
        return b if b.is_zero else b.primitive_part()
    if b.is_zero:
        return a.primitive_part()
    ca, A = a.content_primitive()
    cb, B = b.content_primitive()
    c = math.gcd(abs(ca), abs(cb))
    if A.degree < B.degree:
        A, B = B, A
    while not B.is_zero:
        R = pseudo_rem(A, B)
        A = B
        B = R.primitive_part() if not R.is_zero else R
    return c * A


def squarefree_part(h):
    """h / gcd(h, h'), primitive with positive leading coefficient."""
    g = gcd_int(h, h.derivative())
    quo, rem = divmod_exact(h, g)
    assert not any(rem)
    den = 1
    for q in quo:
        den = den * q.denominator // math.gcd(den, q.denominator)
    return IntPoly([int(q * den) for q in quo]).primitive_part()


def _divisors(n):
    sign, fs = factor_integer(abs(n))
    divs = [1]
    for p, e in fs:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def rational_roots(h):
    """All rational roots of h (as Fractions), via the rational root theorem."""
    if h.is_zero:
        raise ZeroPolynomial("roots of zero polynomial")
    roots = []
    k = 0
    while h[k] == 0:
        k += 1
    if k > 0:
        roots.append(Fraction(0))
        h = IntPoly(h.coeffs[k:])
    if h.degree == 0:
        return roots
    for p in _divisors(h.coeffs[0]):
        for q in _divisors(h.lc):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand not in roots and h.evaluate(cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def spot_check_irreducible(h):
    """Irreducibility over Q for deg <= 4: True/False; None when unchecked.

    deg 1: always irreducible.  deg 2, 3: irreducible iff no rational root.
    deg 4: rational-root test plus a bounded search for quadratic factors.
    """
    h = h.primitive_part()
    d = h.degree
    if d <= 0:
        return False
    if d == 1:
        return True
    if d > 4:
        return None
    if rational_roots(h):
        return False
    if d <= 3:
        return True
    # Degree 4: try h = (a t^2 + b t + c)(e t^2 + f t + g) over Z.
    h0, h1, h2, h3, h4 = (h[i] for i in range(5))
    for a in _divisors(h4):
        e = h4 // a
        for c in _divisors(h0):
            for c_signed in (c, -c):
                if h0 % c_signed != 0:
                    continue
                g = h0 // c_signed
                # unknowns b, f:  b*e + f*a = h3 ; b*g + f*c_signed = h1
                det = e * c_signed - a * g
                if det != 0:
                    b_num = h3 * c_signed - a * h1
                    f_num = e * h1 - h3 * g
                    if b_num % det or f_num % det:
                        continue
                    b, f = b_num // det, f_num // det
                    if a * g + b * f + c_signed * e == h2:
                        return False
                else:
                    bound = abs(h2) + abs(h3) + abs(h1) + abs(a * g) + abs(c_signed * e) + 1
                    for b in range(-bound, bound + 1):
                        if e and (h3 - b * e) % a == 0:
                            f = (h3 - b * e) // a
                            if (
                                b * g + f * c_signed == h1
                                and a * g + b * f + c_signed * e == h2
                            ):
                                return False
    return True


# -- text form ------------------------------------------------------------

_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-]?)\s*(?:"
    r"(?P<coef>\d+)\s*\*?\s*(?P<var1>t(?:\^(?P<exp1>-?\d+))?)?"
    r"|(?P<var2>t(?:\^(?P<exp2>-?\d+))?)"
    r")\s*"
)


def parse_intpoly(text):
    """Parse integer polynomials like 't^3-2', '2t-1', '-t^2 + 3*t + 1'."""
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial", 0)
    coeffs = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ParseError(f"cannot read polynomial term in {text!r}", pos)
        sign = m.group("sign")
        if not first and sign == "":
            raise ParseError(f"missing +/- between terms in {text!r}", pos)
        sgn = -1 if sign == "-" else 1
        if m.group("coef") is not None:
            coef = sgn * int(m.group("coef"))
            var = m.group("var1")
            exp = m.group("exp1")
        elif m.group("var2") is not None:
            coef = sgn
            var = m.group("var2")
            exp = m.group("exp2")
        else:
            raise ParseError(f"empty term in {text!r}", pos)
        if var is None:
            e = 0
        elif exp is None:
            e = 1
        else:
            e = int(exp)
            if e < 0:
                raise ParseError("negative exponents are not allowed in IntPoly", pos)
        coeffs[e] = coeffs.get(e, 0) + coef
        pos = m.end()
        first = False
    deg = max(coeffs) if coeffs else 0
    return IntPoly([coeffs.get(i, 0) for i in range(deg + 1)])


def format_intpoly(h):
    if h.is_zero:
        return "0"
    parts = []
    for i in range(h.degree, -1, -1):
        c = h[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        elif i == 1:
            body = "t" if mag == 1 else f"{mag}t"
        else:
            body = f"t^{i}" if mag == 1 else f"{mag}t^{i}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+{body}" if c > 0 else f"-{body}")
    return "".join(parts)
