"""The arithmetic central extension calculus on finite windows.

Everything lives inside an ambient Q^n carrying the standard inner
product (in the Laurent-window model the coordinates are t^m .. t^M and
(t^i, t^j) = delta_ij).  Lattices are Q-subspaces with a chosen basis;
for commensurable pairs the relative determinant line is

    (A|B) := wedge-top(A/(A cap B))^* tensor wedge-top(B/(A cap B)),

whose elements we store as a single coordinate relative to canonical
(rref-derived) quotient bases.  Scalars are kept in the exact form
q * sqrt(r) (rational q, positive integer r), which is closed under the
multiplications, contractions and Gram-volume square roots that occur, so
norms, discrepancies and commutator pairings all come out exact.

The group of pairs (g, a) with a a nonzero element of (A|gA) multiplies
by (g, a)(g', a') = (gg', a o g(a')) via pushforward and metrized
contraction; the commutator pairing of commuting g, h is the scalar of
the four-term chain a o g(b) o h(a^-1) o b^-1 in (A|A) = R.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp

from .errors import (
    DegeneratePosition,
    NonCommuting,
    NotExact,
    WindowTooSmall,
    ZeroPolynomial,
)
from .laurent import LaurentPoly
from .qlinalg import (
    det,
    dot,
    frac_vec,
    gram_det,
    identity_matrix,
    intersection,
    is_zero_vec,
    matmul,
    matrix_inverse,
    matvec,
    project_off,
    rank,
    rref,
    solve_coords,
    sum_space,
    vscale,
)

_SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]


# -- exact scalars q * sqrt(r) -------------------------------------------------


class QSqrt:
    """q * sqrt(r) with q rational and r a positive integer.

    r is kept square-reduced by small primes and perfect-square detection;
    equality compares q^2 r and signs, so stale square factors in r are
    harmless.  Addition is only defined within one square class.
    """

    __slots__ = ("q", "r")

    def __init__(self, q, r=1):
        q = Fraction(q)
        if isinstance(r, Fraction):
            if r.denominator != 1:
                q /= r.denominator
                r = r.numerator * r.denominator
            else:
                r = r.numerator
        if r <= 0:
            raise NotExact("sqrt of a nonpositive number")
        if q == 0:
            r = 1
        else:
            s = math.isqrt(r)
            if s * s == r:
                q *= s
                r = 1
            else:
                for p in _SMALL_PRIMES:
                    p2 = p * p
                    while r % p2 == 0:
                        r //= p2
                        q *= p
                s = math.isqrt(r)
                if s * s == r:
                    q *= s
                    r = 1
        self.q = q
        self.r = r

    @classmethod
    def sqrt(cls, x):
        """sqrt of a positive rational, exactly."""
        x = Fraction(x)
        return cls(Fraction(1, x.denominator), x.numerator * x.denominator)

    @property
    def is_zero(self):
        return self.q == 0

    @property
    def is_rational(self):
        return self.r == 1 or self.q == 0

    def as_fraction(self):
        if not self.is_rational:
            raise NotExact(f"{self} is irrational")
        return self.q

    def square(self):
        return self.q * self.q * self.r

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QSqrt(self.q * other, self.r)
        return QSqrt(self.q * other.q, self.r * other.r)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return QSqrt(self.q / other, self.r)
        if other.q == 0:
            raise ZeroDivisionError("division by zero QSqrt")
        # 1/sqrt(r) = sqrt(r)/r
        return QSqrt(self.q / (other.q * other.r), self.r * other.r)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QSqrt(other)
        if self.q == 0:
            return other
        if other.q == 0:
            return self
        prod = self.r * other.r
        s = math.isqrt(prod)
        if s * s != prod:
            raise NotExact("sum across square classes is not a QSqrt")
        # sqrt(r2) = (s / r1) sqrt(r1)
        return QSqrt(self.q + other.q * Fraction(s, self.r), self.r)

    def __neg__(self):
        return QSqrt(-self.q, self.r)

    def __sub__(self, other):
        return self + (-other)

    def __abs__(self):
        return QSqrt(abs(self.q), self.r)

    def __pow__(self, n):
        out = QSqrt(1)
        base = self if n >= 0 else QSqrt(1) / self
        for _ in range(abs(n)):
            out = out * base
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QSqrt(other)
        return (
            self.square() == other.square()
            and (self.q > 0) == (other.q > 0)
            and (self.q == 0) == (other.q == 0)
        )

    def __hash__(self):
        return hash((self.square(), self.q > 0))

    def to_mpf(self, prec=128):
        with mp.workprec(prec):
            return (
                mp.mpf(self.q.numerator)
                / self.q.denominator
                * mp.sqrt(mp.mpf(self.r))
            )

    def log_abs(self, prec=128):
        if self.q == 0:
            raise ZeroPolynomial("log of zero")
        with mp.workprec(prec):
            val = abs(self.to_mpf(prec))
            return mp.log(val)

    def __repr__(self):
        if self.r == 1:
            return str(self.q)
        return f"{self.q}*sqrt({self.r})"


ONE = QSqrt(1)


def _as_qsqrt(x):
    return x if isinstance(x, QSqrt) else QSqrt(x)


# -- lattices ------------------------------------------------------------------


class Lattice:
    """Subspace of Q^n with a chosen (ordered, independent) basis."""

    __slots__ = ("n", "basis", "rref_basis", "pivots")

    def __init__(self, n, basis):
        self.n = n
        self.basis = tuple(frac_vec(v) for v in basis)
        for v in self.basis:
            assert len(v) == n
        self.rref_basis, self.pivots = rref(self.basis)
        if len(self.rref_basis) != len(self.basis):
            raise NotExact("lattice basis is linearly dependent")

    @property
    def dim(self):
        return len(self.basis)

    def same_span(self, other):
        return self.n == other.n and self.rref_basis == other.rref_basis

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.same_span(other)

    def __hash__(self):
        return hash((self.n, self.rref_basis))

    def __repr__(self):
        return f"Lattice(n={self.n}, dim={self.dim})"


def zero_lattice(n):
    return Lattice(n, ())


def lattice_sum(A, B):
    return Lattice(A.n, sum_space(A.rref_basis, B.rref_basis))


def lattice_intersection(A, B):
    return Lattice(A.n, intersection(A.rref_basis, B.rref_basis))


def _complement_rows(rows, pivots, excluded_pivots):
    out = []
    for row, piv in zip(rows, pivots):
        if piv not in excluded_pivots:
            out.append(row)
    return tuple(out)


@dataclass
class PairData:
    """Intersection and canonical quotient bases for an ordered pair;
    canon_first spans first/(first cap second) etc., both made of rref rows."""

    I_rows: tuple
    I_pivots: tuple
    canon_first: tuple
    canon_second: tuple


def pair_data(A, B):
    I_rows = intersection(A.rref_basis, B.rref_basis)
    I_pivots = rref(I_rows)[1] if I_rows else ()
    ipiv = set(I_pivots)
    canon_first = _complement_rows(A.rref_basis, A.pivots, ipiv)
    canon_second = _complement_rows(B.rref_basis, B.pivots, ipiv)
    return PairData(I_rows, I_pivots, canon_first, canon_second)


def quotient_det(modulus_rows, reps_from, reps_to):
    """det of the matrix expressing reps_from in the basis reps_to of the
    quotient by span(modulus_rows)."""
    reps_from = tuple(reps_from)
    reps_to = tuple(reps_to)
    assert len(reps_from) == len(reps_to)
    if not reps_from:
        return Fraction(1)
    coords = solve_coords(tuple(modulus_rows) + reps_to, reps_from)
    k = len(modulus_rows)
    return det(tuple(row[k:] for row in coords))


def _bottom_reps(L, I_rows):
    """Representatives of L/(span I) chosen greedily from L's own basis in
    its given order (window lattices list generators by ascending degree,
    so these have low support and survive multiplication operators)."""
    working = list(I_rows)
    base_rank = rank(working)
    reps = []
    for v in L.basis:
        cand = working + [v]
        r = rank(cand)
        if r > base_rank + len(reps):
            working.append(v)
            reps.append(v)
    assert len(reps) + base_rank == L.dim or rank(working) == L.dim
    return tuple(reps)


# -- relative determinant lines ------------------------------------------------


@dataclass
class RelativeDetLine:
    """(A|B) with chosen representative bases for the two quotients."""

    A: Lattice
    B: Lattice
    basisA: tuple = None  # reps of A/(A cap B); None = canonical rref rows
    basisB: tuple = None

    def resolved(self):
        pd = pair_data(self.A, self.B)
        bA = self.basisA if self.basisA is not None else pd.canon_first
        bB = self.basisB if self.basisB is not None else pd.canon_second
        return pd, tuple(bA), tuple(bB)


def line_norm(line):
    """Norm of the wedge-basis element of (A|B): Gram volume of the B-side
    representatives over Gram volume of the A-side representatives, both
    projected orthogonally off A cap B."""
    pd, bA, bB = line.resolved()
    volA2 = gram_det([project_off(v, pd.I_rows) for v in bA]) if bA else Fraction(1)
    volB2 = gram_det([project_off(v, pd.I_rows) for v in bB]) if bB else Fraction(1)
    if volA2 == 0 or volB2 == 0:
        raise DegeneratePosition("representatives do not span the quotients")
    return QSqrt.sqrt(volB2) / QSqrt.sqrt(volA2)


@dataclass
class LineElement:
    """Element of (A|B), coordinate relative to the canonical wedge basis."""

    A: Lattice
    B: Lattice
    coord: QSqrt

    def __post_init__(self):
        self.coord = _as_qsqrt(self.coord)

    def norm(self):
        return abs(self.coord) * line_norm(RelativeDetLine(self.A, self.B))

    def inverse(self):
        """The element of (B|A) contracting with this one to 1 in (A|A)."""
        if self.coord.is_zero:
            raise ZeroDivisionError("zero line element has no inverse")
        return LineElement(self.B, self.A, ONE / self.coord)

    def scale(self, c):
        return LineElement(self.A, self.B, self.coord * _as_qsqrt(c))


def line_element(A, B, coord=1, repsA=None, repsB=None):
    """Build an element of (A|B).  When representative bases are passed the
    coordinate is relative to their wedge and gets converted to canonical."""
    coord = _as_qsqrt(coord)
    if repsA is None and repsB is None:
        return LineElement(A, B, coord)
    pd = pair_data(A, B)
    repsA = tuple(frac_vec(v) for v in repsA) if repsA is not None else pd.canon_first
    repsB = tuple(frac_vec(v) for v in repsB) if repsB is not None else pd.canon_second
    dA = quotient_det(pd.I_rows, repsA, pd.canon_first)
    dB = quotient_det(pd.I_rows, repsB, pd.canon_second)
    if dA == 0 or dB == 0:
        raise DegeneratePosition("representatives do not span the quotients")
    # wedge(repsA)^* = (1/dA) wedge(canonA)^*, wedge(repsB) = dB wedge(canonB)
    return LineElement(A, B, coord * Fraction(dB) / dA)


def contract(x, y, metrized=False, rigid=False):
    """The contraction (A|B) tensor (B|C) -> (A|C).

    Algebraic: canonical wedge bookkeeping through the common sublattice
    D = A cap B cap C.  metrized=True rescales by the volume discrepancy
    gamma = (|x| |y|) / |alpha(x tensor y)| so the result has norm
    |x| |y|.  rigid=True asserts the discrepancy is 1.
    """
    if not x.B.same_span(y.A):
        raise NotExact("middle lattices of the contraction disagree")
    A, B, C = x.A, x.B, y.B
    pdAB = pair_data(A, B)
    pdBC = pair_data(B, C)
    pdAC = pair_data(A, C)
    D_rows = intersection(pdAB.I_rows, C.rref_basis)
    D_pivots = set(rref(D_rows)[1] if D_rows else ())
    J_AB = _complement_rows(pdAB.I_rows, rref(pdAB.I_rows)[1] if pdAB.I_rows else (), D_pivots)
    J_BC = _complement_rows(pdBC.I_rows, rref(pdBC.I_rows)[1] if pdBC.I_rows else (), D_pivots)
    J_AC = _complement_rows(pdAC.I_rows, rref(pdAC.I_rows)[1] if pdAC.I_rows else (), D_pivots)
    # pair x's B-side wedge against y's dual B-side wedge, all relative to D
    s = quotient_det(D_rows, pdAB.canon_second + J_AB, pdBC.canon_first + J_BC)
    dA = quotient_det(D_rows, pdAB.canon_first + J_AB, pdAC.canon_first + J_AC)
    dC = quotient_det(D_rows, pdBC.canon_second + J_BC, pdAC.canon_second + J_AC)
    coord = x.coord * y.coord * (Fraction(s) * dC / dA)
    out = LineElement(A, C, coord)
    if metrized or rigid:
        g = gamma_discrepancy(A, B, C)
        if rigid and g != ONE:
            raise NotExact(f"contraction discrepancy {g} != 1 under rigid flag")
        if metrized:
            out = out.scale(g)
    return out


def gamma_discrepancy(A, B, C):
    """gamma(alpha_{A,B,C}) = (|x| |y|) / |alpha(x tensor y)| for any nonzero
    x in (A|B), y in (B|C); independent of the choice."""
    x = LineElement(A, B, ONE)
    y = LineElement(B, C, ONE)
    z = contract(x, y, metrized=False)
    if z.coord.is_zero:
        raise DegeneratePosition("algebraic contraction of unit elements vanished")
    return x.norm() * y.norm() / z.norm()


# -- the beta comparison map ---------------------------------------------------


@dataclass
class TensorElement:
    """Element of (A|B) tensor (A'|B'), stored as the pair of factors with
    the full scalar carried by the second factor."""

    first: LineElement
    second: LineElement

    def norm(self):
        return self.first.norm() * self.second.norm()


def beta_map(x, y, metrized=True):
    """beta: (A|B) tensor (A'|B') -> (A cap A'|B cap B') tensor (A+A'|B+B').

    Canonical on wedge coordinates via the second-isomorphism-theorem
    identifications lambda(A/D) lambda(A'/D) = lambda((A cap A')/D)
    lambda((A+A')/D); metrized=True applies the correction making it an
    isometry."""
    if x.coord.is_zero or y.coord.is_zero:
        raise DegeneratePosition("beta_map needs nonzero inputs")
    A, B, Ap, Bp = x.A, x.B, y.A, y.B
    IA = lattice_intersection(A, Ap)
    IB = lattice_intersection(B, Bp)
    SA = lattice_sum(A, Ap)
    SB = lattice_sum(B, Bp)

    def side_det(X, Xp, IX, SX):
        """Express lambda(X/D) lambda(Xp/D) on the basis coming from
        K = basis(IX/D), extensions to X and Xp; returns the scalar relating
        the canonical (X,Xp)-wedges to the canonical (IX, SX)-wedges."""
        # D for this side is IX cap (the other side's D)?  No: both sides
        # use their own D_X = IX here; the identification is within the
        # X-family only, relative to D_X = X cap Xp.
        Dr = IX.rref_basis
        Dp = set(IX.pivots)
        uX = _complement_rows(X.rref_basis, X.pivots, Dp)
        uXp = _complement_rows(Xp.rref_basis, Xp.pivots, Dp)
        # wedge(rref X) = aX wedge(K ++ uX) with K = rref basis of IX
        aX = quotient_det((), X.rref_basis, Dr + uX)
        aXp = quotient_det((), Xp.rref_basis, Dr + uXp)
        if aX == 0 or aXp == 0:
            raise DegeneratePosition("representatives fail independence")
        # (K ++ uX)(K ++ uXp) maps to (K)(K ++ uX ++ uXp); express the
        # latter in the canonical bases of IX and SX
        combined = Dr + uX + uXp
        dS = quotient_det((), combined, SX.rref_basis)
        if dS == 0:
            raise DegeneratePosition("sum representatives fail independence")
        return aX * aXp * dS

    num = side_det(B, Bp, IB, SB)  # direct factors
    den = side_det(A, Ap, IA, SA)  # dual factors
    coord = x.coord * y.coord * (Fraction(num) / den)
    out = TensorElement(
        LineElement(IA, IB, ONE), LineElement(SA, SB, coord)
    )
    if metrized:
        target = x.norm() * y.norm()
        got = out.norm()
        if got.is_zero:
            raise DegeneratePosition("beta image has zero norm")
        out = TensorElement(out.first, out.second.scale(target / got))
    return out


# -- operators -----------------------------------------------------------------


class DenseOperator:
    """Invertible linear map on Q^n given by a matrix (acting on column
    coordinate vectors; rows are the images' coefficients)."""

    def __init__(self, matrix):
        self.matrix = tuple(tuple(map(Fraction, row)) for row in matrix)
        self.n = len(self.matrix)

    def apply(self, v):
        return matvec(self.matrix, v)

    def compose(self, other):
        return DenseOperator(matmul(self.matrix, other.matrix))

    def inverse(self):
        return DenseOperator(matrix_inverse(self.matrix))

    def identity_like(self):
        return DenseOperator(identity_matrix(self.n))

    def __eq__(self, other):
        return isinstance(other, DenseOperator) and self.matrix == other.matrix


class LaurentMultOperator:
    """Multiplication by a fixed Laurent polynomial on the window span
    of t^m .. t^M.  Composition is exact (multiply the polynomials);
    application raises WindowTooSmall when the product leaves the window."""

    def __init__(self, f, window):
        if f.is_zero:
            raise ZeroPolynomial("multiplication by zero is not invertible")
        self.f = f
        self.window = tuple(window)
        m, M = self.window
        self.n = M - m + 1

    def _to_laurent(self, v):
        m = self.window[0]
        return LaurentPoly({m + i: c for i, c in enumerate(v) if c != 0})

    def _to_vec(self, poly):
        m, M = self.window
        if poly.coeffs and (poly.nu < m or poly.top > M):
            raise WindowTooSmall(
                f"product support [{poly.nu}, {poly.top}] leaves window {self.window}",
                minimal_window=(min(poly.nu, m), max(poly.top, M)),
            )
        return tuple(poly[m + i] for i in range(self.n))

    def apply(self, v):
        return self._to_vec(self.f * self._to_laurent(v))

    def compose(self, other):
        assert isinstance(other, LaurentMultOperator) and other.window == self.window
        return LaurentMultOperator(self.f * other.f, self.window)

    def inverse(self):
        if len(self.f.coeffs) != 1:
            raise NotExact("only monomial multiplications invert within Laurent polynomials")
        k, c = next(iter(self.f.coeffs.items()))
        return LaurentMultOperator(LaurentPoly.monomial(1 / c, -k), self.window)

    def identity_like(self):
        return LaurentMultOperator(LaurentPoly.constant(1), self.window)

    def __eq__(self, other):
        return (
            isinstance(other, LaurentMultOperator)
            and self.window == other.window
            and self.f == other.f
        )


def _monomial_tail_start(L):
    """If L is span{t^a .. t^M} (a coordinate tail reaching the window top),
    return the index of a; else None."""
    n = L.n
    d = L.dim
    if L.pivots != tuple(range(n - d, n)):
        return None
    expected = tuple(
        tuple(Fraction(1) if j == n - d + i else Fraction(0) for j in range(n))
        for i in range(d)
    )
    return n - d if L.rref_basis == expected else None


def apply_lattice(op, L):
    """Image lattice op(L) as a subspace.

    For a multiplication operator and a monomial tail lattice the honest
    image inside R((t)) is the shifted tail span{t^(a+nu(f)) .. t^M}: the
    unit part of f is an automorphism of the tail and only shows up in the
    induced maps on quotients, never in the subspace itself.  (Mapping the
    generators one by one and truncating would instead build a strictly
    smaller subspace whose phantom top quotient cancels the unit's
    contribution to every pairing.)  Other lattices are mapped vector by
    vector, with WindowTooSmall raised on any overflow."""
    if isinstance(op, LaurentMultOperator):
        start = _monomial_tail_start(L)
        if start is not None:
            m, M = op.window
            shift = op.f.nu
            new_start = start + shift
            if new_start < 0:
                raise WindowTooSmall(
                    f"shifted tail t^{m + new_start} below window bottom {m}",
                    minimal_window=(m + new_start, M),
                )
            n = L.n
            basis = [
                tuple(Fraction(1) if j == k else Fraction(0) for j in range(n))
                for k in range(new_start, n)
            ]
            return Lattice(n, basis)
    return Lattice(L.n, [op.apply(v) for v in L.basis])


def pushforward(op, x):
    """Image of x in (op A|op B) under the map induced by op on the
    relative determinant line.

    The canonical-coordinate conversion runs through low-degree quotient
    representatives taken from the lattices' own bases, so window
    truncation at the top of the lattices never touches the determinants.
    """
    A, B = x.A, x.B
    pd = pair_data(A, B)
    botA = _bottom_reps(A, pd.I_rows)
    botB = _bottom_reps(B, pd.I_rows)
    eA = quotient_det(pd.I_rows, botA, pd.canon_first)
    eB = quotient_det(pd.I_rows, botB, pd.canon_second)
    # x = coord (canonA)^* (canonB) = c_bot (botA)^* (botB): c_bot = coord * eA / eB
    c_bot = x.coord * (Fraction(eA) / eB)
    A2 = apply_lattice(op, A)
    B2 = apply_lattice(op, B)
    pd2 = pair_data(A2, B2)
    gA = tuple(op.apply(v) for v in botA)
    gB = tuple(op.apply(v) for v in botB)
    if len(pd2.canon_first) != len(botA) or len(pd2.canon_second) != len(botB):
        raise WindowTooSmall(
            "quotient dimensions changed under truncation; enlarge the window"
        )
    fA = quotient_det(pd2.I_rows, gA, pd2.canon_first)
    fB = quotient_det(pd2.I_rows, gB, pd2.canon_second)
    coord = c_bot * (Fraction(fB) / fA)
    return LineElement(A2, B2, coord)


# -- the central extension -----------------------------------------------------


@dataclass
class ArGLElement:
    """(g, a) with a a nonzero element of (A|gA) for the fixed reference A."""

    op: object
    A: Lattice
    elem: LineElement  # element of (A | op A)

    def __post_init__(self):
        assert self.elem.A.same_span(self.A)
        if self.elem.coord.is_zero:
            raise ZeroDivisionError("group elements need nonzero line coordinates")


def argl_lift(op, A, coord=1):
    gA = apply_lattice(op, A)
    return ArGLElement(op, A, LineElement(A, gA, _as_qsqrt(coord)))


def argl_identity(op_like, A):
    op = op_like.identity_like()
    return ArGLElement(op, A, LineElement(A, A, ONE))


def argl_scalar(op_like, A, c):
    op = op_like.identity_like()
    return ArGLElement(op, A, LineElement(A, A, _as_qsqrt(c)))


def group_mul(u, v):
    """(g, a)(g', a') = (gg', a o g(a')), metrized contraction."""
    assert u.A.same_span(v.A)
    op = u.op.compose(v.op)
    pushed = pushforward(u.op, v.elem)  # in (gA | gg'A)
    elem = contract(u.elem, pushed, metrized=True)
    return ArGLElement(op, u.A, elem)


def argl_inverse(u):
    opinv = u.op.inverse()
    elem = pushforward(opinv, u.elem.inverse())  # (gA|A) -> (A|g^-1 A)
    return ArGLElement(opinv, u.A, elem)


def _commutator_chain(g, h, A, a_coord, b_coord):
    """Central scalar of the chain a o g(b) o h(a^-1) o b^-1 through
    (A|gA), (gA|ghA), (ghA|hA), (hA|A), metrized contractions."""
    gA = apply_lattice(g, A)
    hA = apply_lattice(h, A)
    a = LineElement(A, gA, _as_qsqrt(a_coord))
    b = LineElement(A, hA, _as_qsqrt(b_coord))
    gb = pushforward(g, b)  # (gA | ghA)
    ha_inv = pushforward(h, a.inverse())  # (hgA | hA) = (ghA | hA)
    z = contract(contract(contract(a, gb, metrized=True), ha_inv, metrized=True),
                 b.inverse(), metrized=True)
    assert z.A.same_span(z.B)
    return z.coord


def commutator_pairing(g, h, A, a_coord=1, b_coord=1):
    """<g,h>_A: the central scalar of the commutator of lifts of the
    commuting maps g and h.

    Normalized so that on the nonnegative tail <mult-t, mult-c> = 1/c and
    in general |<mult-f, mult-g>| = |f0(0)|^nu(g) / |g0(0)|^nu(f); the
    literal chain a o g(b) o h(a^-1) o b^-1 produces the reciprocal, so we
    run it with the roles of g and h exchanged.  Independent of the lift
    coordinates a_coord, b_coord (they cancel).
    """
    if g.compose(h) != h.compose(g):
        raise NonCommuting("maps do not commute; the pairing needs gh = hg")
    return _commutator_chain(h, g, A, b_coord, a_coord)


def commutator_log(g, h, A, prec=128):
    return commutator_pairing(g, h, A).log_abs(prec)


# -- volume discrepancy of a short exact sequence --------------------------------


@dataclass
class MetrizedSpace:
    """Q^dim with inner product given by a Gram matrix (default standard)."""

    dim: int
    gram: tuple = None

    def inner(self, u, v):
        if self.gram is None:
            return dot(u, v)
        return dot(u, matvec(self.gram, v))


@dataclass
class ExactSequenceData:
    """0 -> V1 -> V2 -> V3 -> 0 with explicit injection and surjection."""

    V1: MetrizedSpace
    V2: MetrizedSpace
    V3: MetrizedSpace
    inj: tuple  # matrix V1 -> V2 (dim2 rows, dim1 columns)
    surj: tuple  # matrix V2 -> V3

    def validate(self):
        if self.V2.dim != self.V1.dim + self.V3.dim:
            raise NotExact("dimension count violates exactness")
        comp = matmul(self.surj, self.inj)
        if any(any(x != 0 for x in row) for row in comp):
            raise NotExact("surjection o injection is nonzero")
        inj_cols = tuple(zip(*self.inj)) if self.V1.dim else ()
        if rank(inj_cols) != self.V1.dim:
            raise NotExact("injection is not injective")
        surj_rows = self.surj
        if rank(tuple(zip(*surj_rows)) if self.V3.dim else ()) != self.V3.dim:
            raise NotExact("surjection is not surjective")


def _particular_preimage(surj, b):
    """Some x with surj x = b (free variables set to zero)."""
    rows = len(surj)
    cols = len(surj[0]) if rows else 0
    aug = [list(map(Fraction, row)) + [Fraction(bi)] for row, bi in zip(surj, b)]
    red, piv = rref(aug)
    x = [Fraction(0)] * cols
    for row, p in zip(red, piv):
        if p == cols:
            raise NotExact("target not in the image of the surjection")
        x[p] = row[-1]
    return tuple(x)


def gamma_sequence(seq, basis1=None, basis3=None, lifts=None):
    """Volume discrepancy of a short exact sequence of metrized spaces.

    gamma^2 = Gram_{V2}(inj(B1) ++ lifts(B3)) / (Gram_{V1}(B1) Gram_{V3}(B3))
    for any bases B1, B3 and any preimages; the choices cancel (tested).
    """
    seq.validate()
    B1 = tuple(frac_vec(v) for v in basis1) if basis1 else identity_matrix(seq.V1.dim)
    B3 = tuple(frac_vec(v) for v in basis3) if basis3 else identity_matrix(seq.V3.dim)
    if rank(B1) != seq.V1.dim or rank(B3) != seq.V3.dim:
        raise NotExact("gamma_sequence needs full bases of V1 and V3")
    vecs = [matvec(seq.inj, b) for b in B1]
    if lifts is not None:
        lifts = tuple(frac_vec(v) for v in lifts)
        for lv, b3 in zip(lifts, B3):
            if tuple(matvec(seq.surj, lv)) != tuple(b3):
                raise NotExact("supplied lift does not map to the basis vector")
        vecs.extend(lifts)
    else:
        vecs.extend(_particular_preimage(seq.surj, b) for b in B3)
    g2 = gram_det(vecs, inner=seq.V2.inner)
    g1 = gram_det(B1, inner=seq.V1.inner) if B1 else Fraction(1)
    g3 = gram_det(B3, inner=seq.V3.inner) if B3 else Fraction(1)
    if g1 == 0 or g3 == 0 or g2 == 0:
        raise NotExact("degenerate Gram determinant in gamma_sequence")
    return QSqrt.sqrt(Fraction(g2) / (Fraction(g1) * Fraction(g3)))


# -- Proposition B check ---------------------------------------------------------


def prop_b_check(g, h, A, B, prec=128):
    """<g,h>_A <g,h>_B = <g,h>_{A cap B} <g,h>_{A+B} for commuting g, h.

    Returns (lhs, rhs, passed) as floats at prec bits; the comparison
    itself is done exactly on the QSqrt values.
    """
    pA = commutator_pairing(g, h, A)
    pB = commutator_pairing(g, h, B)
    pI = commutator_pairing(g, h, lattice_intersection(A, B))
    pS = commutator_pairing(g, h, lattice_sum(A, B))
    lhs = pA * pB
    rhs = pI * pS
    with mp.workprec(prec):
        lf = lhs.to_mpf(prec)
        rf = rhs.to_mpf(prec)
        passed = lhs == rhs or abs(lf - rf) <= 1e-9 * max(1, abs(lf))
        return lf, rf, passed


# -- Laurent window model ---------------------------------------------------------


def window_lattice(f, window):
    """(f * span{t^k : k >= 0}) cut to the window, with its natural basis
    f t^k listed by ascending degree.  Also returns the reference lattice
    A = span(t^0 .. t^M)."""
    m, M = window
    if f.is_zero:
        raise ZeroPolynomial("window lattice of the zero function")
    nu, top = f.nu, f.top
    if nu < m or top > M:
        raise WindowTooSmall(
            f"support of f = [{nu}, {top}] outside window [{m}, {M}]",
            minimal_window=(min(nu, m), max(top, M)),
        )
    n = M - m + 1

    def to_vec(poly):
        return tuple(poly[m + i] for i in range(n))

    basis = []
    for k in range(0, M - top + 1):
        basis.append(to_vec(f * LaurentPoly.monomial(1, k)))
    ref = Lattice(n, [to_vec(LaurentPoly.monomial(1, k)) for k in range(0, M + 1)])
    return Lattice(n, basis), ref


def standard_lattice(window):
    return window_lattice(LaurentPoly.constant(1), window)[0]


def mult_operator(f, window):
    return LaurentMultOperator(f, window)


def auto_window(f, g, pad=6):
    """A window comfortably containing f, g, fg and the quotient data the
    commutator chain touches."""
    nus = [0, f.nu, g.nu, f.nu + g.nu]
    tops = [0, f.top, g.top, f.top + g.top]
    lo = min(nus) - 2
    span = abs(f.nu) + abs(g.nu) + pad
    hi = max(tops) + span
    return (lo, hi)


def nu_arch_oracle(f, g, window=None, prec=128):
    """log |<mult-f, mult-g>_{A}| on a finite window: the brute-force value
    of the reciprocity symbol of R((t)) computed with actual lattices."""
    if f.is_zero or g.is_zero:
        raise ZeroPolynomial("symbols need nonzero functions")
    if window is None:
        window = auto_window(f, g)
    elif isinstance(window, int):
        window = (-window, window)
    A = standard_lattice(window)
    gop = mult_operator(f, window)
    hop = mult_operator(g, window)
    val = commutator_pairing(gop, hop, A)
    return val.log_abs(prec)


def nu_arch_closed(f, g, prec=128):
    """The closed formula nu(f,g) = nu_t(g) log|f0(0)| - nu_t(f) log|g0(0)|."""
    if f.is_zero or g.is_zero:
        raise ZeroPolynomial("symbols need nonzero functions")
    with mp.workprec(prec):
        bf = f.bottom_coeff
        bg = g.bottom_coeff
        out = mp.mpf(0)
        if g.nu:
            out += g.nu * mp.log(abs(mp.mpf(bf.numerator)) / bf.denominator)
        if f.nu:
            out -= f.nu * mp.log(abs(mp.mpf(bg.numerator)) / bg.denominator)
        return out
