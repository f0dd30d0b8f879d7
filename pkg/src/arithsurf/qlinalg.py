"""Dense exact linear algebra over Q (Fraction entries).

Vectors are tuples of Fractions, matrices tuples of row tuples.  Sizes
here are tiny (windows of a few dozen coordinates, quotients of dimension
a handful), so plain Gaussian elimination with exact rationals is the
right tool; no pivot-size cleverness is needed.
"""

from fractions import Fraction

from .errors import NotExact


def frac_vec(xs):
    return tuple(Fraction(x) for x in xs)


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v):
    return tuple(c * a for a in v)


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def is_zero_vec(v):
    return all(a == 0 for a in v)


def matvec(m, v):
    return tuple(dot(row, v) for row in m)


def matmul(a, b):
    bt = tuple(zip(*b))
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def transpose(m):
    return tuple(zip(*m))


def identity_matrix(n):
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n))
        for i in range(n)
    )


def rref(rows):
    """Reduced row echelon form.  Returns (rows, pivot_columns) with zero
    rows dropped and each pivot normalized to 1 and cleared above/below."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return (), ()
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        sel = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if sel is None:
            continue
        m[r], m[sel] = m[sel], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return tuple(tuple(row) for row in m[:r]), tuple(pivots)


def rank(rows):
    return len(rref(rows)[0])


def det(m):
    """Determinant of a square Fraction matrix by Gaussian elimination."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    assert all(len(r) == n for r in m)
    a = [list(map(Fraction, r)) for r in m]
    out = Fraction(1)
    for c in range(n):
        sel = next((i for i in range(c, n) if a[i][c] != 0), None)
        if sel is None:
            return Fraction(0)
        if sel != c:
            a[c], a[sel] = a[sel], a[c]
            out = -out
        out *= a[c][c]
        inv = 1 / a[c][c]
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return out


def solve_coords(basis, targets):
    """Coefficient matrix C with C . basis = targets.

    basis: independent rows; targets: rows inside their span.  Raises
    NotExact when a target falls outside the span (the exact analogue of
    a failed least-squares fit)."""
    basis = tuple(tuple(map(Fraction, b)) for b in basis)
    k = len(basis)
    out = []
    for v in targets:
        v = tuple(map(Fraction, v))
        if k == 0:
            if not is_zero_vec(v):
                raise NotExact("target outside span of empty basis")
            out.append(())
            continue
        # eliminate on the augmented system (basis columns | v)
        aug = [list(col) + [x] for col, x in zip(zip(*basis), v)]
        coeffs = [Fraction(0)] * k
        row = 0
        pivot_of_col = {}
        for c in range(k):
            sel = next((i for i in range(row, len(aug)) if aug[i][c] != 0), None)
            if sel is None:
                continue
            aug[row], aug[sel] = aug[sel], aug[row]
            inv = 1 / aug[row][c]
            aug[row] = [x * inv for x in aug[row]]
            for i in range(len(aug)):
                if i != row and aug[i][c] != 0:
                    f = aug[i][c]
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[row])]
            pivot_of_col[c] = row
            row += 1
        for i in range(row, len(aug)):
            if aug[i][-1] != 0:
                raise NotExact("target vector outside span of basis")
        for c, r in pivot_of_col.items():
            coeffs[c] = aug[r][-1]
        # independence of the basis means every column has a pivot
        if len(pivot_of_col) != k:
            raise NotExact("dependent basis passed to solve_coords")
        out.append(tuple(coeffs))
    return tuple(out)


def intersection(a_rows, b_rows):
    """Basis (rref) of span(a) intersect span(b), by the Zassenhaus trick."""
    if not a_rows or not b_rows:
        return ()
    n = len(a_rows[0])
    block = [tuple(r) + tuple(r) for r in a_rows]
    block += [tuple(r) + (Fraction(0),) * n for r in b_rows]
    red, _ = rref(block)
    out = []
    for row in red:
        if all(x == 0 for x in row[:n]):
            right = row[n:]
            if not is_zero_vec(right):
                out.append(right)
    return rref(out)[0]


def sum_space(a_rows, b_rows):
    return rref(tuple(a_rows) + tuple(b_rows))[0]


def in_span(v, rows):
    try:
        solve_coords(rref(rows)[0], (v,))
        return True
    except NotExact:
        return False


def gram_matrix(rows, inner=None):
    ip = inner or dot
    return tuple(tuple(ip(u, v) for v in rows) for u in rows)


def gram_det(rows, inner=None):
    return det(gram_matrix(rows, inner=inner))


def project_off(v, rows, inner=None):
    """Component of v orthogonal to span(rows)."""
    ip = inner or dot
    rows = tuple(rows)
    if not rows:
        return tuple(map(Fraction, v))
    g = gram_matrix(rows, inner=inner)
    rhs = tuple(ip(r, v) for r in rows)
    coeffs = solve_coords(g, (rhs,))[0]  # g is symmetric positive definite
    out = tuple(map(Fraction, v))
    for c, r in zip(coeffs, rows):
        out = vsub(out, vscale(c, r))
    return out


def matrix_inverse(m):
    n = len(m)
    aug = [list(map(Fraction, row)) + list(identity_matrix(n)[i]) for i, row in enumerate(m)]
    red, piv = rref(aug)
    if len(red) < n or piv != tuple(range(n)):
        raise NotExact("matrix is singular")
    return tuple(tuple(row[n:]) for row in red)
