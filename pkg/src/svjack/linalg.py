"""Exact dense linear algebra over the kernel scalar fields.

Elimination follows the Bareiss fraction-free recurrence, which keeps
intermediate entries equal to minors of the original matrix, so divisions
are exact and coefficient growth stays polynomial for matrices whose
entries are polynomials or rational functions.  Matrices are plain lists
of rows; all routines leave their inputs untouched.
"""

from __future__ import annotations

from fractions import Fraction

from .kernel import KernelError, Poly, RatFun, is_zero


class DuplicateAbscissa(KernelError):
    pass


class InconsistentData(KernelError):
    pass


def _clone(mat):
    return [list(row) for row in mat]


def _row_clear_denominators(row):
    """Scale a row with RatFun entries to polynomial (denominator-1) entries.

    Row scaling by a nonzero factor changes neither the kernel nor the rank,
    and it makes the Bareiss divisions exact on the polynomial level.  Rows
    may mix plain rationals with rational functions.
    """
    var = None
    for x in row:
        if isinstance(x, RatFun):
            var = x.var
            break
    if var is None:
        return row
    scale = RatFun.const(var, 1)
    for x in row:
        if isinstance(x, RatFun) and (x.denom.degree() > 0 or x.denom.coeffs[0] != 1):
            scale = scale * RatFun(var, x.denom, None)
    if scale == RatFun.const(var, 1):
        return row
    return [x * scale for x in row]


def bareiss_echelon(mat):
    """Fraction-free forward elimination.

    Returns (echelon matrix, pivot column list, row permutation sign).
    """
    m = _clone(mat)
    if not m:
        return m, [], 1
    m = [_row_clear_denominators(row) for row in m]
    rows, cols = len(m), len(m[0])
    piv_cols = []
    prev = 1
    r = 0
    sign = 1
    for c in range(cols):
        pivot_row = None
        for i in range(r, rows):
            if not is_zero(m[i][c]):
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            m[r], m[pivot_row] = m[pivot_row], m[r]
            sign = -sign
        piv = m[r][c]
        for i in range(r + 1, rows):
            for j in range(cols):
                if j == c:
                    continue
                num = m[i][j] * piv - m[i][c] * m[r][j]
                m[i][j] = num / prev if prev != 1 else num
            m[i][c] = m[i][c] * 0
        prev = piv
        piv_cols.append(c)
        r += 1
        if r == rows:
            break
    return m, piv_cols, sign


def rank(mat):
    return len(bareiss_echelon(mat)[1])


def det(mat):
    """Determinant by the Bareiss recurrence (square matrices)."""
    n = len(mat)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in mat):
        raise KernelError("determinant of a non-square matrix")
    m = _clone(mat)
    one = Fraction(1)
    prev = one
    sign = 1
    for k in range(n - 1):
        if is_zero(m[k][k]):
            swap = None
            for i in range(k + 1, n):
                if not is_zero(m[i][k]):
                    swap = i
                    break
            if swap is None:
                return m[0][0] * 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num / prev if prev is not one else num
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return -d if sign < 0 else d


def nullspace(mat):
    """Exact basis of the right kernel of a rectangular matrix.

    Returns a list of column vectors (lists); empty when the kernel is 0.
    """
    if not mat:
        return []
    cols = len(mat[0])
    ech, piv_cols, _ = bareiss_echelon(mat)
    free_cols = [c for c in range(cols) if c not in piv_cols]
    basis = []
    zero = mat[0][0] * 0
    one = zero + 1
    for fc in free_cols:
        v = [zero] * cols
        v[fc] = one
        # back-substitute over the pivot rows, bottom-up
        for r in range(len(piv_cols) - 1, -1, -1):
            pc = piv_cols[r]
            acc = zero
            for j in range(pc + 1, cols):
                if not is_zero(v[j]):
                    acc = acc + ech[r][j] * v[j]
            v[pc] = -acc / ech[r][pc]
        basis.append(v)
    return basis


def solve(mat, rhs):
    """Solve mat @ x = rhs exactly; raises if singular or inconsistent."""
    n = len(mat)
    aug = [list(row) + [rhs[i]] for i, row in enumerate(mat)]
    ech, piv_cols, _ = bareiss_echelon(aug)
    cols = len(mat[0])
    if cols in piv_cols:
        raise InconsistentData("inconsistent linear system")
    if len(piv_cols) < cols:
        raise KernelError("singular linear system")
    zero = rhs[0] * 0
    x = [zero] * cols
    for r in range(cols - 1, -1, -1):
        pc = piv_cols[r]
        acc = ech[r][cols]
        for j in range(pc + 1, cols):
            acc = acc - ech[r][j] * x[j]
        x[pc] = acc / ech[r][pc]
    return x


def mat_mul(a, b):
    if not a or not b:
        return []
    rows, inner, cols = len(a), len(b), len(b[0])
    zero = a[0][0] * 0
    out = [[zero for _ in range(cols)] for _ in range(rows)]
    for i in range(rows):
        for k in range(inner):
            aik = a[i][k]
            if is_zero(aik):
                continue
            for j in range(cols):
                out[i][j] = out[i][j] + aik * b[k][j]
    return out


def mat_vec(a, v):
    out = []
    for row in a:
        acc = row[0] * 0
        for x, y in zip(row, v):
            if not is_zero(x) and not is_zero(y):
                acc = acc + x * y
        out.append(acc)
    return out


def identity(n, one=Fraction(1)):
    zero = one * 0
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def poly_interpolate(points, degree_bound, var="h"):
    """Unique polynomial of degree <= degree_bound through the given points.

    ``points`` is a list of (x, y) with rational abscissas x and values y in
    any kernel field.  Extra points beyond degree_bound + 1 must agree with
    the interpolant, otherwise InconsistentData is raised.  Newton's divided
    differences keep the computation exact.
    """
    xs = [Fraction(p[0]) for p in points]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa("repeated abscissa in interpolation data")
    if len(points) < degree_bound + 1:
        raise KernelError("need at least degree_bound + 1 points")
    base = points[: degree_bound + 1]
    bxs = xs[: degree_bound + 1]
    coefs = [p[1] for p in base]
    # divided-difference table, in place
    for level in range(1, len(base)):
        for i in range(len(base) - 1, level - 1, -1):
            coefs[i] = (coefs[i] - coefs[i - 1]) / (bxs[i] - bxs[i - level])
    poly = Poly.const(var, coefs[-1])
    for i in range(len(base) - 2, -1, -1):
        poly = poly * (Poly.x(var) - Poly.const(var, bxs[i])) + Poly.const(var, coefs[i])
    for x, y in points[degree_bound + 1:]:
        if not is_zero(poly(Fraction(x)) - y):
            raise InconsistentData("extra interpolation point disagrees")
    return poly
