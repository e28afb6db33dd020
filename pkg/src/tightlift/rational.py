"""Exact integer and rational linear algebra on small symmetric matrices.

Rational scalars are :class:`fractions.Fraction` (always in lowest terms
with a positive denominator).  Matrices are plain tuples of integer tuples;
:func:`sym_matrix` validates and normalizes user input into that form.
Nothing here ever rounds.
"""
from fractions import Fraction

from .errors import InvalidPresentation, SingularMatrix

__all__ = [
    "Fraction", "sym_matrix", "signature", "inertia", "det", "solve_rational",
    "inverse", "quadratic_form", "smith_normal_form", "integer_coset_equal",
    "homology_torsion", "matmul", "transpose",
]


def sym_matrix(rows):
    """Return ``rows`` as an immutable square symmetric integer matrix."""
    m = tuple(tuple(int(x) for x in row) for row in rows)
    n = len(m)
    for i, row in enumerate(m):
        if len(row) != n:
            raise InvalidPresentation(f"row {i} has length {len(row)}, expected {n}")
    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j] != m[j][i]:
                raise InvalidPresentation(
                    f"matrix not symmetric at ({i}, {j}): {m[i][j]} != {m[j][i]}")
    return m


def transpose(a):
    return tuple(tuple(col) for col in zip(*a)) if a else ()


def matmul(a, b):
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def inertia(m):
    """Return ``(n_plus, n_minus, n_zero)`` of a symmetric matrix.

    Symmetric Gaussian elimination over the rationals: a nonzero diagonal
    pivot is moved to the front and cleared by a congruence; if the
    remaining diagonal is identically zero but some off-diagonal entry
    ``a_ij`` is not, row/column ``j`` is added to row/column ``i``, which
    puts ``2 a_ij`` on the diagonal.
    """
    a = [[Fraction(x) for x in row] for row in m]
    pos = neg = 0
    while a:
        k = next((i for i in range(len(a)) if a[i][i] != 0), None)
        if k is None:
            pair = next(((i, j) for i in range(len(a)) for j in range(i + 1, len(a))
                         if a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            for r in range(len(a)):
                a[r][i] += a[r][j]
            for c in range(len(a)):
                a[i][c] += a[j][c]
            k = i
        a[0], a[k] = a[k], a[0]
        for row in a:
            row[0], row[k] = row[k], row[0]
        p = a[0][0]
        if p > 0:
            pos += 1
        else:
            neg += 1
        a = [[a[i][j] - a[i][0] * a[0][j] / p for j in range(1, len(a))]
             for i in range(1, len(a))]
    n = len(m)
    return pos, neg, n - pos - neg


def signature(m):
    """Signature (positive minus negative eigenvalue count) of ``m``."""
    pos, neg, _ = inertia(m)
    return pos - neg


def det(m):
    """Exact integer determinant (Bareiss fraction-free elimination)."""
    a = [list(row) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def solve_rational(m, v):
    """Solve ``m x = v`` exactly; raises :class:`SingularMatrix` if det is 0."""
    n = len(m)
    if len(v) != n:
        raise ValueError(f"vector has length {len(v)}, matrix is {n}x{n}")
    a = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(m, v)]
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            raise SingularMatrix("matrix is singular (b1 > 0)")
        a[c], a[piv] = a[piv], a[c]
        pc = a[c][c]
        a[c] = [x / pc for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return tuple(a[r][n] for r in range(n))


def inverse(m):
    """Exact rational inverse as a tuple of Fraction rows."""
    n = len(m)
    cols = [solve_rational(m, [1 if i == j else 0 for i in range(n)]) for j in range(n)]
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def quadratic_form(m, v):
    """``v^T m^{-1} v`` as an exact Fraction."""
    if not any(v):
        if det(m) == 0:
            raise SingularMatrix("matrix is singular (b1 > 0)")
        return Fraction(0)
    x = solve_rational(m, v)
    return sum((Fraction(a) * b for a, b in zip(v, x)), Fraction(0))


def smith_normal_form(m):
    """Smith normal form of an integer matrix.

    Returns ``(d, u, v)`` with ``u * m * v`` diagonal with entries ``d``
    (non-negative, each dividing the next, zeros last) and ``u``, ``v``
    unimodular.
    """
    a = [list(row) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, k):
        for row in a:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    for s in range(min(rows, cols)):
        while True:
            nz = [(abs(a[i][j]), i, j) for i in range(s, rows) for j in range(s, cols)
                  if a[i][j] != 0]
            if not nz:
                break
            _, i, j = min(nz)
            swap_rows(s, i)
            swap_cols(s, j)
            done = True
            for i in range(s + 1, rows):
                q = a[i][s] // a[s][s]
                add_row(i, s, -q)
                if a[i][s] != 0:
                    done = False
            for j in range(s + 1, cols):
                q = a[s][j] // a[s][s]
                add_col(j, s, -q)
                if a[s][j] != 0:
                    done = False
            if not done:
                continue
            bad = next(((i, j) for i in range(s + 1, rows) for j in range(s + 1, cols)
                        if a[i][j] % a[s][s] != 0), None)
            if bad is None:
                break
            add_row(s, bad[0], 1)
        if a[s][s] < 0:
            u[s] = [-x for x in u[s]]
            a[s] = [-x for x in a[s]]
    d = [a[i][i] for i in range(min(rows, cols))]
    return d, tuple(map(tuple, u)), tuple(map(tuple, v))


def integer_coset_equal(m, v1, v2):
    """True iff ``v1 - v2`` lies in the integer column span of ``m``."""
    if det(m) == 0:
        raise SingularMatrix("matrix is singular (b1 > 0)")
    diff = [int(x) - int(y) for x, y in zip(v1, v2)]
    if len(diff) != len(m) or len(v1) != len(v2):
        raise ValueError("vector length does not match matrix size")
    d, u, _ = smith_normal_form(m)
    w = [sum(x * y for x, y in zip(row, diff)) for row in u]
    return all(wi % di == 0 for wi, di in zip(w, d))


def homology_torsion(m):
    """Invariant factors (> 1) of ``coker m``; ``0`` entries mean free Z summands."""
    d, _, _ = smith_normal_form(m)
    return [x for x in d if x != 1]
