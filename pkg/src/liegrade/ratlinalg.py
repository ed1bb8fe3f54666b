"""Small exact linear algebra toolkit over the rationals.

Matrices are tuples of tuples of Fractions (ints are fine on input, they
get coerced).  Everything here is textbook Gaussian elimination; no
pivoting heuristics are needed since the arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction


class SingularMatrixError(ValueError):
    """Raised when an inverse/solve is requested for a singular matrix;
    carries the vanishing determinant (always 0, kept for symmetry with the
    Jordan-side errors)."""


def as_matrix(rows):
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def identity(n):
    return tuple(tuple(Fraction(int(a == b)) for b in range(n)) for a in range(n))


def zeros(n, m):
    return tuple((Fraction(0),) * m for _ in range(n))


def transpose(mat):
    return tuple(zip(*mat)) if mat else ()


def mat_mul(a, b):
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def scalar_mul(c, mat):
    c = Fraction(c)
    return tuple(tuple(c * x for x in row) for row in mat)


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def rank(mat):
    work = [list(row) for row in as_matrix(mat)]
    if not work:
        return 0
    rows, cols = len(work), len(work[0])
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if work[i][c]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = 1 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(rows):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        r += 1
        if r == rows:
            break
    return r


def det(mat):
    work = [list(row) for row in as_matrix(mat)]
    n = len(work)
    out = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if work[i][c]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            work[c], work[pivot] = work[pivot], work[c]
            out = -out
        out *= work[c][c]
        inv = 1 / work[c][c]
        for i in range(c + 1, n):
            if work[i][c]:
                f = work[i][c] * inv
                work[i] = [x - f * y for x, y in zip(work[i], work[c])]
    return out


def mat_inverse(mat):
    mat = as_matrix(mat)
    n = len(mat)
    work = [list(row) + list(idrow) for row, idrow in zip(mat, identity(n))]
    for c in range(n):
        pivot = next((i for i in range(c, n) if work[i][c]), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        work[c], work[pivot] = work[pivot], work[c]
        inv = 1 / work[c][c]
        work[c] = [x * inv for x in work[c]]
        for i in range(n):
            if i != c and work[i][c]:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[c])]
    return tuple(tuple(row[n:]) for row in work)


def solve(a, b):
    """Solve a @ x = b for a square invertible a; b is a vector."""
    x = mat_vec(mat_inverse(a), tuple(Fraction(v) for v in b))
    return x


def nullspace(mat):
    """Basis of the right null space {x : mat @ x = 0}, by reduced row
    echelon form."""
    mat = as_matrix(mat)
    if not mat:
        return ()
    rows, cols = len(mat), len(mat[0])
    work = [list(row) for row in mat]
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if work[i][c]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = 1 / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(rows):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for c in free:
        v = [Fraction(0)] * cols
        v[c] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -work[i][c]
        basis.append(tuple(v))
    return tuple(basis)


def adjugate(mat):
    """Classical adjugate by cofactor expansion: adj(A)[i][j] =
    (-1)^(i+j) * minor_ji.  Total (polynomial) map, defined for singular
    matrices too."""
    mat = as_matrix(mat)
    n = len(mat)
    if n == 1:
        return ((Fraction(1),),)
    out = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = tuple(
                tuple(mat[r][c] for c in range(n) if c != j) for r in range(n) if r != i
            )
            out[j][i] = (-1) ** (i + j) * det(minor)
    return tuple(tuple(row) for row in out)


def pfaffian(mat):
    """Pfaffian of a skew-symmetric matrix of even size, by expansion along
    the first row: Pf(A) = sum_j (-1)^j a_{0j} Pf(A^{(0j)})."""
    mat = as_matrix(mat)
    n = len(mat)
    for i in range(n):
        assert mat[i][i] == 0
        for j in range(n):
            assert mat[i][j] == -mat[j][i], "matrix is not skew-symmetric"
    return _pf(mat)


def _pf(mat):
    n = len(mat)
    if n % 2:
        return Fraction(0)
    if n == 0:
        return Fraction(1)
    acc = Fraction(0)
    for j in range(1, n):
        if mat[0][j]:
            rest = tuple(
                tuple(mat[r][c] for c in range(1, n) if c != j)
                for r in range(1, n)
                if r != j
            )
            acc += (-1) ** (j - 1) * mat[0][j] * _pf(rest)
    return acc


def pfaffian_adjugate(mat):
    """The skew matrix P with A @ P = Pf(A) * I: the polynomial lift of
    Pf(A) * A^{-1}.  Entries are signed sub-Pfaffians of A with two
    rows/columns removed."""
    mat = as_matrix(mat)
    n = len(mat)
    out = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            sub = tuple(
                tuple(mat[r][c] for c in range(n) if c not in (i, j))
                for r in range(n)
                if r not in (i, j)
            )
            v = (-1) ** (i + j) * _pf(sub)
            out[i][j] = v
            out[j][i] = -v
    return tuple(tuple(row) for row in out)
