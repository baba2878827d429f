"""Exact dense linear algebra over the Coeff field.

Matrices are lists of row lists of Coeff.  Sizes stay tiny (graded pieces of
the ring of symmetric functions up to degree 6), so plain fraction-field
Gaussian elimination is the right tool.
"""

from .coeffs import ONE, ZERO


def zeros(rows, cols):
    return [[ZERO for _ in range(cols)] for _ in range(rows)]


def identity(n):
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = ONE
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[c * x for x in row] for row in a]


def mat_mul(a, b):
    if a and b and len(a[0]) != len(b):
        raise ValueError("matrix shape mismatch")
    if not b:
        return [[] for _ in a]
    cols = len(b[0])
    out = zeros(len(a), cols)
    for i, row in enumerate(a):
        for k, aik in enumerate(row):
            if aik.is_zero():
                continue
            brow = b[k]
            orow = out[i]
            for j in range(cols):
                if not brow[j].is_zero():
                    orow[j] = orow[j] + aik * brow[j]
    return out


def mat_vec(a, v):
    return [sum((x * y for x, y in zip(row, v) if not x.is_zero()), ZERO) for row in a]


def transpose(a):
    if not a:
        return []
    return [list(col) for col in zip(*a)]


def is_zero_matrix(a):
    return all(x.is_zero() for row in a for x in row)


def mat_eq(a, b):
    if len(a) != len(b):
        return False
    return all(ra == rb for ra, rb in zip(a, b))


def _rref(m, width):
    """In-place reduced row echelon form; returns pivot column list."""
    pivots = []
    row = 0
    for col in range(width):
        pivot = None
        for r in range(row, len(m)):
            if not m[r][col].is_zero():
                pivot = r
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = m[row][col].inverse()
        m[row] = [x * inv for x in m[row]]
        for r in range(len(m)):
            if r != row and not m[r][col].is_zero():
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
        if row == len(m):
            break
    return pivots


def nullspace(a, cols=None):
    """Basis of the right kernel of a (list of column vectors)."""
    if not a:
        return [] if not cols else [
            [ONE if i == j else ZERO for i in range(cols)] for j in range(cols)
        ]
    width = len(a[0])
    m = [list(row) for row in a]
    pivots = _rref(m, width)
    free = [c for c in range(width) if c not in pivots]
    basis = []
    for fc in free:
        vec = [ZERO] * width
        vec[fc] = ONE
        for r, pc in enumerate(pivots):
            vec[pc] = -m[r][fc]
        basis.append(vec)
    return basis


def solve(a, b):
    """Solve a x = b; returns None when inconsistent."""
    rows = len(a)
    width = len(a[0]) if a else 0
    m = [list(row) + [b[i]] for i, row in enumerate(a)]
    pivots = _rref(m, width)
    for r in range(rows):
        if all(m[r][c].is_zero() for c in range(width)) and not m[r][width].is_zero():
            return None
    x = [ZERO] * width
    for r, pc in enumerate(pivots):
        x[pc] = m[r][width]
    return x


def det(a):
    n = len(a)
    m = [list(row) for row in a]
    sign = ONE
    result = ONE
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if not m[r][col].is_zero():
                pivot = r
                break
        if pivot is None:
            return ZERO
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        p = m[col][col]
        result = result * p
        inv = p.inverse()
        for r in range(col + 1, n):
            if not m[r][col].is_zero():
                f = m[r][col] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return sign * result


def inverse(a):
    n = len(a)
    m = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(a)]
    pivots = _rref(m, n)
    if len(pivots) != n:
        raise ValueError("matrix is singular")
    return [row[n:] for row in m]
