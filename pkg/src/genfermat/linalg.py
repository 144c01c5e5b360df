"""Exact dense linear algebra over FieldSpec elements.

Matrices are lists (or tuples) of rows of FieldElement; everything is done
by plain Gaussian elimination, which is exact over a finite field.  These
routines are for the small matrices that arise here (a handful of rows and
columns), not for bulk numeric work.
"""

from __future__ import annotations

from .ff import FieldElement, FieldSpec


def identity_matrix(field: FieldSpec, n: int):
    one, zero = field.one(), field.zero()
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def copy_matrix(rows):
    return [list(r) for r in rows]


def transpose(rows):
    return [list(col) for col in zip(*rows)]


def mat_vec(rows, vec):
    out = []
    for r in rows:
        acc = r[0] * vec[0]
        for a, b in zip(r[1:], vec[1:]):
            acc = acc + a * b
        out.append(acc)
    return out


def mat_mul(a, b):
    bt = transpose(b)
    return [[_dot(ra, cb) for cb in bt] for ra in a]


def _dot(u, v):
    acc = u[0] * v[0]
    for a, b in zip(u[1:], v[1:]):
        acc = acc + a * b
    return acc


def rank(rows) -> int:
    if not rows:
        return 0
    m = copy_matrix(rows)
    nr, nc = len(m), len(m[0])
    r = 0
    for c in range(nc):
        pivot = next((i for i in range(r, nr) if m[i][c].code != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(nr):
            if i != r and m[i][c].code != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == nr:
            break
    return r


def det(rows) -> FieldElement:
    n = len(rows)
    field = rows[0][0].owner
    m = copy_matrix(rows)
    result = field.one()
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c].code != 0), None)
        if pivot is None:
            return field.zero()
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            result = -result
        result = result * m[c][c]
        inv = m[c][c].inverse()
        for i in range(c + 1, n):
            if m[i][c].code != 0:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return result


def inverse(rows):
    """Matrix inverse, or None when singular."""
    n = len(rows)
    field = rows[0][0].owner
    m = [list(r) + irow for r, irow in zip(copy_matrix(rows),
                                           identity_matrix(field, n))]
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, n) if m[i][c].code != 0), None)
        if pivot is None:
            return None
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(n):
            if i != r and m[i][c].code != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return [row[n:] for row in m]


def solve(rows, rhs):
    """One solution of rows * x = rhs, or None when inconsistent."""
    nr = len(rows)
    nc = len(rows[0])
    field = rows[0][0].owner
    m = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(nc):
        pivot = next((i for i in range(r, nr) if m[i][c].code != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(nr):
            if i != r and m[i][c].code != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    for i in range(r, nr):
        if m[i][nc].code != 0:
            return None
    x = [field.zero()] * nc
    for i, c in enumerate(pivots):
        x[c] = m[i][nc]
    return x


def null_space(rows):
    """Canonical basis of the right kernel (free variables set to 1)."""
    nr = len(rows)
    nc = len(rows[0])
    field = rows[0][0].owner
    m = copy_matrix(rows)
    pivots = []
    r = 0
    for c in range(nc):
        pivot = next((i for i in range(r, nr) if m[i][c].code != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(nr):
            if i != r and m[i][c].code != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.zero()] * nc
        v[fc] = field.one()
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        basis.append(v)
    return basis
