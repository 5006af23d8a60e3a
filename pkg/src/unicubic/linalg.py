"""Tiny exact linear algebra over a field (lists of scalar lists)."""

from __future__ import annotations

from .errors import InternalInconsistency
from .fields import Field


def identity(field: Field, n: int):
    one, zero = field.one(), field.zero()
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_vec(field: Field, m, v):
    out = []
    for row in m:
        acc = field.zero()
        for a, b in zip(row, v):
            acc = field.add(acc, field.mul(a, b))
        out.append(acc)
    return out


def mat_mul(field: Field, a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = field.zero()
            for s in range(k):
                acc = field.add(acc, field.mul(a[i][s], b[s][j]))
            row.append(acc)
        out.append(row)
    return out


def rank(field: Field, mat) -> int:
    if not mat:
        return 0
    m = [row[:] for row in mat]
    rows, cols = len(m), len(m[0])
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if m[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(x, inv) for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [field.sub(x, field.mul(f, y))
                        for x, y in zip(m[i], m[r])]
        r += 1
        if r == rows:
            break
    return r


def kernel_basis(field: Field, mat, ncols: int):
    """Basis of the right kernel of a (possibly empty) matrix."""
    m = [row[:] for row in mat if any(row)]
    rows = len(m)
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, rows):
            if m[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(x, inv) for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [field.sub(x, field.mul(f, y))
                        for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    basis = []
    free = [c for c in range(ncols) if c not in pivots]
    for fc in free:
        v = [field.zero()] * ncols
        v[fc] = field.one()
        for i, pc in enumerate(pivots):
            v[pc] = field.neg(m[i][fc])
        basis.append(v)
    return basis


def inverse(field: Field, mat):
    n = len(mat)
    m = [row[:] + identity(field, n)[i] for i, row in enumerate(mat)]
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if m[i][c]:
                pivot = i
                break
        if pivot is None:
            raise InternalInconsistency("singular frame matrix")
        m[c], m[pivot] = m[pivot], m[c]
        inv = field.inv(m[c][c])
        m[c] = [field.mul(x, inv) for x in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                f = m[i][c]
                m[i] = [field.sub(x, field.mul(f, y))
                        for x, y in zip(m[i], m[c])]
    return [row[n:] for row in m]
