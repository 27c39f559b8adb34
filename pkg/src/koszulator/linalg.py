"""Exact dense linear algebra over a coefficient field.

Matrices are lists of rows (lists of field scalars).  Prime-field
computations run on numpy int64 arrays; rational ones use Fractions.
Everything is deterministic: pivots are always the first nonzero column.
"""

from __future__ import annotations

import numpy as np


def _to_array(rows, p: int) -> np.ndarray:
    return np.array(rows, dtype=np.int64) % p


def _rref_mod_p(a: np.ndarray, p: int):
    a = a % p
    m, n = a.shape
    pivots = []
    r = 0
    for c in range(n):
        if r >= m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        col = a[:, c].copy()
        col[r] = 0
        a -= np.outer(col, a[r])
        a %= p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def _rref_frac(rows):
    a = [list(row) for row in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        if r >= m:
            break
        i = next((k for k in range(r, m) if a[k][c] != 0), None)
        if i is None:
            continue
        a[r], a[i] = a[i], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for k in range(m):
            if k != r and a[k][c] != 0:
                f = a[k][c]
                a[k] = [x - f * y for x, y in zip(a[k], a[r])]
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rref(rows, field):
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    if not rows or not rows[0]:
        return [], []
    if field.is_prime:
        red, piv = _rref_mod_p(_to_array(rows, field.p), field.p)
        return [[int(x) for x in row] for row in red], piv
    return _rref_frac(rows)


def rank(rows, field) -> int:
    return len(rref(rows, field)[1])


def nullspace(rows, field, ncols: int):
    """Basis of the right kernel, one vector per free column (RREF convention)."""
    if ncols == 0:
        return []
    if not rows:
        basis = []
        for j in range(ncols):
            v = [field.zero()] * ncols
            v[j] = field.one()
            basis.append(v)
        return basis
    red, piv = rref(rows, field)
    piv_set = set(piv)
    basis = []
    for j in range(ncols):
        if j in piv_set:
            continue
        v = [field.zero()] * ncols
        v[j] = field.one()
        for r, c in enumerate(piv):
            v[c] = field.neg(red[r][j])
        basis.append(v)
    return basis


def reduce_against(vec, red_rows, pivots, field):
    """Reduce vec against rows already in RREF; returns the residual."""
    v = list(vec)
    for row, c in zip(red_rows, pivots):
        if not field.is_zero(v[c]):
            f = v[c]
            v = [field.sub(x, field.mul(f, y)) for x, y in zip(v, row)]
    return v


def in_span(vectors, vec, field) -> bool:
    """Is vec in the row span of vectors?"""
    if all(field.is_zero(x) for x in vec):
        return True
    if not vectors:
        return False
    base = rank(vectors, field)
    return rank(list(vectors) + [list(vec)], field) == base


def mat_vec(rows, vec, field):
    out = []
    for row in rows:
        s = field.zero()
        for a, b in zip(row, vec):
            if not field.is_zero(a) and not field.is_zero(b):
                s = field.add(s, field.mul(a, b))
        out.append(s)
    return out
