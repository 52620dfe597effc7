"""Exact dense linear algebra over the coefficient fields.

Prime-field matrices are reduced with vectorized numpy int64 arithmetic
(products of two residues < 2**31 stay inside int64); rational matrices fall
back to Fraction row operations.  Everything returns exact results.
"""

from __future__ import annotations

import numpy as np


def _fp_rref(rows, p):
    """Reduced row echelon form mod p.  Returns (array, pivot column list)."""
    a = np.array(rows, dtype=np.int64) % p
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        col = a[:, c].copy()
        col[r] = 0
        a = (a - np.outer(col, a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def _qq_rref(rows):
    a = [list(r) for r in rows]
    if not a:
        return a, []
    nrows, ncols = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rref(field, rows):
    """Reduced row echelon form; returns (rows as lists of scalars, pivots)."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    if field.is_prime_field:
        a, pivots = _fp_rref(rows, field.p)
        return [[int(x) for x in row] for row in a], pivots
    return _qq_rref(rows)


def rank(field, rows):
    return len(rref(field, rows)[1])


def kernel_basis(field, rows, ncols):
    """Basis of {v : rows @ v = 0}, one vector per free column, exact and
    deterministic (free columns in ascending order)."""
    if not rows:
        red, pivots = [], []
    else:
        red, pivots = rref(field, rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fcol in free:
        v = [field.zero] * ncols
        v[fcol] = field.one
        for r, pcol in enumerate(pivots):
            v[pcol] = field.neg(red[r][fcol])
        basis.append(v)
    return basis


def det(field, rows):
    """Determinant of a square scalar matrix."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return field.one
    if field.is_prime_field:
        p = field.p
        a = np.array(rows, dtype=np.int64) % p
        sign = 1
        d = 1
        for c in range(n):
            nz = np.nonzero(a[c:, c])[0]
            if nz.size == 0:
                return 0
            piv = c + int(nz[0])
            if piv != c:
                a[[c, piv]] = a[[piv, c]]
                sign = -sign
            d = d * int(a[c, c]) % p
            inv = pow(int(a[c, c]), -1, p)
            col = a[c + 1:, c].copy()
            a[c + 1:] = (a[c + 1:] - np.outer(col * inv % p, a[c])) % p
        return d * sign % p
    a = [list(r) for r in rows]
    sign = 1
    d = field.one
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            return field.zero
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        d = field.mul(d, a[c][c])
        inv = field.inv(a[c][c])
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = field.mul(a[i][c], inv)
                a[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(a[i], a[c])]
    return d if sign == 1 else field.neg(d)


def inverse(field, rows):
    """Inverse of a square matrix, or None if singular."""
    n = len(rows)
    aug = [list(r) + [field.one if i == j else field.zero for j in range(n)]
           for i, r in enumerate(rows)]
    red, pivots = rref(field, aug)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in red[:n]]


class Echelon:
    """Incremental row echelon form: feed vectors one at a time and learn
    whether each one enlarges the span."""

    def __init__(self, field, ncols):
        self.field = field
        self.ncols = ncols
        self.rows = {}  # pivot column -> normalized row

    @property
    def rank(self):
        return len(self.rows)

    def add(self, vec):
        """Reduce ``vec`` against the current rows; returns True (and keeps
        the reduced vector) if it is independent of them."""
        field = self.field
        if field.is_prime_field:
            p = field.p
            v = np.array(vec, dtype=np.int64) % p
            while True:
                nz = np.flatnonzero(v)
                if nz.size == 0:
                    return False
                c = int(nz[0])
                row = self.rows.get(c)
                if row is None:
                    self.rows[c] = v * pow(int(v[c]), -1, p) % p
                    return True
                v = (v - int(v[c]) * row) % p
        v = list(vec)
        while True:
            c = next((i for i, x in enumerate(v) if x != 0), None)
            if c is None:
                return False
            row = self.rows.get(c)
            if row is None:
                inv = field.inv(v[c])
                self.rows[c] = [field.mul(x, inv) for x in v]
                return True
            f = v[c]
            v = [field.sub(x, field.mul(f, y)) for x, y in zip(v, row)]
