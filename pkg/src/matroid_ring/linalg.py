"""Exact integer and rational linear algebra for small dense matrices."""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

import numpy as np


def bareiss_det(matrix) -> int:
    """Determinant by fraction-free Gaussian elimination; every division is exact."""
    A = np.array(matrix, dtype=object)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("determinant needs a square matrix")
    k = A.shape[0]
    if k == 0:
        return 1
    A = np.vectorize(int, otypes=[object])(A)
    sign = 1
    prev = 1
    for p in range(k - 1):
        if A[p, p] == 0:
            nz = np.nonzero(A[p + 1:, p] != 0)[0]
            if not len(nz):
                return 0
            q = p + 1 + int(nz[0])
            A[[p, q]] = A[[q, p]]
            sign = -sign
        piv = A[p, p]
        sub = A[p + 1:, p + 1:] * piv - np.outer(A[p + 1:, p], A[p, p + 1:])
        A[p + 1:, p + 1:] = sub // prev
        A[p + 1:, p] = 0
        prev = piv
    return sign * int(A[k - 1, k - 1])


def rank_mod_p(matrix, p: int = 2_147_483_629) -> int:
    """Rank over GF(p); a lower bound for the rank over Q, equal for all but finitely many p."""
    A = np.array(matrix, dtype=np.int64) % p
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        nz = np.nonzero(A[r:, c])[0]
        if not len(nz):
            continue
        q = r + int(nz[0])
        A[[r, q]] = A[[q, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = (A[r] * inv) % p
        col = A[:, c].copy()
        col[r] = 0
        # int64 products stay below 2^62 because entries are < 2^31
        A = (A - np.outer(col, A[r]) % p) % p
        r += 1
        if r == rows:
            break
    return r


def rational_nullspace(matrix) -> list[list[int]]:
    """Integer basis (primitive vectors) of the right kernel of an integer matrix."""
    rows = [[Fraction(int(x)) for x in row] for row in np.asarray(matrix).tolist()]
    ncols = np.asarray(matrix).shape[1]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        rows[r] = [x / lead for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -rows[i][fc]
        den = lcm(*(x.denominator for x in vec))
        ints = [int(x * den) for x in vec]
        g = gcd(*ints)
        basis.append([x // g for x in ints])
    return basis
