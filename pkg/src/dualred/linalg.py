"""Dense exact linear algebra kernels.

Prime-field matrices are int64 numpy arrays with entries in [0, p); the
hot kernels (row reduction) are numba-compiled when numba imports and the
environment flag DUALRED_NUMBA is not "0", with a vectorized pure-numpy
fallback otherwise.  Rational matrices use Fraction arithmetic in plain
Python lists; they stay small in practice.

benchmarks/bench_linalg.py compares the two prime-field paths.
"""

import os
from fractions import Fraction

import numpy as np

HAS_NUMBA = False
if os.environ.get("DUALRED_NUMBA", "1") != "0":
    try:
        import numba

        HAS_NUMBA = True
    except ImportError:
        numba = None


def _rref_modp_py(a, p):
    """In-place row echelon form mod p; returns (rank, pivot columns)."""
    n, m = a.shape
    piv_cols = []
    r = 0
    for c in range(m):
        if r == n:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = a[r] * inv % p
        col = a[:, c].copy()
        col[r] = 0
        rows = np.nonzero(col)[0]
        if rows.size:
            a[rows] = (a[rows] - np.outer(col[rows], a[r])) % p
        piv_cols.append(c)
        r += 1
    return r, piv_cols


if HAS_NUMBA:

    @numba.njit(cache=True)
    def _rref_modp_nb(a, p):  # pragma: no cover - exercised via wrapper
        n, m = a.shape
        piv = np.empty(min(n, m), dtype=np.int64)
        r = 0
        for c in range(m):
            if r == n:
                break
            k = -1
            for i in range(r, n):
                if a[i, c] != 0:
                    k = i
                    break
            if k == -1:
                continue
            if k != r:
                for j in range(m):
                    t = a[r, j]
                    a[r, j] = a[k, j]
                    a[k, j] = t
            # Fermat inverse; p is prime and < 2**31 so products fit int64
            inv = 1
            b = a[r, c] % p
            e = p - 2
            while e:
                if e & 1:
                    inv = inv * b % p
                b = b * b % p
                e >>= 1
            for j in range(m):
                a[r, j] = a[r, j] * inv % p
            for i in range(n):
                if i != r and a[i, c] != 0:
                    f = a[i, c]
                    for j in range(m):
                        a[i, j] = (a[i, j] - f * a[r, j]) % p
            piv[r] = c
            r += 1
        return r, piv[:r]


def rref_modp(a, p):
    """Reduced row echelon form mod p.  Returns (rref array, rank, pivots)."""
    a = np.array(a, dtype=np.int64) % p
    if a.size == 0:
        return a, 0, []
    if HAS_NUMBA:
        rank, piv = _rref_modp_nb(a, p)
        return a, int(rank), [int(c) for c in piv]
    rank, piv = _rref_modp_py(a, p)
    return a, rank, piv


def rank_modp(a, p):
    return rref_modp(a, p)[1]


def nullspace_modp(a, p):
    """Basis of the right nullspace mod p, as rows of the returned array."""
    a = np.array(a, dtype=np.int64) % p
    n, m = a.shape if a.ndim == 2 else (0, 0)
    if a.size == 0:
        return np.eye(m, dtype=np.int64)
    red, rank, piv = rref_modp(a, p)
    free = [c for c in range(m) if c not in set(piv)]
    basis = np.zeros((len(free), m), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for r, pc in enumerate(piv):
            basis[i, pc] = (-int(red[r, fc])) % p
    return basis


def rref_frac(rows):
    """Reduced row echelon form over Q on a list of Fraction lists.
    Returns (rows, rank, pivot columns); input is copied."""
    a = [list(map(Fraction, row)) for row in rows]
    if not a:
        return a, 0, []
    n, m = len(a), len(a[0])
    piv_cols = []
    r = 0
    for c in range(m):
        if r == n:
            break
        k = next((i for i in range(r, n) if a[i][c] != 0), None)
        if k is None:
            continue
        a[r], a[k] = a[k], a[r]
        inv = Fraction(1) / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(n):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv_cols.append(c)
        r += 1
    return a, r, piv_cols


def rank_frac(rows):
    return rref_frac(rows)[1]


def nullspace_frac(rows):
    """Basis of the right nullspace over Q, as a list of Fraction lists."""
    if not rows:
        return []
    m = len(rows[0])
    red, rank, piv = rref_frac(rows)
    free = [c for c in range(m) if c not in set(piv)]
    basis = []
    for fc in free:
        v = [Fraction(0)] * m
        v[fc] = Fraction(1)
        for r, pc in enumerate(piv):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def rank_over(field, rows):
    """Rank of a dense matrix given as nested lists of field scalars."""
    if field.char == 0:
        return rank_frac(rows)
    if not len(rows):
        return 0
    return rank_modp(np.array(rows, dtype=np.int64), field.char)


def nullspace_over(field, rows):
    """Right nullspace basis vectors (lists of field scalars)."""
    if field.char == 0:
        return nullspace_frac(rows)
    if not len(rows):
        return []
    basis = nullspace_modp(np.array(rows, dtype=np.int64), field.char)
    return [[int(x) for x in row] for row in basis]
