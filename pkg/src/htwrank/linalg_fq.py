"""Linear algebra over a prime field F_q with int64 numpy arrays.

All entries are kept reduced to [0, q). Products of two entries and row
sums stay far below 2**63 for the q used here (checked in ``_check``).
"""

from __future__ import annotations

import numpy as np


def _check(q, n):
    if q * q * max(n, 1) >= 2 ** 62:
        raise OverflowError(f"prime {q} too large for int64 arithmetic at size {n}")


def inv(a, q):
    return pow(int(a), -1, q)


def rref(a, q):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    a = np.array(a, dtype=np.int64) % q
    rows, cols = a.shape
    _check(q, cols)
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r] = a[r] * inv(a[r, c], q) % q
        col = a[:, c].copy()
        col[r] = 0
        a = (a - np.outer(col, a[r])) % q
        pivots.append(c)
        r += 1
    return a[:r], pivots


def nullspace(a, q):
    """Basis (as rows) of {x : a @ x == 0}."""
    a = np.asarray(a, dtype=np.int64)
    cols = a.shape[1]
    red, pivots = rref(a, q)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(pivots):
            basis[k, c] = -red[i, f] % q
    return basis


def charpoly(a, q):
    """Characteristic polynomial det(xI - a), coefficients lowest first."""
    h = _hessenberg(a, q)
    n = h.shape[0]
    # p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik * prod_{j=i+1..k} h_{j,j-1} * p_{i-1}
    polys = [np.array([1], dtype=np.int64)]
    for k in range(n):
        pk = np.zeros(k + 2, dtype=np.int64)
        prev = polys[-1]
        pk[1:] += prev
        pk[:-1] -= h[k, k] * prev % q
        prod = 1
        for i in range(k - 1, -1, -1):
            prod = prod * int(h[i + 1, i]) % q
            if prod == 0:
                break
            c = int(h[i, k]) * prod % q
            if c:
                pi = polys[i]
                pk[: len(pi)] -= c * pi % q
        polys.append(pk % q)
    return polys[-1]


def _hessenberg(a, q):
    a = np.array(a, dtype=np.int64) % q
    n = a.shape[0]
    _check(q, n)
    for j in range(n - 2):
        nz = np.nonzero(a[j + 1:, j])[0]
        if nz.size == 0:
            continue
        p = j + 1 + int(nz[0])
        if p != j + 1:
            a[[j + 1, p]] = a[[p, j + 1]]
            a[:, [j + 1, p]] = a[:, [p, j + 1]]
        piv_inv = inv(a[j + 1, j], q)
        m = a[j + 2:, j] * piv_inv % q
        if not m.any():
            continue
        # row_i -= m_i row_{j+1}; then col_{j+1} += sum_i m_i col_i (similarity)
        a[j + 2:] = (a[j + 2:] - np.outer(m, a[j + 1])) % q
        a[:, j + 1] = (a[:, j + 1] + (a[:, j + 2:] @ m) % q) % q
    return a


def roots(poly, q):
    """All roots in F_q of a polynomial (coefficients lowest first), ascending."""
    xs = np.arange(q, dtype=np.int64)
    acc = np.zeros(q, dtype=np.int64)
    for c in reversed(poly):
        acc = (acc * xs + int(c)) % q
    return [int(x) for x in np.nonzero(acc == 0)[0]]
