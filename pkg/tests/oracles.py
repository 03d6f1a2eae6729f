"""Slow, obviously-correct reference implementations used only by tests.

Nothing here imports the package under test.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import numpy as np


# --- GF(2) series as coefficient lists ---------------------------------------

def pmul(a, b, n):
    out = [0] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if x:
            for j, y in enumerate(b[: n + 1 - i]):
                out[i + j] ^= x & y
    return out


def pinv(a, n):
    """Long division 1 / a mod 2."""
    assert a[0] == 1
    out = [0] * (n + 1)
    rem = [1] + [0] * n
    for i in range(n + 1):
        out[i] = rem[i]
        if out[i]:
            for j in range(i, n + 1):
                if j - i < len(a):
                    rem[j] ^= a[j - i]
    return out


def catalan_int(n):
    return math.comb(2 * n, n) // (n + 1)


def catalan_mod2(n):
    return [catalan_int(i) % 2 for i in range(n + 1)]


def lucas_binom_mod2(i, j):
    return int(j >= 0 and (j & ~i) == 0)


def riordan_adjacency(g, f, n):
    """r_{i,j} = [z^{i-2}] g f^{j-1} mod 2 for i > j (1-based), symmetric."""
    A = np.zeros((n, n), dtype=np.int64)
    col = list(g) + [0] * (n + 2)
    for j in range(1, n + 1):
        for i in range(j + 1, n + 1):
            A[i - 1, j - 1] = A[j - 1, i - 1] = col[i - 2]
        col = pmul(col, list(f) + [0] * (n + 2), n + 1)
    return A


# --- exact linear algebra -------------------------------------------------

def det_fraction(M):
    a = [[Fraction(int(x)) for x in row] for row in M]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            t = a[r][c] / a[c][c]
            if t:
                a[r] = [x - t * y for x, y in zip(a[r], a[c])]
    return int(det)


def rank_fraction(M):
    a = [[Fraction(int(x)) for x in row] for row in M]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        for i in range(rows):
            if i != r and a[i][c]:
                t = a[i][c] / a[r][c]
                a[i] = [x - t * y for x, y in zip(a[i], a[r])]
        r += 1
    return r


def charpoly_numpy(M):
    return [int(round(c)) for c in np.poly(np.asarray(M, dtype=float))]


def inertia_numpy(M, tol=1e-7):
    w = np.linalg.eigvalsh(np.asarray(M, dtype=float))
    return int((w > tol).sum()), int((abs(w) <= tol).sum()), int((w < -tol).sum())


# --- combinatorics -----------------------------------------------------------

def clique_number(A):
    n = len(A)
    best = 1 if n else 0
    for k in range(2, n + 1):
        if any(all(A[u][v] for u, v in itertools.combinations(S, 2))
               for S in itertools.combinations(range(n), k)):
            best = k
        else:
            break
    return best


def chromatic_number(A):
    n = len(A)
    if n == 0:
        return 0
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if A[u][v]]
    for k in range(1, n + 1):
        for col in itertools.product(range(k), repeat=n - 1):
            c = (0,) + col
            if all(c[u] != c[v] for u, v in edges):
                return k
    return n


def diameter_fw(A):
    n = len(A)
    D = np.where(np.asarray(A) > 0, 1.0, np.inf)
    np.fill_diagonal(D, 0.0)
    for k in range(n):
        D = np.minimum(D, D[:, [k]] + D[[k], :])
    return float(D.max()) if n else 0.0
