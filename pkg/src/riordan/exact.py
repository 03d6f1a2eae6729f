"""Exact integer linear algebra: characteristic polynomial, determinant, rank, kernel, inertia."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import HypothesisNotMet, NullityTransformFailure
from .graph import Graph, RiordanGraph, classify, decompose

Matrix = Sequence[Sequence[int]]


def as_int_rows(M) -> list[list[int]]:
    if isinstance(M, Graph):
        M = M.adj
    if isinstance(M, np.ndarray):
        return [[int(x) for x in row] for row in M.tolist()]
    return [[int(x) for x in row] for row in M]


def _is_binary(rows: list[list[int]]) -> bool:
    return all(x in (0, 1) for row in rows for x in row)


def _matmul(A: list[list[int]], M: list[list[int]], binary: bool) -> list[list[int]]:
    n = len(M[0]) if M else 0
    zero = [0] * n
    out = []
    if binary:
        supports = [[j for j, a in enumerate(row) if a] for row in A]
        for s in supports:
            if not s:
                out.append(list(zero))
            elif len(s) == 1:
                out.append(list(M[s[0]]))
            else:
                out.append(list(map(sum, zip(*[M[j] for j in s]))))
        return out
    cols = list(zip(*M))
    for row in A:
        nz = [(j, a) for j, a in enumerate(row) if a]
        out.append([sum(a * col[j] for j, a in nz) for col in cols])
    return out


def charpoly(M) -> list[int]:
    """Coefficients of det(xI - M), highest degree first (leading 1).

    Faddeev-LeVerrier: M_1 = I, c_k = -tr(A M_k)/k, M_{k+1} = A M_k + c_k I.
    Every division is exact for integer A.
    """
    A = as_int_rows(M)
    n = len(A)
    coeffs = [1] + [0] * n
    if n == 0:
        return coeffs
    binary = _is_binary(A)
    Mk = [[int(i == j) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        P = _matmul(A, Mk, binary)
        tr = sum(P[i][i] for i in range(n))
        q, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("non-exact division in Faddeev-LeVerrier; matrix not integral?")
        coeffs[k] = q
        if k < n:
            for i in range(n):
                P[i][i] += q
            Mk = P
    return coeffs


def poly_eval(coeffs: Sequence[int], t: int) -> int:
    acc = 0
    for c in coeffs:
        acc = acc * t + c
    return acc


def sign_variations(seq: Sequence[int]) -> int:
    signs = [1 if c > 0 else -1 for c in seq if c]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def trailing_zeros(coeffs: Sequence[int]) -> int:
    k = 0
    for c in reversed(coeffs):
        if c:
            break
        k += 1
    return k


def inertia_from_charpoly(coeffs: Sequence[int]) -> tuple[int, int, int]:
    """(n_plus, n_zero, n_minus) of a real-rooted monic polynomial via Descartes' rule."""
    n = len(coeffs) - 1
    zero = trailing_zeros(coeffs)
    plus = sign_variations(coeffs[: n + 1 - zero])
    return plus, zero, n - plus - zero


def inertia(M) -> tuple[int, int, int]:
    return inertia_from_charpoly(charpoly(M))


def det_exact(M) -> int:
    """Bareiss fraction-free elimination."""
    a = as_int_rows(M)
    n = len(a)
    if n == 0:
        return 1
    if any(len(r) != n for r in a):
        raise ValueError("determinant needs a square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk, rk = a[k][k], a[k]
        for i in range(k + 1, n):
            ri, aik = a[i], a[i][k]
            a[i] = ri[: k + 1] + [(akk * x - aik * y) // prev for x, y in zip(ri[k + 1:], rk[k + 1:])]
        prev = akk
    return sign * a[n - 1][n - 1]


def _echelon(rows: list[list[int]], reduced: bool = False) -> tuple[list[list[int]], list[int]]:
    """Integer row echelon form with gcd-normalised rows; returns (rows, pivot columns)."""
    a = [list(r) for r in rows if any(r)]
    if not a:
        return [], []
    ncols = len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(a):
            break
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        rc, pr = a[r][c], a[r]
        targets = range(len(a)) if reduced else range(r + 1, len(a))
        for i in targets:
            if i == r or a[i][c] == 0:
                continue
            aic = a[i][c]
            new = [rc * x - aic * y for x, y in zip(a[i], pr)]
            g = math.gcd(*new)
            a[i] = [x // g for x in new] if g > 1 else new
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank_int(M) -> int:
    rows = as_int_rows(M)
    if not rows or not rows[0]:
        return 0
    return len(_echelon(rows)[1])


def rank_rational(rows: Sequence[Sequence[Fraction]]) -> int:
    ints = []
    for row in rows:
        den = math.lcm(*[Fraction(x).denominator for x in row]) if row else 1
        ints.append([int(Fraction(x) * den) for x in row])
    return rank_int(ints) if ints else 0


def nullity(M) -> int:
    """Dimension of the right kernel (columns minus rank)."""
    rows = as_int_rows(M)
    ncols = len(rows[0]) if rows else 0
    return ncols - rank_int(rows)


def kernel_basis(M) -> list[list[int]]:
    """Integer basis of the right kernel, one primitive vector per free column."""
    rows = as_int_rows(M)
    ncols = len(rows[0]) if rows else 0
    red, pivots = _echelon(rows, reduced=True)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for fcol in free:
        x = [Fraction(0)] * ncols
        x[fcol] = Fraction(1)
        for row, pc in zip(red, pivots):
            x[pc] = Fraction(-row[fcol], row[pc])
        den = math.lcm(*[v.denominator for v in x])
        v = [int(t * den) for t in x]
        g = math.gcd(*v)
        basis.append([t // g for t in v])
    return basis


def solve_rational(M, rhs) -> list[list[Fraction]]:
    """M^{-1} rhs by Gauss-Jordan over the rationals; M must be invertible."""
    a = [[Fraction(x) for x in row] for row in as_int_rows(M)]
    b = [[Fraction(x) for x in row] for row in as_int_rows(rhs)]
    n = len(a)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[c], a[piv] = a[piv], a[c]
        b[c], b[piv] = b[piv], b[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        b[c] = [x * inv for x in b[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
                b[i] = [x - f * y for x, y in zip(b[i], b[c])]
    return b


# ---------------------------------------------------------------------------
# summaries


@dataclass(frozen=True)
class ExactSummary:
    charpoly: tuple[int, ...]
    det: int
    rank: int
    nullity: int
    inertia: tuple[int, int, int]

    def to_json(self) -> dict:
        plus, zero, minus = self.inertia
        return {
            "charpoly": [str(c) for c in self.charpoly],
            "det": str(self.det),
            "rank": self.rank,
            "nullity": self.nullity,
            "inertia": {"plus": plus, "zero": zero, "minus": minus},
        }


def exact_summary(M) -> ExactSummary:
    cp = charpoly(M)
    n = len(cp) - 1
    zero = trailing_zeros(cp)
    return ExactSummary(
        charpoly=tuple(cp),
        det=(-1) ** n * cp[-1],
        rank=n - zero,
        nullity=zero,
        inertia=inertia_from_charpoly(cp),
    )


_SUMMARY_CACHE: dict[tuple[int, bytes], ExactSummary] = {}


def graph_summary(G: Graph) -> ExactSummary:
    key = (G.n, np.packbits(G.adj).tobytes())
    hit = _SUMMARY_CACHE.get(key)
    if hit is None:
        if len(_SUMMARY_CACHE) > 4096:
            _SUMMARY_CACHE.clear()
        hit = _SUMMARY_CACHE[key] = exact_summary(G.adj)
    return hit


# ---------------------------------------------------------------------------
# block-structure theorems


def schur_pair_check(G: RiordanGraph) -> tuple[int, int, bool]:
    """det(G) against det(B)^2 for even-order o- or e-decomposable graphs."""
    if G.n % 2:
        raise HypothesisNotMet("determinant identity needs even order")
    labels = classify(G)
    if not ({"o_decomposable", "e_decomposable"} & labels):
        raise HypothesisNotMet("determinant identity needs an o- or e-decomposable graph")
    blocks = decompose(G)
    det_g = graph_summary(G).det
    det_b = det_exact(blocks.B)
    return det_g, det_b, det_g == det_b * det_b


def _require_io_bell(G: RiordanGraph) -> None:
    labels = classify(G)
    if not {"io_decomposable", "bell"} <= labels:
        raise HypothesisNotMet("needs an io-decomposable Bell-type graph")


def stacked_rank(G: RiordanGraph) -> int:
    """rank of [A_{ceil(n/2)}; B^T] for io-decomposable Bell graphs."""
    _require_io_bell(G)
    blocks = decompose(G)
    return rank_int(np.vstack([blocks.X, blocks.B.T]))


def block_nullity(G: RiordanGraph) -> int:
    blocks = decompose(G)
    return nullity(blocks.B) if blocks.B.size else blocks.B.shape[1]


def nullity_sandwich(G: RiordanGraph) -> tuple[int, int, int]:
    """(eta(B), eta(G), upper bound 2 eta(B) + n mod 2) for o-decomposable graphs."""
    if "o_decomposable" not in classify(G):
        raise HypothesisNotMet("nullity sandwich needs an o-decomposable graph")
    eb = block_nullity(G)
    return eb, graph_summary(G).nullity, 2 * eb + G.n % 2


def transform_matrix(G: RiordanGraph) -> np.ndarray:
    """The square matrix M built from rows r_i of A_{ceil(n/2)} and b_i of B^T."""
    blocks = decompose(G)
    R = blocks.X.astype(np.int64)
    Bt = blocks.B.T.astype(np.int64)
    if G.n % 2 == 0:
        return R - Bt
    k = (G.n + 1) // 2
    M = np.empty((k, k), dtype=np.int64)
    M[: k - 1] = R[: k - 1] - Bt[: k - 1]
    M[k - 1] = R[k - 1] - Bt[k - 2]
    return M


def nullity_transform(G: RiordanGraph) -> tuple[int, int, int, np.ndarray]:
    """(eta_G, eta_B, eta(B^T M^-1 B), M) with eta_G = eta(B^T M^-1 B) enforced."""
    _require_io_bell(G)
    if G.n < 2:
        raise HypothesisNotMet("needs n >= 2")
    blocks = decompose(G)
    M = transform_matrix(G)
    if det_exact(M) == 0:
        raise NullityTransformFailure(f"{G.label()}: transform matrix M is singular")
    B = blocks.B.astype(np.int64)
    MinvB = solve_rational(M, B)
    T = [[sum(Fraction(int(B[r][i])) * MinvB[r][j] for r in range(B.shape[0])) for j in range(B.shape[1])]
         for i in range(B.shape[1])]
    eta_t = B.shape[1] - rank_rational(T)
    eta_g = graph_summary(G).nullity
    eta_b = block_nullity(G)
    if eta_t != eta_g:
        raise NullityTransformFailure(f"{G.label()}: eta(G) = {eta_g} but eta(B^T M^-1 B) = {eta_t}")
    return eta_g, eta_b, eta_t, M


def kernel_odd_vanishes(G: Graph) -> bool:
    """Every kernel vector of A(G) is zero on the odd labels 1, 3, 5, ..."""
    return all(not any(v[0::2]) for v in kernel_basis(G.adj))
