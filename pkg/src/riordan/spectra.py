"""Floating-point spectra by cyclic Jacobi rotation, plus exact checks of integral eigenpairs."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numba import njit

from .errors import NoConvergence
from .graph import Graph, ceil_log2, family, top_power

MAX_SWEEPS = 100
REL_TOL = 1e-12


@njit(cache=True)
def _jacobi(a, tol, max_sweeps):
    n = a.shape[0]
    v = np.eye(n)
    off = 0.0
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    off += a[i, j] * a[i, j]
        off = math.sqrt(off)
        if off <= tol:
            return v, sweep, off, True
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = a[p, k]
                    aqk = a[q, k]
                    a[p, k] = c * apk - s * aqk
                    a[q, k] = s * apk + c * aqk
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * vkq
                    v[k, q] = s * vkp + c * vkq
    return v, max_sweeps, off, False


@dataclass(frozen=True, eq=False)
class SpectrumReport:
    kind: str
    eigenvalues: np.ndarray
    residual_bound: float
    trace_error: float
    eigenvectors: np.ndarray | None = field(default=None, repr=False)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "eigenvalues": [float(x) for x in self.eigenvalues],
            "residual_bound": float(self.residual_bound),
            "trace_error": float(self.trace_error),
        }


def eigen_sym(M, kind: str = "adjacency") -> SpectrumReport:
    """Eigen-decomposition of a real symmetric matrix; eigenvalues in descending order."""
    a = np.array(M, dtype=np.float64, copy=True)
    n = a.shape[0]
    if a.ndim != 2 or a.shape[1] != n:
        raise ValueError("square matrix required")
    if n and not np.allclose(a, a.T, rtol=0, atol=0):
        raise ValueError("matrix must be symmetric")
    if n == 0:
        return SpectrumReport(kind, np.zeros(0), 0.0, 0.0, np.zeros((0, 0)))
    trace = float(np.trace(a))
    norm = float(np.linalg.norm(a))
    v, _, off, ok = _jacobi(a, REL_TOL * norm, MAX_SWEEPS)
    if not ok:
        raise NoConvergence(f"Jacobi did not converge in {MAX_SWEEPS} sweeps", off)
    w = np.diag(a).copy()
    order = np.argsort(-w, kind="stable")
    w = w[order]
    return SpectrumReport(kind, w, float(off), abs(float(w.sum()) - trace), v[:, order])


@dataclass(frozen=True, eq=False)
class GraphSpectra:
    adjacency: SpectrumReport
    laplacian: SpectrumReport
    signless: SpectrumReport

    @property
    def n(self) -> int:
        return len(self.adjacency.eigenvalues)

    def _at(self, rep: SpectrumReport, i: int) -> float:
        """1-based position in the descending order; nan if out of range."""
        return float(rep.eigenvalues[i - 1]) if 1 <= i <= self.n else math.nan

    @property
    def lambda1(self) -> float:
        return self._at(self.adjacency, 1)

    @property
    def lambda_n(self) -> float:
        return self._at(self.adjacency, self.n)

    @property
    def mu1(self) -> float:
        return self._at(self.laplacian, 1)

    @property
    def algebraic_connectivity(self) -> float:
        return self._at(self.laplacian, self.n - 1)

    @property
    def q1(self) -> float:
        return self._at(self.signless, 1)

    @property
    def q2(self) -> float:
        return self._at(self.signless, 2)

    @property
    def qn(self) -> float:
        return self._at(self.signless, self.n)

    def scalars(self) -> dict:
        return {
            "lambda_1": self.lambda1,
            "lambda_n": self.lambda_n,
            "mu_1": self.mu1,
            "a": self.algebraic_connectivity,
            "q_1": self.q1,
            "q_2": self.q2,
            "q_n": self.qn,
        }


_SPECTRA_CACHE: dict[tuple[int, bytes], GraphSpectra] = {}


def graph_spectra(G: Graph) -> GraphSpectra:
    key = (G.n, np.packbits(G.adj).tobytes())
    hit = _SPECTRA_CACHE.get(key)
    if hit is None:
        if len(_SPECTRA_CACHE) > 4096:
            _SPECTRA_CACHE.clear()
        hit = _SPECTRA_CACHE[key] = GraphSpectra(
            eigen_sym(G.adj, "adjacency"),
            eigen_sym(G.laplacian(), "laplacian"),
            eigen_sym(G.signless_laplacian(), "signless"),
        )
    return hit


def zero_band(eigenvalues: np.ndarray, nullity: int) -> float:
    """Half the (nullity+1)-th smallest absolute eigenvalue; inf when everything is zero."""
    mags = np.sort(np.abs(np.asarray(eigenvalues, dtype=float)))
    if nullity >= len(mags):
        return math.inf
    return float(mags[nullity]) / 2.0


def sign_counts(eigenvalues: np.ndarray, nullity: int) -> tuple[int, int, int]:
    tau = zero_band(eigenvalues, nullity)
    w = np.asarray(eigenvalues, dtype=float)
    plus = int(np.sum(w > tau))
    minus = int(np.sum(w < -tau))
    return plus, len(w) - plus - minus, minus


def singular_max(B) -> float:
    b = np.asarray(B, dtype=np.float64)
    if b.size == 0:
        return 0.0
    top = eigen_sym(b @ b.T, "gram").eigenvalues[0]
    return math.sqrt(max(float(top), 0.0))


def count_leq(G: Graph, threshold: float) -> int:
    w = graph_spectra(G).adjacency.eigenvalues
    return int(np.sum(w <= threshold + 1e-9))


# ---------------------------------------------------------------------------
# integral eigenpairs, checked in integer arithmetic


def _unit_diff(n: int, u: int, v: int) -> list[int]:
    x = [0] * n
    x[u - 1] = 1
    x[v - 1] = -1
    return x


def _check(M: np.ndarray, x: list[int], theta: int) -> int:
    """max |M x - theta x| over integers."""
    Mi = M.astype(object)
    xv = np.asarray(x, dtype=object)
    r = Mi.dot(xv) - theta * xv
    return int(max((abs(int(t)) for t in r), default=0))


def _claim(claim_id: str, matrix: str, M: np.ndarray, x: list[int], theta: int) -> dict:
    res = _check(M, x, theta)
    return {
        "claim_id": claim_id,
        "matrix": matrix,
        "eigenvalue": theta,
        "vector": x,
        "residual": res,
        "status": "pass" if res == 0 else "fail",
    }


def _skip(claim_id: str, reason: str) -> dict:
    return {"claim_id": claim_id, "status": "skipped", "reason": reason}


def recognise_family(G: Graph) -> set[str]:
    """Names among catalan/pascal whose order-n member equals G (small orders match both)."""
    if G.n < 1:
        return set()
    return {name for name in ("catalan", "pascal") if np.array_equal(G.adj, family(name, G.n).adj)}


def eigvec_claims(G: Graph) -> list[dict]:
    """Stated integral eigenpairs for Catalan and Pascal graphs."""
    n = G.n
    fams = recognise_family(G)
    A = G.adj.astype(np.int64)
    L = G.laplacian()
    out: list[dict] = []

    if "catalan" in fams and n >= 2:
        x = _unit_diff(n, 1, 2)
        out.append(_claim("thm5.3", "adjacency", A, x, -1))
        out.append(_claim("thm5.10", "laplacian", L, x, ceil_log2(n) + 1))
    else:
        out.append(_skip("thm5.3", "not a Catalan graph of order >= 2"))
        out.append(_skip("thm5.10", "not a Catalan graph of order >= 2"))

    if "pascal" in fams and n >= 3:
        p = top_power(n)
        if n == 2 ** p + 1:
            vecs = [("X", _unit_diff(n, 1, (n + 1) // 2)), ("Y", _unit_diff(n, 1, n))]
        else:
            vecs = [("X", _unit_diff(n, 1, 2 ** p + 1))]
        for tag, x in vecs:
            out.append(_claim(f"thm5.4.{tag}", "adjacency", A, x, -1))
            out.append(_claim(f"thm5.11.{tag}", "laplacian", L, x, n))
    else:
        out.append(_skip("thm5.4", "not a Pascal graph of order >= 3"))
        out.append(_skip("thm5.11", "not a Pascal graph of order >= 3"))

    q = n.bit_length() - 1 if n >= 1 else 0  # floor(log2 n)
    if "pascal" in fams and n >= 4 and 2 ** q <= n <= 2 ** q + 2:
        x = _unit_diff(n, 2, 2 ** q)
        out.append(_claim("thm5.6", "adjacency", A, x, 0))
        out.append(_claim("thm5.8", "laplacian", L, x, (n + 1) // 2))
    else:
        out.append(_skip("thm5.6", "needs a Pascal graph with 2^p <= n <= 2^p + 2, n >= 4"))
        out.append(_skip("thm5.8", "needs a Pascal graph with 2^p <= n <= 2^p + 2, n >= 4"))
    return out
