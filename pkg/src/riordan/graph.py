"""Binary Riordan matrices, Riordan graphs, their decomposition and classification.

Vertices are labelled 1..n at the API boundary; adjacency arrays are
0-indexed, so vertex v sits at row v - 1.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import fps
from .errors import (
    ClassificationMismatch,
    DecompositionHypothesisFailed,
    FormulaMismatch,
    HypothesisNotMet,
    NonzeroLowTerm,
    PartitionNotIndependent,
    SizeCapExceeded,
    TruncationExceeded,
    UnknownFamily,
)
from .fps import Gf2Series
from .series_lang import eval_text

FAMILIES: dict[str, tuple[str, str]] = {
    "pascal": ("1/(1-z)", "z/(1-z)"),
    "catalan": ("C", "z*C"),
    "path": ("1", "z"),
    "complete": ("1/(1-z)", "z"),
    "complete_bipartite": ("1/(1-z^2)", "z"),
    "null": ("0", "z"),
}

LABELS = (
    "appell", "bell", "checkerboard", "derivative", "proper",
    "o_decomposable", "e_decomposable", "io_decomposable", "ie_decomposable",
)


def bits_to_array(bits: int, length: int) -> np.ndarray:
    """Low `length` bits of an int as a uint8 vector (bit i -> entry i)."""
    if length <= 0:
        return np.zeros(0, dtype=np.uint8)
    nbytes = (length + 7) // 8
    bits &= (1 << length) - 1
    raw = np.frombuffer(bits.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:length].copy()


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.uint8)
    a.setflags(write=False)
    return a


# ---------------------------------------------------------------------------
# binary Riordan matrices


@dataclass(frozen=True, eq=False)
class BinaryRiordanMatrix:
    rows: int
    cols: int
    entries: np.ndarray

    def column_bits(self, j: int) -> int:
        return int.from_bytes(np.packbits(self.entries[:, j], bitorder="little").tobytes(), "little")


def binary_riordan(g: Gf2Series, f: Gf2Series, r: int, c: int) -> BinaryRiordanMatrix:
    """r x c leading block of B(g, f): entry (i, j) = [z^i] g f^j mod 2."""
    if f.bits & 1:
        raise NonzeroLowTerm("f(0) must be 0 for a Riordan matrix")
    entries = np.zeros((max(r, 0), max(c, 0)), dtype=np.uint8)
    if r <= 0 or c <= 0:
        return BinaryRiordanMatrix(max(r, 0), max(c, 0), _frozen(entries))
    t = r - 1
    if g.trunc < t or (c > 1 and f.trunc < t):
        raise TruncationExceeded(f"binary Riordan block of {r} rows needs series known to degree {t}")
    mask = (1 << r) - 1
    col = g.bits & mask
    fb = f.bits & mask
    for j in range(c):
        entries[:, j] = bits_to_array(col, r)
        if j + 1 < c:
            col = fps.clmul(col, fb, t)
    return BinaryRiordanMatrix(r, c, _frozen(entries))


# ---------------------------------------------------------------------------
# graphs


@dataclass(frozen=True, eq=False)
class Graph:
    """Labelled simple graph on vertices 1..n."""

    adj: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.adj)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency must be square")
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency must be symmetric")
        if a.size and np.any(np.diag(a)):
            raise ValueError("adjacency must have zero diagonal")
        object.__setattr__(self, "adj", _frozen(a))

    @property
    def n(self) -> int:
        return self.adj.shape[0]

    @property
    def m(self) -> int:
        return int(self.adj.sum()) // 2

    def degrees(self) -> np.ndarray:
        return self.adj.sum(axis=1).astype(np.int64)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u - 1, v - 1])

    def edges(self) -> list[tuple[int, int]]:
        iu, ju = np.nonzero(np.triu(self.adj, 1))
        return [(int(i) + 1, int(j) + 1) for i, j in zip(iu, ju)]

    def induced(self, vertices: Sequence[int]) -> "Graph":
        idx = np.asarray([v - 1 for v in vertices], dtype=np.int64)
        return Graph(self.adj[np.ix_(idx, idx)])

    def complement(self) -> "Graph":
        c = 1 - self.adj
        np.fill_diagonal(c, 0)
        return Graph(c)

    def laplacian(self) -> np.ndarray:
        a = self.adj.astype(np.int64)
        return np.diag(a.sum(axis=1)) - a

    def signless_laplacian(self) -> np.ndarray:
        a = self.adj.astype(np.int64)
        return np.diag(a.sum(axis=1)) + a

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self.adj, other.adj)

    __hash__ = None


@dataclass(frozen=True, eq=False)
class RiordanGraph(Graph):
    """Graph G_n(g, f) with its generating pair as provenance."""

    g: Gf2Series | None = None
    f: Gf2Series | None = None
    g_expr: str | None = None
    f_expr: str | None = None
    family: str | None = None

    @property
    def descriptor(self) -> tuple[str | None, str | None, int]:
        return (self.g_expr, self.f_expr, self.n)

    def label(self) -> str:
        if self.family:
            return f"{self.family}[{self.n}]"
        return f"G_{self.n}({self.g_expr}, {self.f_expr})"


def riordan_lower(g: Gf2Series, f: Gf2Series, n: int) -> np.ndarray:
    """Strict lower triangle B(zg, f)_n, column by column via repeated multiplication by f."""
    a = np.zeros((n, n), dtype=np.uint8)
    if n <= 1:
        return a
    t = n - 2
    mask = (1 << (t + 1)) - 1
    col = g.bits & mask
    fb = f.bits & mask
    for j in range(n - 1):
        # row i of column j holds [z^(i-1)] g f^j
        a[1:, j] = bits_to_array(col, n - 1)
        a[: j + 1, j] = 0
        col = fps.clmul(col, fb, t)
    return a


def build_graph(
    g: Gf2Series,
    f: Gf2Series,
    n: int,
    g_expr: str | None = None,
    f_expr: str | None = None,
    family: str | None = None,
) -> RiordanGraph:
    if n < 0:
        raise ValueError("order must be non-negative")
    if f.bits & 1:
        raise NonzeroLowTerm("f(0) must be 0")
    if n >= 2 and g.trunc < n - 2:
        raise TruncationExceeded(f"g must be known to degree {n - 2}, have {g.trunc}")
    if n >= 3 and f.trunc < n - 2:
        raise TruncationExceeded(f"f must be known to degree {n - 2}, have {f.trunc}")
    low = riordan_lower(g, f, n)
    return RiordanGraph(low | low.T, g=g, f=f, g_expr=g_expr, f_expr=f_expr, family=family)


def series_margin(n: int) -> int:
    """Truncation degree requested for the generating pair of an order-n graph."""
    return max(n, 1) + 2


def from_expressions(g_text: str, f_text: str, n: int, family: str | None = None) -> RiordanGraph:
    t = series_margin(n)
    return build_graph(eval_text(g_text, t), eval_text(f_text, t), n, g_text, f_text, family)


def family(name: str, n: int) -> RiordanGraph:
    if name not in FAMILIES:
        raise UnknownFamily(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")
    if n < 1:
        raise ValueError("order must be >= 1")
    g_text, f_text = FAMILIES[name]
    return from_expressions(g_text, f_text, n, family=name)


def eq2_entry(g: Gf2Series, f: Gf2Series, i: int, j: int) -> int:
    """Direct coefficient rule for vertices i > j >= 1: [z^(i-2)] g f^(j-1) mod 2."""
    if i <= j:
        raise ValueError("need i > j")
    return fps.mul(g, fps.power(f, j - 1))[i - 2]


# ---------------------------------------------------------------------------
# decomposition


def odd_first(n: int) -> list[int]:
    return list(range(1, n + 1, 2)) + list(range(2, n + 1, 2))


@dataclass(frozen=True, eq=False)
class DecompositionBlocks:
    X: np.ndarray
    Y: np.ndarray
    B: np.ndarray
    perm: tuple[int, ...]

    def reassemble(self) -> np.ndarray:
        """Undo the odd-first relabelling of [[X, B], [B^T, Y]]."""
        n = len(self.perm)
        blocked = np.block([[self.X, self.B], [self.B.T, self.Y]]) if n else np.zeros((0, 0))
        out = np.zeros((n, n), dtype=np.uint8)
        idx = np.asarray(self.perm, dtype=np.int64) - 1
        out[np.ix_(idx, idx)] = blocked
        return out


def extract_blocks(G: Graph) -> DecompositionBlocks:
    a = G.adj
    return DecompositionBlocks(
        X=_frozen(a[0::2, 0::2]),
        Y=_frozen(a[1::2, 1::2]),
        B=_frozen(a[0::2, 1::2]),
        perm=tuple(odd_first(G.n)),
    )


def _f_linear_unit(f: Gf2Series) -> bool:
    return f.trunc >= 1 and f[1] == 1


def formula_blocks(g: Gf2Series, f: Gf2Series, n: int) -> DecompositionBlocks:
    """X, Y, B recomputed from odd/even extractions of g, gf/z, zg and gf."""
    n1, n2 = (n + 1) // 2, n // 2
    gf = fps.mul(g, f)
    X = build_graph(fps.odd_part(g), f, n1).adj
    Y = build_graph(fps.odd_part(gf.shift_down(1)), f, n2).adj
    upper = binary_riordan(fps.odd_part(gf).shift_up(1), f, n1, n2).entries
    lower = binary_riordan(fps.even_part(g), f, n2, n1).entries
    return DecompositionBlocks(X=X, Y=Y, B=_frozen(upper ^ lower.T), perm=tuple(odd_first(n)))


def decompose(G: RiordanGraph) -> DecompositionBlocks:
    if G.n == 1:
        return extract_blocks(G)
    if G.g is None or G.f is None:
        raise HypothesisNotMet("decomposition needs the generating pair")
    if not _f_linear_unit(G.f):
        raise DecompositionHypothesisFailed("decomposition requires [z^1]f = 1")
    got = extract_blocks(G)
    want = formula_blocks(G.g, G.f, G.n)
    for name in ("X", "Y", "B"):
        if not np.array_equal(getattr(got, name), getattr(want, name)):
            raise FormulaMismatch(f"block {name} of {G.label()} differs between extraction and formula")
    return got


# ---------------------------------------------------------------------------
# classification


def _agree(a: Gf2Series, b: Gf2Series, deg: int) -> bool:
    if deg < 0:
        return True
    if a.trunc < deg or b.trunc < deg:
        raise TruncationExceeded(f"series must be known to degree {deg}")
    m = (1 << (deg + 1)) - 1
    return (a.bits & m) == (b.bits & m)


def _zero_at(a: Gf2Series, indices: Iterable[int]) -> bool:
    return all(a[i] == 0 for i in indices)


def classify(G: RiordanGraph) -> frozenset[str]:
    """Type labels of G_n(g, f).

    Type predicates (Appell, Bell, derivative, checkerboard) compare the mod-2
    series on the degrees that influence an order-n graph.  Decomposability
    labels are computed from the adjacency blocks and, where a coefficient
    criterion exists, from the series as well; the two must agree.
    """
    n, g, f = G.n, G.g, G.f
    if g is None or f is None:
        raise HypothesisNotMet("classification needs the generating pair")
    d = n - 2  # highest degree of g and f that reaches the adjacency matrix
    t = max(d, 0) + 1
    z = Gf2Series.z(t)
    labels: set[str] = set()

    if _agree(f, z, d):
        labels.add("appell")
    if _agree(f, fps.mul(z, g), d):
        labels.add("bell")
    if _agree(g, fps.derivative(f), d):
        labels.add("derivative")
    if _zero_at(g, range(1, d + 1, 2)) and _zero_at(f, range(0, d + 1, 2)):
        labels.add("checkerboard")

    a = G.adj
    proper = bool(np.all(np.diagonal(a, -1) == 1)) if n >= 2 else True
    proper_gf = True
    if n >= 2:
        proper_gf = g[0] == 1 and (n == 2 or f[1] == 1)
    if proper != proper_gf:
        raise ClassificationMismatch(f"{G.label()}: properness differs between adjacency and series")
    if proper:
        labels.add("proper")

    blocks = extract_blocks(G)
    y_zero = not blocks.Y.any()
    x_zero = not blocks.X.any()
    unit = _f_linear_unit(f)
    if unit:
        gf = fps.mul(g, f)
        o_gf = _zero_at(gf, (2 * k for k in range(1, (n - 2) // 2 + 1)))
        e_gf = _zero_at(g, (2 * i - 1 for i in range(1, (n - 1) // 2 + 1)))
        if o_gf != y_zero:
            raise ClassificationMismatch(f"{G.label()}: o-decomposability routes disagree")
        if e_gf != x_zero:
            raise ClassificationMismatch(f"{G.label()}: e-decomposability routes disagree")
    if y_zero:
        labels.add("o_decomposable")
    if x_zero:
        labels.add("e_decomposable")

    n1, n2 = (n + 1) // 2, n // 2
    io = proper and y_zero and np.array_equal(blocks.X, build_graph(g, f, n1).adj)
    if "bell" in labels and unit:
        io_gf = g[0] == 1 and all(g[j] == g[2 * j + 1] for j in range(0, n1 - 1))
        if n >= 2 and io_gf != io:
            raise ClassificationMismatch(f"{G.label()}: io-decomposability routes disagree")
    if io:
        labels.add("io_decomposable")
    if proper and x_zero and np.array_equal(blocks.Y, build_graph(g, f, n2).adj):
        labels.add("ie_decomposable")
    return frozenset(labels)


def is_io_bell(G: RiordanGraph) -> bool:
    c = classify(G)
    return "io_decomposable" in c and "bell" in c


# ---------------------------------------------------------------------------
# degrees, universal vertices, partitions


def top_power(n: int) -> int:
    """p = floor(log2(n - 1)) for n >= 2."""
    if n < 2:
        raise ValueError("p is defined for n >= 2")
    return (n - 1).bit_length() - 1


def ceil_log2(n: int) -> int:
    return (n - 1).bit_length() if n >= 1 else 0


def degrees(G: Graph) -> np.ndarray:
    return G.degrees()


def degree_formula_checks(G: RiordanGraph) -> list[dict]:
    """Closed-form degree identities for io-decomposable Bell graphs."""
    if not is_io_bell(G):
        raise HypothesisNotMet("degree formulas need an io-decomposable Bell-type graph")
    n, g = G.n, G.g
    if n < 2:
        return []
    deg = G.degrees()
    p = top_power(n)
    out = []
    v = 2 ** p + 1
    rhs = 2 ** p + fps.ones_count_prefix(g, n - 2 ** p - 2)
    out.append({"check": "lemma4.1", "vertex": v, "lhs": int(deg[v - 1]), "rhs": rhs,
                "ok": int(deg[v - 1]) == rhs})
    n1 = (n + 1) // 2
    sub = build_graph(g, G.f, n1)
    rhs2 = 1 + int(sub.degrees()[0]) if n1 >= 1 else 1
    out.append({"check": "thm4.17.d2", "vertex": 2, "lhs": int(deg[1]), "rhs": rhs2,
                "ok": int(deg[1]) == rhs2})
    return out


def universal_vertices(G: Graph) -> list[int]:
    deg = G.degrees()
    return [i + 1 for i in range(G.n) if deg[i] == G.n - 1]


def moj_parts(n: int) -> list[list[int]]:
    """The vertex classes V_1..V_{L+1}, L = ceil(log2 n), as explicit lists."""
    L = ceil_log2(n)
    parts = []
    for j in range(1, L + 1):
        start, step = 2 ** (j - 1) + 1, 2 ** j
        top = (n - 1 - 2 ** (j - 1)) // step
        parts.append([start + i * step for i in range(top + 1)] if top >= 0 else [])
    parts.append([1])
    return parts


def partition_moj(G: RiordanGraph, check_hypothesis: bool = True) -> list[frozenset[int]]:
    if check_hypothesis and not is_io_bell(G):
        raise HypothesisNotMet("the explicit partition needs an io-decomposable Bell-type graph")
    parts = [frozenset(p) for p in moj_parts(G.n)]
    for j, part in enumerate(parts, start=1):
        idx = [v - 1 for v in part]
        if G.adj[np.ix_(idx, idx)].any():
            raise PartitionNotIndependent(f"{G.label()}: class V_{j} = {sorted(part)} spans an edge")
    return parts


# ---------------------------------------------------------------------------
# clique number and chromatic number


def _nbr_masks(G: Graph) -> list[int]:
    masks = []
    for row in G.adj:
        masks.append(int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little"))
    return masks


def _greedy_color_bound(cand: int, nbr: list[int]) -> tuple[list[int], list[int]]:
    """Sequential colouring of the candidate set; returns vertices and their colour numbers."""
    order, bounds = [], []
    color = 0
    uncolored = cand
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~low & ~nbr[v]
            uncolored &= ~low
            order.append(v)
            bounds.append(color)
    return order, bounds


def max_clique(G: Graph) -> list[int]:
    nbr = _nbr_masks(G)
    best: list[int] = []

    def expand(clique: list[int], cand: int):
        nonlocal best
        order, bounds = _greedy_color_bound(cand, nbr)
        for k in range(len(order) - 1, -1, -1):
            if len(clique) + bounds[k] <= len(best):
                return
            v = order[k]
            clique.append(v)
            new = cand & nbr[v]
            if new:
                expand(clique, new)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            cand &= ~(1 << v)

    if G.n:
        expand([], (1 << G.n) - 1)
    return sorted(v + 1 for v in best)


def _colorable(nbr: list[int], n: int, k: int) -> bool:
    colors = [-1] * n

    def pick() -> int:
        best, best_key = -1, None
        for v in range(n):
            if colors[v] >= 0:
                continue
            used = {colors[u] for u in range(n) if (nbr[v] >> u) & 1 and colors[u] >= 0}
            key = (len(used), bin(nbr[v]).count("1"))
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def solve(done: int) -> bool:
        if done == n:
            return True
        v = pick()
        used = {colors[u] for u in range(n) if (nbr[v] >> u) & 1 and colors[u] >= 0}
        top = max(colors) + 1
        for c in range(min(k, top + 1)):
            if c in used:
                continue
            colors[v] = c
            if solve(done + 1):
                return True
        colors[v] = -1
        return False

    return solve(0)


def greedy_coloring_count(G: Graph) -> int:
    nbr = _nbr_masks(G)
    colors: dict[int, int] = {}
    for v in np.argsort(-G.degrees(), kind="stable"):
        v = int(v)
        used = {colors[u] for u in colors if (nbr[v] >> u) & 1}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return max(colors.values()) + 1 if colors else 0


def clique_and_chromatic(G: Graph, cap: int = 64) -> tuple[int, int]:
    if G.n > cap:
        raise SizeCapExceeded(f"exact clique/colouring search capped at n = {cap}")
    if G.n == 0:
        return 0, 0
    omega = len(max_clique(G))
    upper = greedy_coloring_count(G)
    if isinstance(G, RiordanGraph) and G.g is not None and is_io_bell(G):
        upper = min(upper, sum(1 for p in partition_moj(G, check_hypothesis=False) if p))
    nbr = _nbr_masks(G)
    chi = upper
    for k in range(omega, upper):
        if _colorable(nbr, G.n, k):
            chi = k
            break
    return omega, chi


# ---------------------------------------------------------------------------
# derived graphs and distances


def bipartite_double(G: Graph) -> Graph:
    """Keep only the edges joining an odd and an even label."""
    idx = np.arange(G.n)
    cross = (idx[:, None] % 2) != (idx[None, :] % 2)
    return Graph(G.adj * cross)


def neighborhoods(G: Graph, v: int) -> frozenset[int]:
    return frozenset(int(u) + 1 for u in np.nonzero(G.adj[v - 1])[0])


def eccentricities(G: Graph) -> list[float]:
    n = G.n
    nbrs = [np.nonzero(G.adj[v])[0].tolist() for v in range(n)]
    out = []
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in nbrs[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    q.append(w)
        out.append(math.inf if min(dist) < 0 else float(max(dist)))
    return out


def diameter(G: Graph) -> float:
    if G.n == 0:
        return 0
    ecc = max(eccentricities(G))
    return ecc if math.isinf(ecc) else int(ecc)


# ---------------------------------------------------------------------------
# export


def to_text(G: Graph) -> str:
    rows = [" ".join(str(int(x)) for x in row) for row in G.adj]
    return "\n".join([str(G.n), *rows]) + "\n"


def from_text(text: str) -> Graph:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    n = int(lines[0])
    rows = [[int(x) for x in ln.split()] for ln in lines[1:1 + n]]
    return Graph(np.asarray(rows, dtype=np.uint8).reshape(n, n))


def to_dot(G: Graph, name: str = "G") -> str:
    safe = "".join(ch if ch.isalnum() else "_" for ch in name) or "G"
    lines = [f"graph {safe} {{"]
    lines += [f"  {v};" for v in range(1, G.n + 1)]
    lines += [f"  {u} -- {v};" for u, v in G.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_csv(G: Graph) -> str:
    return "".join(f"{u},{v}\n" for u, v in G.edges())
