"""Deterministic test corpora: named families and seeded random generating pairs."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator

from .graph import FAMILIES, RiordanGraph, family, from_expressions, series_margin

DEFAULT_SEED = 0x9E3779B97F4A7C15
CORPUS_FAMILIES = ("pascal", "catalan", "path", "complete", "complete_bipartite", "null")


@dataclass(frozen=True)
class Instance:
    g_expr: str
    f_expr: str
    n: int
    family: str | None = None
    source: str = "family"

    @property
    def descriptor(self) -> tuple[str, str, int]:
        return (self.g_expr, self.f_expr, self.n)

    def build(self) -> RiordanGraph:
        if self.family is not None:
            return family(self.family, self.n)
        return from_expressions(self.g_expr, self.f_expr, self.n)

    def to_json(self) -> dict:
        return {"g_expr": self.g_expr, "f_expr": self.f_expr, "n": self.n}


def poly_text(bits: int) -> str:
    """Render a GF(2) polynomial as an expression, low degree first."""
    if bits == 0:
        return "0"
    terms = []
    i = 0
    while bits >> i:
        if (bits >> i) & 1:
            terms.append("1" if i == 0 else "z" if i == 1 else f"z^{i}")
        i += 1
    return "+".join(terms)


def family_instances(nmax: int, names=CORPUS_FAMILIES, nmin: int = 1) -> list[Instance]:
    out = []
    for name in names:
        g_expr, f_expr = FAMILIES[name]
        out += [Instance(g_expr, f_expr, n, name, "family") for n in range(nmin, nmax + 1)]
    return out


def random_pairs(seed: int, count: int, nmin: int = 8, nmax: int = 33, degree: int = 8) -> list[Instance]:
    """Polynomial g, f with g(0) = 1, f(0) = 0, [z^1]f = 1 and degrees <= `degree`."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        g = 1 | (rng.getrandbits(degree) << 1)
        f = 2 | (rng.getrandbits(degree - 1) << 2)
        n = rng.randint(nmin, nmax)
        out.append(Instance(poly_text(g), poly_text(f), n, None, "random"))
    return out


def io_bell_bits(rng: random.Random, top: int) -> int:
    """g with g_0 = 1, random even coefficients and g_{2j+1} = g_j up to degree `top`."""
    coeff = [0] * (top + 1)
    coeff[0] = 1
    for d in range(1, top + 1):
        coeff[d] = coeff[(d - 1) // 2] if d % 2 else rng.getrandbits(1)
    return sum(c << i for i, c in enumerate(coeff))


def random_io_bell(seed: int, count: int, nmin: int = 2, nmax: int = 64) -> list[Instance]:
    rng = random.Random(seed ^ 0xB311)
    out = []
    for _ in range(count):
        n = rng.randint(nmin, nmax)
        g = poly_text(io_bell_bits(rng, series_margin(n)))
        out.append(Instance(g, f"z*({g})", n, None, "io_bell"))
    return out


def standard_corpus(seed: int = DEFAULT_SEED, nmax: int = 64, random_count: int = 200,
                    io_count: int = 50) -> list[Instance]:
    """Families up to nmax, random pairs (orders 8..min(33, nmax)), random io-decomposable Bell graphs."""
    items = family_instances(nmax)
    if nmax >= 8:
        items += random_pairs(seed, random_count, 8, min(33, nmax))
    items += random_io_bell(seed, io_count, 2, nmax)
    return items


def iter_graphs(items) -> Iterator[tuple[Instance, RiordanGraph]]:
    for it in items:
        yield it, it.build()
