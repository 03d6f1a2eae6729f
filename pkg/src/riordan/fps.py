"""Truncated formal power series over GF(2).

A series is a Python int used as a bit vector (bit i is the coefficient
of z^i) together with an inclusive truncation degree.  Python ints are
arbitrary-length word arrays, so addition is a single XOR and
multiplication is a windowed shift-XOR (carry-less) product.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NonzeroLowTerm, TruncationExceeded, ZeroConstantTerm

__all__ = [
    "Gf2Series",
    "add",
    "mul",
    "inverse",
    "compose",
    "power",
    "even_part",
    "odd_part",
    "derivative",
    "ones_count_prefix",
    "catalan",
    "clmul",
    "compare",
]


def _mask(trunc: int) -> int:
    return (1 << (trunc + 1)) - 1


def clmul(a: int, b: int, trunc: int | None = None) -> int:
    """Carry-less product of two bit vectors, optionally masked to degree `trunc`."""
    if a == 0 or b == 0:
        return 0
    if a.bit_count() < b.bit_count():
        a, b = b, a
    if trunc is not None:
        m = _mask(trunc)
        a &= m
        b &= m
    if b.bit_count() <= 24:
        r = 0
        while b:
            low = b & -b
            r ^= a << (low.bit_length() - 1)
            b ^= low
    else:
        # 8-bit windows: table of a * w for every byte value w
        table = [0] * 256
        for w in range(1, 256):
            hi = 1 << (w.bit_length() - 1)
            table[w] = table[w ^ hi] ^ (a << (hi.bit_length() - 1))
        r = 0
        shift = 0
        while b:
            w = b & 0xFF
            if w:
                r ^= table[w] << shift
            b >>= 8
            shift += 8
    if trunc is not None:
        r &= _mask(trunc)
    return r


@dataclass(frozen=True, eq=False)
class Gf2Series:
    bits: int
    trunc: int

    def __post_init__(self):
        if self.trunc < 0:
            raise ValueError("truncation degree must be >= 0")
        if self.bits < 0:
            raise ValueError("bit vector must be non-negative")
        if self.bits >> (self.trunc + 1):
            object.__setattr__(self, "bits", self.bits & _mask(self.trunc))

    # -- construction ------------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], trunc: int | None = None) -> Gf2Series:
        bits = 0
        count = 0
        for i, c in enumerate(coeffs):
            if c % 2:
                bits |= 1 << i
            count = i + 1
        if trunc is None:
            trunc = max(count - 1, 0)
        return cls(bits, trunc)

    @classmethod
    def constant(cls, c: int, trunc: int) -> Gf2Series:
        return cls(c & 1, trunc)

    @classmethod
    def z(cls, trunc: int) -> Gf2Series:
        return cls(2 if trunc >= 1 else 0, trunc)

    @classmethod
    def parse_dump(cls, text: str) -> Gf2Series:
        """Inverse of `dump`: comma-separated bits, low degree first."""
        parts = [p.strip() for p in text.strip().split(",") if p.strip()]
        if not parts or any(p not in ("0", "1") for p in parts):
            raise ValueError(f"not a bit dump: {text!r}")
        return cls.from_coeffs((int(p) for p in parts), len(parts) - 1)

    # -- access --------------------------------------------------------------

    def __getitem__(self, i: int) -> int:
        if i < 0:
            return 0
        if i > self.trunc:
            raise TruncationExceeded(f"coefficient {i} requested beyond truncation {self.trunc}")
        return (self.bits >> i) & 1

    def coeffs(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.trunc + 1)]

    def dump(self) -> str:
        return ",".join(str(c) for c in self.coeffs())

    def valuation(self) -> int | None:
        """Index of the lowest nonzero coefficient, None for the zero series."""
        if self.bits == 0:
            return None
        return (self.bits & -self.bits).bit_length() - 1

    def truncate(self, trunc: int) -> Gf2Series:
        if trunc > self.trunc:
            raise TruncationExceeded(f"cannot extend truncation {self.trunc} to {trunc}")
        return Gf2Series(self.bits, trunc)

    def shift_down(self, k: int = 1) -> Gf2Series:
        """Divide by z^k; the low k coefficients must vanish."""
        if self.bits & ((1 << k) - 1):
            raise NonzeroLowTerm(f"series is not divisible by z^{k}")
        if self.trunc < k:
            return Gf2Series(0, 0)
        return Gf2Series(self.bits >> k, self.trunc - k)

    def shift_up(self, k: int = 1) -> Gf2Series:
        """Multiply by z^k (truncation grows by k)."""
        return Gf2Series(self.bits << k, self.trunc + k)

    def is_zero(self) -> bool:
        return self.bits == 0

    def __add__(self, other: Gf2Series) -> Gf2Series:
        return add(self, other)

    __sub__ = __add__

    def __mul__(self, other: Gf2Series) -> Gf2Series:
        return mul(self, other)

    def __pow__(self, k: int) -> Gf2Series:
        return power(self, k)

    def __eq__(self, other):
        if not isinstance(other, Gf2Series):
            return NotImplemented
        return compare(self, other)[0]

    __hash__ = None  # equality is prefix-based, so no consistent hash exists

    def __repr__(self):
        shown = self.dump() if self.trunc < 24 else self.dump()[:47] + ",..."
        return f"Gf2Series({shown}; trunc={self.trunc})"


def compare(a: Gf2Series, b: Gf2Series) -> tuple[bool, bool]:
    """Prefix comparison: (agree on the shared prefix, comparison was partial)."""
    t = min(a.trunc, b.trunc)
    m = _mask(t)
    return (a.bits & m) == (b.bits & m), a.trunc != b.trunc


def add(a: Gf2Series, b: Gf2Series) -> Gf2Series:
    t = min(a.trunc, b.trunc)
    return Gf2Series((a.bits ^ b.bits) & _mask(t), t)


def mul(a: Gf2Series, b: Gf2Series) -> Gf2Series:
    t = min(a.trunc, b.trunc)
    return Gf2Series(clmul(a.bits, b.bits, t), t)


def power(a: Gf2Series, k: int) -> Gf2Series:
    if k < 0:
        raise ValueError("negative exponent")
    result = Gf2Series(1, a.trunc)
    base = a
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def inverse(a: Gf2Series) -> Gf2Series:
    """Multiplicative inverse; requires constant term 1."""
    if not a.bits & 1:
        raise ZeroConstantTerm("series with zero constant term has no inverse")
    t = a.trunc
    # Newton iteration b <- b * (2 - a b) = b * a b  (mod 2), doubling precision
    b = 1
    prec = 0
    while prec < t:
        prec = min(2 * prec + 1, t)
        ab = clmul(a.bits, b, prec)
        b = clmul(b, ab, prec)
    return Gf2Series(b, t)


def compose(g: Gf2Series, f: Gf2Series) -> Gf2Series:
    """g(f(z)); f must have zero constant term."""
    if f.bits & 1:
        raise NonzeroLowTerm("inner series of a composition must have f(0) = 0")
    v = f.valuation()
    if v is None:
        return Gf2Series(g.bits & 1, f.trunc)
    t = min(f.trunc, v * (g.trunc + 1) - 1)
    fb = f.bits & _mask(t)
    # Horner from the top coefficient that can still reach degree t
    top = min(g.trunc, t // v)
    r = 0
    for i in range(top, -1, -1):
        r = clmul(r, fb, t) ^ ((g.bits >> i) & 1)
    return Gf2Series(r, t)


def _spread_select(bits: int, trunc: int, start: int, count: int) -> int:
    r = 0
    for i in range(count):
        if (bits >> (start + 2 * i)) & 1:
            r |= 1 << i
    return r


def odd_part(a: Gf2Series) -> Gf2Series:
    """sum_i a[2i+1] z^i; over GF(2) this is a'(sqrt z)."""
    if a.trunc < 1:
        return Gf2Series(0, 0)
    t = (a.trunc - 1) // 2
    return Gf2Series(_spread_select(a.bits, a.trunc, 1, t + 1), t)


def even_part(a: Gf2Series) -> Gf2Series:
    """sum_i a[2i] z^i; over GF(2) this is (z a)'(sqrt z)."""
    t = a.trunc // 2
    return Gf2Series(_spread_select(a.bits, a.trunc, 0, t + 1), t)


def derivative(a: Gf2Series) -> Gf2Series:
    """Formal derivative reduced mod 2: [z^i]a' = (i+1) a[i+1]."""
    if a.trunc < 1:
        return Gf2Series(0, 0)
    t = a.trunc - 1
    r = 0
    for i in range(0, t + 1, 2):
        if (a.bits >> (i + 1)) & 1:
            r |= 1 << i
    return Gf2Series(r, t)


def ones_count_prefix(a: Gf2Series, n: int) -> int:
    """Number of unit coefficients among degrees 0..n; 0 when n < 0."""
    if n < 0:
        return 0
    if n > a.trunc:
        raise TruncationExceeded(f"prefix {n} exceeds truncation {a.trunc}")
    return (a.bits & _mask(n)).bit_count()


def catalan(trunc: int) -> Gf2Series:
    """Catalan generating function mod 2, solved degree by degree from C = 1 + z C^2.

    Squaring over GF(2) spreads coefficients, so [z^m]C^2 = C[m/2] for even m
    and 0 for odd m; hence C[n] = C[(n-1)/2] for odd n and 0 for even n >= 2.
    """
    coeff = bytearray(trunc + 1)
    coeff[0] = 1
    for n in range(1, trunc + 1):
        m = n - 1
        coeff[n] = coeff[m // 2] if m % 2 == 0 else 0
    bits = int.from_bytes(_pack_bits(coeff), "little")
    return Gf2Series(bits, trunc)


def _pack_bits(flags: Sequence[int]) -> bytes:
    out = bytearray((len(flags) + 7) // 8)
    for i, c in enumerate(flags):
        if c:
            out[i >> 3] |= 1 << (i & 7)
    return bytes(out)
