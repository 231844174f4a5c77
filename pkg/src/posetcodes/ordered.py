"""Ordered Hamming (NRT) space: chain-product posets, shapes, shape counts.

Coordinates are laid out block-major, bottom-first: block i, height j maps
to label (i-1)*r + j, so "left-adjusted" means low labels inside a block.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from .field import PrimeField
from .poset import Ideal, Poset


@lru_cache(maxsize=None)
def chain_product_poset(n: int, r: int) -> Poset:
    """Disjoint union of n chains of length r (r=1 gives the Hamming order)."""
    if n < 1 or r < 1:
        raise ValueError(f"need n >= 1 and r >= 1, got n={n}, r={r}")
    if n * r > 64:
        raise ValueError(f"n*r must be at most 64 (bitset cap), got {n * r}")
    covers = []
    for i in range(n):
        for j in range(1, r):
            base = i * r + j
            covers.append((base, base + 1))
    return Poset.from_cover_relations(n * r, covers)


def detect_chain_product(poset: Poset) -> tuple[int, int] | None:
    """Return (n, r) if the poset is a block-major chain product, else None."""
    total = poset.n
    if total == 0:
        return None
    covers = set(poset.covers)
    if not covers:
        return (total, 1)
    # within-block covers are (l, l+1) with l not a multiple of r
    for r in range(2, total + 1):
        if total % r:
            continue
        expected = {
            (lab, lab + 1)
            for lab in range(1, total + 1)
            if lab % r != 0
        }
        if covers == expected:
            return (total // r, r)
    return None


@dataclass(frozen=True)
class OrderedSpace:
    """The space of q-ary vectors split into n blocks of length r."""

    n: int  # number of blocks
    r: int  # chain length
    q: int  # alphabet size

    def __post_init__(self):
        if self.n < 1 or self.r < 1:
            raise ValueError(f"need n >= 1 and r >= 1, got n={self.n}, r={self.r}")
        if self.n * self.r > 64:
            raise ValueError(f"n*r must be at most 64, got {self.n * self.r}")
        PrimeField(self.q)  # validates q

    @property
    def total(self) -> int:
        return self.n * self.r

    def label(self, block: int, height: int) -> int:
        if not (1 <= block <= self.n and 1 <= height <= self.r):
            raise ValueError(f"coordinate ({block}, {height}) outside the space")
        return (block - 1) * self.r + height

    def poset(self) -> Poset:
        return chain_product_poset(self.n, self.r)

    def field(self) -> PrimeField:
        return PrimeField(self.q)


@dataclass(frozen=True)
class Shape:
    """Block-height histogram e = (e_1, ..., e_r) of an ideal or vector.

    e_j counts blocks filled to height exactly j; e_0 = blocks - |e| is
    derived.  |e| = sum(e) and |e|' = sum(j * e_j) = size of the ideal.
    """

    e: tuple[int, ...]
    blocks: int

    def __post_init__(self):
        if any(c < 0 for c in self.e):
            raise ValueError("shape components must be nonnegative")
        if sum(self.e) > self.blocks:
            raise ValueError("shape uses more blocks than the space has")

    @property
    def r(self) -> int:
        return len(self.e)

    @property
    def size(self) -> int:
        """|e|: number of nonempty blocks."""
        return sum(self.e)

    @property
    def weighted_size(self) -> int:
        """|e|': total number of covered coordinates."""
        return sum(j * c for j, c in enumerate(self.e, start=1))

    @property
    def e0(self) -> int:
        return self.blocks - self.size

    def multinomial(self) -> int:
        """Number of ideals of this shape: C(blocks; e_0, e_1, ..., e_r)."""
        out = factorial(self.blocks) // factorial(self.e0)
        for c in self.e:
            out //= factorial(c)
        return out

    def __repr__(self):
        return f"Shape{self.e}"


def shape_of(ideal: Ideal, space: OrderedSpace) -> Shape:
    """Shape of an ideal of the chain-product poset of ``space``."""
    if ideal.poset != space.poset():
        raise ValueError("ideal does not belong to the chain-product poset of this space")
    counts = [0] * space.r
    for block in range(space.n):
        height = 0
        for j in range(space.r):
            if ideal.bits >> (block * space.r + j) & 1:
                height = j + 1
        if height:
            counts[height - 1] += 1
    return Shape(tuple(counts), space.n)


def _weighted_compositions(r: int, weighted: int):
    """All (f_1..f_r) with f_i >= 0 and sum(i*f_i) = weighted, lexicographic."""

    def rec(i: int, remaining: int, prefix: tuple[int, ...]):
        if i == r:
            if remaining == 0:
                yield prefix
            return
        if i == r - 1:
            # last component is forced if divisible
            if remaining % r == 0:
                yield prefix + (remaining // r,)
            return
        step = i + 1
        for c in range(remaining // step + 1):
            yield from rec(i + 1, remaining - c * step, prefix + (c,))

    yield from rec(0, weighted, ())


def enumerate_shapes(space: OrderedSpace, s: int) -> list[Shape]:
    """All shapes with |e|' = s, |e| <= n, in lexicographic order on e."""
    if not 0 <= s <= space.total:
        raise ValueError(f"weight {s} outside 0..{space.total}")
    return [
        Shape(e, space.n)
        for e in _weighted_compositions(space.r, s)
        if sum(e) <= space.n
    ]


def _comb0(a: int, b: int) -> int:
    """Binomial with out-of-range arguments contributing zero."""
    if b < 0 or b > a or a < 0:
        return 0
    return comb(a, b)


def count_N_s(e: Shape, s: int, space: OrderedSpace) -> int:
    """Number of size-s ideals I with reduced(I) <= J <= I for fixed J of shape e.

    Evaluated as the product-of-binomials sum over shapes f with |f|' = s;
    binomials with out-of-range arguments contribute nothing, which also
    silently discards shapes needing more than n blocks.
    """
    if e.blocks != space.n or e.r != space.r:
        raise ValueError("shape does not match the space")
    r = space.r
    e_full = (space.n - e.size,) + e.e  # e_0, e_1, ..., e_r
    total = 0
    for f in _weighted_compositions(r, s):
        term = 1
        ftop = 0
        etop = 0
        for i in range(r - 1, -1, -1):
            ftop += f[i]
            etop += e.e[i]
            term *= _comb0(e_full[i], ftop - etop)
            if term == 0:
                break
        total += term
    return total
