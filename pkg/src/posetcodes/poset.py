"""Finite posets on coordinate labels 1..n and their downward-closed ideals.

Labels are 1-based externally; internally subsets of coordinates are int
bitmasks with bit i-1 standing for label i.  The hard cap n <= 64 keeps
every subset inside one machine word, which is all the exhaustive
verifications in this package can reach anyway.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from .errors import FileFormatError

MAX_ELEMS = 64


class PosetError(ValueError):
    """Invalid order data: cycles, bad labels, non-ideals."""


def bits_of_labels(labels: Iterable[int], n: int) -> int:
    bits = 0
    for lab in labels:
        if not 1 <= lab <= n:
            raise PosetError(f"label {lab} outside 1..{n}")
        bits |= 1 << (lab - 1)
    return bits


def labels_of_bits(bits: int) -> tuple[int, ...]:
    out = []
    lab = 1
    while bits:
        if bits & 1:
            out.append(lab)
        bits >>= 1
        lab += 1
    return tuple(out)


class Poset:
    """Immutable partial order with O(1) comparisons and bitset ideals.

    ``leq`` is an n x n boolean matrix, ``leq[i-1, j-1]`` iff i <= j.
    Construction verifies reflexivity, antisymmetry and transitivity.
    """

    def __init__(self, leq):
        leq = np.array(leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise PosetError("order matrix must be square")
        n = leq.shape[0]
        if n > MAX_ELEMS:
            raise PosetError(f"at most {MAX_ELEMS} coordinates supported, got {n}")
        if not leq.diagonal().all():
            raise PosetError("order must be reflexive")
        both = leq & leq.T
        if (both != np.eye(n, dtype=bool)).any():
            raise PosetError("order must be antisymmetric (cycle detected)")
        closure = leq @ leq
        if (closure & ~leq).any():
            raise PosetError("order must be transitive")
        leq.setflags(write=False)
        self.n = n
        self.leq = leq
        self._hash = hash((n, leq.tobytes()))

    # -- construction -----------------------------------------------------

    @classmethod
    def antichain(cls, n: int) -> "Poset":
        return cls(np.eye(n, dtype=bool))

    @classmethod
    def chain(cls, n: int) -> "Poset":
        return cls(np.triu(np.ones((n, n), dtype=bool)))

    @classmethod
    def from_cover_relations(cls, n: int, covers: Iterable[tuple[int, int]]) -> "Poset":
        """Build the reflexive-transitive closure of cover pairs (lo < hi)."""
        if not 0 <= n <= MAX_ELEMS:
            raise PosetError(f"n must be in 0..{MAX_ELEMS}, got {n}")
        rel = np.eye(n, dtype=bool)
        for lo, hi in covers:
            if not (1 <= lo <= n and 1 <= hi <= n):
                raise PosetError(f"cover ({lo}, {hi}) has labels outside 1..{n}")
            if lo == hi:
                raise PosetError(f"cover ({lo}, {hi}) relates a label to itself")
            rel[lo - 1, hi - 1] = True
        for k in range(n):
            rel |= np.outer(rel[:, k], rel[k, :])
        both = rel & rel.T
        if (both != np.eye(n, dtype=bool)).any():
            raise PosetError("cover relations contain a cycle")
        return cls(rel)

    # -- basic structure ---------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Poset)
            and self.n == other.n
            and np.array_equal(self.leq, other.leq)
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Poset(n={self.n}, covers={list(self.covers)})"

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Cover pairs (lo, hi): lo < hi with nothing strictly between."""
        lt = self.leq & ~np.eye(self.n, dtype=bool)
        direct = lt & ~(lt @ lt)
        pairs = [(int(i) + 1, int(j) + 1) for i, j in zip(*np.nonzero(direct))]
        return tuple(sorted(pairs))

    @cached_property
    def _down_bits(self) -> tuple[int, ...]:
        # _down_bits[i-1] = bitmask of {j : j <= i}
        out = []
        for i in range(self.n):
            bits = 0
            for j in range(self.n):
                if self.leq[j, i]:
                    bits |= 1 << j
            out.append(bits)
        return tuple(out)

    @cached_property
    def _up_bits(self) -> tuple[int, ...]:
        out = []
        for i in range(self.n):
            bits = 0
            for j in range(self.n):
                if self.leq[i, j]:
                    bits |= 1 << j
            out.append(bits)
        return tuple(out)

    @cached_property
    def down_bits_array(self) -> np.ndarray:
        """Principal-ideal masks as uint64, the layout the kernels consume."""
        arr = np.array(self._down_bits, dtype=np.uint64)
        arr.setflags(write=False)
        return arr

    @cached_property
    def _topo_order(self) -> tuple[int, ...]:
        """Linear extension, smallest label first among available minima."""
        remaining = set(range(1, self.n + 1))
        order = []
        while remaining:
            for lab in sorted(remaining):
                pred = labels_of_bits(self._down_bits[lab - 1] & ~(1 << (lab - 1)))
                if all(p not in remaining for p in pred):
                    order.append(lab)
                    remaining.remove(lab)
                    break
        return tuple(order)

    def leq_labels(self, i: int, j: int) -> bool:
        return bool(self.leq[i - 1, j - 1])

    def down_set(self, label: int) -> frozenset[int]:
        return frozenset(labels_of_bits(self._down_bits[label - 1]))

    def dual(self) -> "Poset":
        return Poset(self.leq.T)

    def induced(self, keep_labels: Iterable[int]) -> "Poset":
        """Subposet on the given labels, relabeled 1..m preserving order."""
        keep = sorted(set(keep_labels))
        idx = [lab - 1 for lab in keep]
        if any(not 1 <= lab <= self.n for lab in keep):
            raise PosetError("labels outside poset")
        return Poset(self.leq[np.ix_(idx, idx)])

    def delete(self, label: int) -> "Poset":
        return self.induced([lab for lab in range(1, self.n + 1) if lab != label])

    # -- ideals ------------------------------------------------------------

    def closure_bits(self, bits: int) -> int:
        out = 0
        b = bits
        lab = 1
        while b:
            if b & 1:
                out |= self._down_bits[lab - 1]
            b >>= 1
            lab += 1
        return out

    def is_ideal_bits(self, bits: int) -> bool:
        return 0 <= bits < (1 << self.n) and self.closure_bits(bits) == bits

    def closure(self, labels: Iterable[int]) -> "Ideal":
        return Ideal(self.closure_bits(bits_of_labels(labels, self.n)), self)

    def ideal(self, labels: Iterable[int]) -> "Ideal":
        return Ideal(bits_of_labels(labels, self.n), self)

    def _ideal_bits(self, size: int | None, within_bits: int | None) -> list[int]:
        cache = self.__dict__.setdefault("_ideal_cache", {})
        key = (size, within_bits)
        if key in cache:
            return cache[key]
        if within_bits is None:
            order = list(self._topo_order)
        else:
            order = [lab for lab in self._topo_order if within_bits >> (lab - 1) & 1]
        avail = len(order)
        down = self._down_bits
        results: list[int] = []

        def rec(idx: int, bits: int, count: int) -> None:
            if size is not None and (count > size or count + (avail - idx) < size):
                return
            if idx == avail:
                if size is None or count == size:
                    results.append(bits)
                return
            lab = order[idx]
            rec(idx + 1, bits, count)
            pred = down[lab - 1] & ~(1 << (lab - 1))
            if pred & bits == pred:
                rec(idx + 1, bits | (1 << (lab - 1)), count + 1)

        rec(0, 0, 0)
        results.sort()
        cache[key] = results
        return results

    def ideals(self, size: int | None = None, within: "Ideal | None" = None) -> Iterator["Ideal"]:
        """Yield ideals (optionally of one size, optionally inside ``within``)
        exactly once each, sorted by bitmask value."""
        if size is not None and not 0 <= size <= self.n:
            raise PosetError(f"ideal size {size} outside 0..{self.n}")
        within_bits = None
        if within is not None:
            if within.poset != self:
                raise PosetError("'within' ideal belongs to a different poset")
            within_bits = within.bits
        for bits in self._ideal_bits(size, within_bits):
            yield Ideal(bits, self)


@dataclass(frozen=True)
class Ideal:
    """A downward-closed coordinate set, validated at construction."""

    bits: int
    poset: Poset

    def __post_init__(self):
        if not 0 <= self.bits < (1 << self.poset.n):
            raise PosetError("ideal bits outside coordinate range")
        if self.poset.closure_bits(self.bits) != self.bits:
            raise PosetError(
                f"set {{{', '.join(map(str, labels_of_bits(self.bits)))}}}"
                " is not downward closed"
            )

    @property
    def size(self) -> int:
        return self.bits.bit_count()

    @property
    def labels(self) -> tuple[int, ...]:
        return labels_of_bits(self.bits)

    def contains(self, other: "Ideal") -> bool:
        return other.bits & self.bits == other.bits

    def __repr__(self):
        return f"Ideal{{{', '.join(map(str, self.labels))}}}"


def maximal_elements(ideal: Ideal) -> tuple[frozenset[int], Ideal]:
    """Maximal elements Omega(I) and the reduced ideal I \\ Omega(I)."""
    poset = ideal.poset
    omega_bits = 0
    for lab in ideal.labels:
        up_in_ideal = poset._up_bits[lab - 1] & ideal.bits
        if up_in_ideal == 1 << (lab - 1):
            omega_bits |= 1 << (lab - 1)
    omega = frozenset(labels_of_bits(omega_bits))
    return omega, Ideal(ideal.bits & ~omega_bits, poset)


# -- text format ----------------------------------------------------------
#
#   # comment lines and blanks are ignored
#   n=<int>
#   <lo> < <hi>      (one cover pair per line)


def parse_poset_text(text: str) -> Poset:
    n = None
    covers = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            if not line.startswith("n="):
                raise FileFormatError(line_no, f"expected 'n=<int>', got {line!r}")
            try:
                n = int(line[2:])
            except ValueError:
                raise FileFormatError(line_no, f"invalid coordinate count {line[2:]!r}") from None
            continue
        parts = line.split("<")
        if len(parts) != 2:
            raise FileFormatError(line_no, f"expected '<lo> < <hi>', got {line!r}")
        try:
            lo, hi = int(parts[0]), int(parts[1])
        except ValueError:
            raise FileFormatError(line_no, f"non-integer labels in {line!r}") from None
        covers.append((lo, hi, line_no))
    if n is None:
        raise FileFormatError(1, "missing 'n=<int>' header")
    try:
        return Poset.from_cover_relations(n, [(lo, hi) for lo, hi, _ in covers])
    except PosetError as exc:
        raise FileFormatError(covers[-1][2] if covers else 1, str(exc)) from exc


def poset_to_text(poset: Poset) -> str:
    lines = [f"n={poset.n}"]
    lines.extend(f"{lo} < {hi}" for lo, hi in poset.covers)
    return "\n".join(lines) + "\n"
