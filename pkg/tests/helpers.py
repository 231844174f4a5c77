"""Shared corpus builders and independent test oracles.

Every oracle here recomputes its quantity by a route independent of the
library path it checks: direct formulas, powerset filters, itertools
enumeration over messages, or canonical-RREF subspace enumeration.
"""

from __future__ import annotations

import random
from collections import Counter
from itertools import product

import numpy as np

from posetcodes import LinearCode, Poset, PrimeField, chain_product_poset


# -- independent weight / support machinery --------------------------------


def nrt_weight(vec, r: int) -> int:
    """Direct NRT formula: sum over blocks of the top nonzero position."""
    total = 0
    for b in range(0, len(vec), r):
        top = 0
        for j in range(r):
            if vec[b + j]:
                top = j + 1
        total += top
    return total


def closure_labels(labels, poset: Poset) -> frozenset[int]:
    """Downward closure via the leq matrix, label by label."""
    out = set()
    for lab in labels:
        for other in range(1, poset.n + 1):
            if poset.leq[other - 1, lab - 1]:
                out.add(other)
    return frozenset(out)


def support_closure_size(vec, poset: Poset) -> int:
    return len(closure_labels([i + 1 for i, v in enumerate(vec) if v], poset))


def brute_ideal_sets(poset: Poset) -> list[frozenset[int]]:
    """All downward-closed subsets by filtering the whole powerset."""
    out = []
    for bits in range(1 << poset.n):
        members = {lab for lab in range(1, poset.n + 1) if bits >> (lab - 1) & 1}
        if all(
            poset.leq[other - 1, lab - 1] <= (other in members)
            for lab in members
            for other in range(1, poset.n + 1)
        ):
            out.append(frozenset(members))
    return out


# -- independent codeword enumeration ---------------------------------------


def all_codewords(code: LinearCode) -> list[tuple[int, ...]]:
    """Every codeword, in message-index order (digit 0 fastest)."""
    q = code.field.q
    rows = [tuple(int(v) for v in row) for row in code.generator]
    words = []
    for idx in range(q**code.k):
        word = [0] * code.n
        rem = idx
        for row in rows:
            coef = rem % q
            rem //= q
            if coef:
                for i, v in enumerate(row):
                    word[i] = (word[i] + coef * v) % q
        words.append(tuple(word))
    return words


def census_oracle(code: LinearCode) -> Counter:
    """Counter mapping support-closure label sets to codeword counts."""
    out: Counter = Counter()
    for word in all_codewords(code):
        out[closure_labels([i + 1 for i, v in enumerate(word) if v], code.poset)] += 1
    return out


def weights_oracle(code: LinearCode) -> list[int]:
    """A_s vector via the itertools census."""
    out = [0] * (code.n + 1)
    for members, count in census_oracle(code).items():
        out[len(members)] += count
    return out


def pattern_counter_oracle(code: LinearCode, labels) -> Counter:
    """Counter of codeword restrictions to the given labels."""
    idx = [lab - 1 for lab in labels]
    return Counter(tuple(word[i] for i in idx) for word in all_codewords(code))


def oa_strength_oracle(code: LinearCode, poset: Poset) -> int:
    """Maximal balanced strength via itertools pattern counting."""
    q = code.field.q
    strength = 0
    for t in range(1, min(code.n, code.k) + 1):
        expected = q ** (code.k - t)
        ok = True
        for ideal in poset.ideals(size=t):
            counts = pattern_counter_oracle(code, ideal.labels)
            if len(counts) != q**t or set(counts.values()) != {expected}:
                ok = False
                break
        if not ok:
            break
        strength = t
    return strength


# -- independent generalized-weight oracle -----------------------------------


def _rref_messages(q: int, k: int, t: int):
    """All canonical RREF t x k matrices over GF(q) (one per t-dim subspace)."""
    from itertools import combinations

    for pivots in combinations(range(k), t):
        free_positions = []
        for row_i, pc in enumerate(pivots):
            for col in range(pc + 1, k):
                if col not in pivots:
                    free_positions.append((row_i, col))
        for values in product(range(q), repeat=len(free_positions)):
            mat = np.zeros((t, k), dtype=np.int64)
            for row_i, pc in enumerate(pivots):
                mat[row_i, pc] = 1
            for (row_i, col), v in zip(free_positions, values):
                mat[row_i, col] = v
            yield mat


def subcode_profile_oracle(code: LinearCode) -> tuple[int, ...]:
    """Generalized weights by enumerating every subcode of each dimension.

    Independent of the parity-check rank criterion: subspaces of the message
    space are enumerated as canonical RREF matrices, mapped through G, and
    measured by the closure of the union of the basis supports.
    """
    q = code.field.q
    out = []
    for t in range(1, code.k + 1):
        best = None
        for msg in _rref_messages(q, code.k, t):
            basis = (msg @ code.generator) % q
            support = set()
            for row in basis:
                support.update(i + 1 for i, v in enumerate(row) if v)
            size = len(closure_labels(support, code.poset))
            if best is None or size < best:
                best = size
        out.append(best)
    return tuple(out)


# -- corpus builders ---------------------------------------------------------


def random_poset(n: int, rng: random.Random) -> Poset:
    """Random partial order: random linear extension plus random edges."""
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    covers = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.3:
                covers.append((perm[i], perm[j]))
    return Poset.from_cover_relations(n, covers)


def assorted_poset(n: int, rng: random.Random) -> Poset:
    """Rotate among antichain, chain, chain products and random orders."""
    kind = rng.randrange(4)
    if kind == 0:
        return Poset.antichain(n)
    if kind == 1:
        return Poset.chain(n)
    if kind == 2:
        divisors = [r for r in range(1, n + 1) if n % r == 0]
        r = rng.choice(divisors)
        return chain_product_poset(n // r, r)
    return random_poset(n, rng)


def random_code(poset: Poset, q: int, k: int, rng: random.Random) -> LinearCode:
    """Uniform random [n, k] code over GF(q) on the given poset."""
    from posetcodes import linalg

    while True:
        rows = [[rng.randrange(q) for _ in range(poset.n)] for _ in range(k)]
        if linalg.rank(np.array(rows), q) == k:
            return LinearCode(PrimeField(q), poset, rows)
