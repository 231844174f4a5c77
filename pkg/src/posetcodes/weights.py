"""Weight distributions of poset codes.

The brute-force path buckets every codeword by its left-adjusted support
ideal; the analytic path evaluates the NMDS inclusion-exclusion formulas
(general poset, ordered/shape, and Hamming closed forms).  All arithmetic
is exact: Python ints, no floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from . import linalg
from .code import LinearCode, classify, generalized_weights
from .errors import check_budget
from .kernels import support_bits
from .ordered import OrderedSpace, Shape, detect_chain_product, enumerate_shapes, count_N_s, shape_of
from .poset import Ideal, maximal_elements


@dataclass(frozen=True)
class WeightDistribution:
    """A_s totals, with optional per-ideal and per-shape refinements."""

    by_size: tuple[int, ...]
    by_ideal: dict[Ideal, int] | None = None
    by_shape: dict[Shape, int] | None = None

    @property
    def total(self) -> int:
        return sum(self.by_size)

    def nonzero(self) -> list[tuple[int, int]]:
        return [(s, a) for s, a in enumerate(self.by_size) if a]


def weight_dist_bruteforce(
    code: LinearCode,
    max_enum: int | None = None,
    include_by_ideal: bool = True,
) -> WeightDistribution:
    """Exact distribution by bucketing all q^k codewords by support ideal."""
    check_budget("codeword enumeration", code.enum_size(), max_enum)
    bits = support_bits(code.generator, code.field.q, code.poset.down_bits_array)
    uniq, counts = np.unique(bits, return_counts=True)
    by_size = [0] * (code.n + 1)
    for b, c in zip(np.bitwise_count(uniq), counts):
        by_size[int(b)] += int(c)

    by_ideal = None
    if include_by_ideal:
        by_ideal = {
            Ideal(int(b), code.poset): int(c) for b, c in zip(uniq.tolist(), counts)
        }

    by_shape = None
    detected = detect_chain_product(code.poset)
    if detected is not None:
        space = OrderedSpace(detected[0], detected[1], code.field.q)
        by_shape = {}
        for b, c in zip(uniq.tolist(), counts):
            shape = shape_of(Ideal(int(b), code.poset), space)
            by_shape[shape] = by_shape.get(shape, 0) + int(c)

    return WeightDistribution(tuple(by_size), by_ideal, by_shape)


def nmds_seed_by_ideal(code: LinearCode, d: int | None = None) -> dict[Ideal, int]:
    """A_J for every ideal J of size d, by restricted brute force.

    Only vectors supported inside each size-d ideal are enumerated (the
    kernel of H[J]), never the full code.
    """
    if d is None:
        d = generalized_weights(code)[1]
    q = code.field.q
    H = code.parity_check
    seed: dict[Ideal, int] = {}
    for ideal in code.poset.ideals(size=d):
        cols = [lab - 1 for lab in ideal.labels]
        kernel = linalg.nullspace(H[:, cols], q)
        dim = kernel.shape[0]
        count = 0
        for idx in range(q**dim):
            vec = np.zeros(len(cols), dtype=np.int64)
            rem = idx
            for row in kernel:
                vec = (vec + (rem % q) * row) % q
                rem //= q
            bits = 0
            for lab, v in zip(ideal.labels, vec):
                if v:
                    bits |= 1 << (lab - 1)
            if code.poset.closure_bits(bits) == ideal.bits:
                count += 1
        seed[ideal] = count
    return seed


def seed_by_shape(code: LinearCode, d: int | None = None) -> dict[Shape, int]:
    """A_e for every shape with |e|' = d, aggregated from the ideal seed."""
    detected = detect_chain_product(code.poset)
    if detected is None:
        raise ValueError("shape seeds need a chain-product poset")
    space = OrderedSpace(detected[0], detected[1], code.field.q)
    if d is None:
        d = generalized_weights(code)[1]
    seed = {shape: 0 for shape in enumerate_shapes(space, d)}
    for ideal, count in nmds_seed_by_ideal(code, d).items():
        seed[shape_of(ideal, space)] += count
    return seed


def weight_dist_nmds_poset(
    code: LinearCode,
    seed: dict[Ideal, int] | None = None,
    max_enum: int | None = None,
) -> WeightDistribution:
    """Weight distribution of an NMDS poset code by inclusion-exclusion.

    ``seed`` maps every ideal J with |J| = d to A_J; omitted, it is computed
    by restricted brute force.
    """
    cls = classify(code)
    if not cls.is_nmds:
        raise ValueError(f"analytic distribution needs an NMDS code, got {cls.label}")
    d = cls.d
    n, q = code.n, code.field.q
    if seed is None:
        seed = nmds_seed_by_ideal(code, d)
    wanted = {ideal.bits for ideal in code.poset.ideals(size=d)}
    got = {ideal.bits: value for ideal, value in seed.items()}
    if set(got) != wanted:
        raise ValueError("seed must cover exactly the ideals of size d")

    by_size = [0] * (n + 1)
    by_size[0] = 1
    scanned = 0
    for s in range(d, n + 1):
        term1 = 0
        term2 = 0
        for ideal in code.poset.ideals(size=s):
            scanned += 1
            check_budget("ideal enumeration", scanned, max_enum)
            omega, reduced = maximal_elements(ideal)
            m = len(omega)
            for l in range(s - d):
                term1 += (-1) ** l * comb(m, l) * (q ** (s - d - l) - 1)
            for inner in code.poset.ideals(size=d, within=ideal):
                if inner.bits & reduced.bits == reduced.bits:
                    term2 += got[inner.bits]
        by_size[s] = term1 + (-1) ** (s - d) * term2
    return WeightDistribution(tuple(by_size))


def weight_dist_nmds_ordered(
    space: OrderedSpace,
    k: int,
    d: int,
    seed: dict[Shape, int],
) -> WeightDistribution:
    """Ordered-space NMDS distribution from per-shape seeds A_e, |e|' = d."""
    nr = space.total
    if d != nr - k:
        raise ValueError(f"NMDS parameters need d = nr - k, got d={d}, nr={nr}, k={k}")
    wanted = set(enumerate_shapes(space, d))
    if set(seed) != wanted:
        raise ValueError("seed must cover exactly the shapes with |e|' = d")
    q = space.q
    by_size = [0] * (nr + 1)
    by_size[0] = 1
    for s in range(d, nr + 1):
        term1 = 0
        for l in range(s - d):
            inner = sum(
                comb(shape.size, l) * shape.multinomial()
                for shape in enumerate_shapes(space, s)
            )
            term1 += (-1) ** l * inner * (q ** (s - d - l) - 1)
        term2 = sum(
            count_N_s(shape, s, space) * seed[shape] for shape in enumerate_shapes(space, d)
        )
        by_size[s] = term1 + (-1) ** (s - d) * term2
    return WeightDistribution(tuple(by_size))


def weight_dist_nmds_hamming(n: int, k: int, d: int, q: int, a_d: int) -> WeightDistribution:
    """Closed-form Hamming-metric NMDS distribution from A_d."""
    if d != n - k:
        raise ValueError(f"NMDS parameters need d = n - k, got d={d}, n={n}, k={k}")
    by_size = [0] * (n + 1)
    by_size[0] = 1
    for s in range(d, n + 1):
        total = sum(
            (-1) ** l * comb(s, l) * comb(n, s) * (q ** (s - d - l) - 1)
            for l in range(s - d)
        )
        total += (-1) ** (s - d) * comb(n - d, s - d) * a_d
        by_size[s] = total
    return WeightDistribution(tuple(by_size))
