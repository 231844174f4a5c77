"""Explicit NMDS generator matrices in the ordered Hamming space (n = 1, 2, 3)
plus a seeded random search used to grow test corpora.

Every constructor assembles the published template, then self-verifies the
result through :func:`posetcodes.code.classify`; a verification failure
raises :class:`ConstructionError` with the offending matrix (tripwire, not
an expected path).
"""

from __future__ import annotations

import random

import numpy as np

from . import linalg
from .code import LinearCode, classify
from .errors import ConstructionError
from .field import PrimeField
from .ordered import chain_product_poset
from .poset import Poset


def _la_weight(vec) -> int:
    """Top nonzero position (1-based) of a single-block vector; 0 if zero."""
    w = 0
    for j, v in enumerate(vec, start=1):
        if v:
            w = j
    return w


def _block_vector(name: str, vec, weight: int, q: int, rng: random.Random | None):
    """Validate or synthesize a length-``weight`` vector of exact l.a. weight.

    ``vec=None`` gives the canonical unit vector (free low entries zero);
    with an RNG the free entries and the top entry are drawn uniformly.
    """
    if vec is None:
        out = [0] * weight
        if rng is None:
            out[weight - 1] = 1
        else:
            for j in range(weight - 1):
                out[j] = rng.randrange(q)
            out[weight - 1] = rng.randrange(1, q)
        return out
    vec = [v % q for v in vec]
    if _la_weight(vec) != weight:
        raise ValueError(f"{name} must have left-adjusted weight exactly {weight}")
    return vec[:weight]


def _verified(rows, q: int, n_blocks: int, r: int, family: str) -> LinearCode:
    code = LinearCode(PrimeField(q), chain_product_poset(n_blocks, r), rows)
    verdict = classify(code)
    if not verdict.is_nmds:
        raise ConstructionError(
            f"{family} self-check failed: classified {verdict.label} "
            f"(d={verdict.d}, d2={verdict.d2}, d_dual={verdict.dual_distance}) "
            f"for generator\n{np.array(rows)}"
        )
    return code


def construct_n1(
    q: int,
    r: int,
    k: int,
    x=None,
    m_block=None,
    seed: int | None = None,
) -> LinearCode:
    """[r, k, r-k] NMDS code on a single chain.

    Top row carries a vector x of l.a. weight d = r-k; the remaining rows
    are (M | 0 | I_{k-1}) with M free (zero by default, seeded-random with
    ``seed``).
    """
    if not 1 <= k <= r - 1:
        raise ValueError(f"need 1 <= k <= r-1, got k={k}, r={r}")
    rng = random.Random(seed) if seed is not None else None
    d = r - k
    x = _block_vector("x", x, d, q, rng)
    if m_block is None:
        if rng is None:
            m_rows = [[0] * d for _ in range(k - 1)]
        else:
            m_rows = [[rng.randrange(q) for _ in range(d)] for _ in range(k - 1)]
    else:
        m_rows = [[v % q for v in row] for row in m_block]
        if len(m_rows) != k - 1 or any(len(row) != d for row in m_rows):
            raise ValueError(f"M must be {k - 1} x {d}")

    rows = [x + [0] * (r - d)]
    for i in range(k - 1):
        row = m_rows[i] + [0] * (r - d)
        row[d + 1 + i] = 1
        rows.append(row)
    return _verified(rows, q, 1, r, "construct_n1")


def _inverse_diagonal(size: int) -> np.ndarray:
    return np.eye(size, dtype=np.int64)[::-1]


def _cross_block(i: int, j: int, r: int) -> np.ndarray:
    """The (i-1) x (r-j-1) block pairing dimension-i rows with block j."""
    rows, cols = i - 1, r - j - 1
    out = np.zeros((rows, cols), dtype=np.int64)
    if rows == 0 or cols == 0:
        return out
    if i + j > r:
        out[:cols, :] = _inverse_diagonal(cols)
    else:
        out[:, cols - rows :] = _inverse_diagonal(rows)
    return out


def construct_n2(
    q: int,
    r: int,
    k1: int,
    k2: int,
    u=None,
    v=None,
    seed: int | None = None,
) -> LinearCode:
    """[2r, k1+k2, 2r-k1-k2] NMDS code on two chains.

    Admissible parameters are 1 <= k1, k2 <= r-1 (otherwise some template
    sub-block would have negative dimensions; rejected explicitly).
    """
    for name, val in (("k1", k1), ("k2", k2)):
        if not 1 <= val <= r - 1:
            raise ValueError(
                f"unsupported parameters: need 1 <= {name} <= r-1, got {name}={val}, r={r}"
            )
    rng = random.Random(seed) if seed is not None else None
    u = _block_vector("u", u, r - k1, q, rng)
    v = _block_vector("v", v, r - k2, q, rng)
    K = k1 + k2

    G = np.zeros((K, 2 * r), dtype=np.int64)
    G[0, 0 : r - k1] = u
    G[0, r : r + (r - k2)] = v
    G[1, r - k1] = 1  # position r-k1+1 inside block 1
    G[1, r + (r - k2)] = 1
    # rows 2..k1: (0 | 0 | 0 | I_{k1-1})  and  (E_r(k1,k2) | 0 | 0 | 0)
    if k1 > 1:
        G[2 : 2 + (k1 - 1), r - k1 + 1 : r] = np.eye(k1 - 1, dtype=np.int64)
        G[2 : 2 + (k1 - 1), r : r + (r - k2 - 1)] = _cross_block(k1, k2, r)
    # rows k1+1..K-1: (E_r(k2,k1) | 0 | 0 | 0)  and  (0 | 0 | 0 | I_{k2-1})
    if k2 > 1:
        G[1 + k1 :, 0 : r - k1 - 1] = _cross_block(k2, k1, r)
        G[1 + k1 :, 2 * r - (k2 - 1) :] = np.eye(k2 - 1, dtype=np.int64)

    code = _verified(G.tolist(), q, 2, r, "construct_n2")
    verdict = classify(code)
    if verdict.d != 2 * r - K:
        raise ConstructionError(
            f"construct_n2 distance check failed: d={verdict.d}, expected {2 * r - K}"
        )
    return code


# Suffix patterns over the last six columns of each block, rows 2..6;
# row 1 of each block is the free vector (u, v or w) of l.a. weight r-2.
_N3_SUFFIX = {
    "u": [
        (0, 0, 0, 0, 1, 0),
        (0, 1, 0, 0, 1, 0),
        (1, 0, 0, 0, 0, 1),
        (0, 1, 0, 0, 0, 1),
        (0, 0, 1, 0, 0, 0),
    ],
    "v": [
        (0, 0, 0, 0, 1, 0),
        (0, 1, 0, 0, 0, 0),
        (0, 0, 1, 0, 0, 0),
        (0, 1, 0, 0, 0, 1),
        (1, 0, 0, 0, 0, 1),
    ],
    "w": [
        (0, 1, 0, 0, 0, 0),
        (0, 0, 0, 0, 1, 0),
        (0, 1, 0, 0, 0, 1),
        (0, 0, 1, 0, 0, 0),
        (1, 0, 0, 0, 0, 1),
    ],
}


def construct_n3(
    q: int,
    r: int,
    u=None,
    v=None,
    w=None,
    seed: int | None = None,
) -> LinearCode:
    """[3r, 6] NMDS code on three chains; needs q >= 3 and r >= 6.

    The template leaves the distance implicit; the self-check computes it
    (d = 3r-6 for NMDS parameters) and verifies the NMDS classification.
    """
    if q < 3:
        raise ValueError(f"unsupported parameters: base must satisfy q >= 3, got q={q}")
    if r < 6:
        raise ValueError(f"unsupported parameters: need r >= 6, got r={r}")
    rng = random.Random(seed) if seed is not None else None
    vectors = {
        "u": _block_vector("u", u, r - 2, q, rng),
        "v": _block_vector("v", v, r - 2, q, rng),
        "w": _block_vector("w", w, r - 2, q, rng),
    }

    G = np.zeros((6, 3 * r), dtype=np.int64)
    for b, name in enumerate(("u", "v", "w")):
        base = b * r
        G[0, base : base + (r - 2)] = vectors[name]
        for i, suffix in enumerate(_N3_SUFFIX[name], start=1):
            G[i, base + r - 6 : base + r] = suffix
    return _verified(G.tolist(), q, 3, r, "construct_n3")


def search_random_nmds(
    poset: Poset,
    q: int,
    k: int,
    seed: int = 0,
    max_trials: int = 1000,
) -> LinearCode | None:
    """First NMDS hit among seeded uniform random k x n generators, or None.

    Deterministic for a fixed seed; rank-deficient draws count as trials.
    """
    if not 1 <= k <= poset.n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got k={k}, n={poset.n}")
    field = PrimeField(q)
    rng = random.Random(seed)
    for _ in range(max_trials):
        rows = [[rng.randrange(q) for _ in range(poset.n)] for _ in range(k)]
        if linalg.rank(np.array(rows), q) != k:
            continue
        code = LinearCode(field, poset, rows)
        if classify(code).is_nmds:
            return code
    return None
