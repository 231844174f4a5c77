"""Ordered codes as point sets in the unit cube.

Points are exact base-q fixed-point values: coordinate i of a codeword is
stored as an integer numerator over q^r.  All interval membership tests are
integer divisions; no floating point touches any count.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from pathlib import Path
from typing import Iterator

import numpy as np

from .code import LinearCode, classify
from .errors import check_budget
from .ordered import OrderedSpace, detect_chain_product
from .poset import Ideal

_CHUNK = 1 << 15

#: Perfect-cover checks enumerate GF(q)^n only up to this many vectors;
#: beyond it, disjointness plus cardinality accounting substitutes.
COVER_ENUM_LIMIT = 2**20


@dataclass(frozen=True)
class ElementaryInterval:
    """The box prod_i [a_i / q^{d_i}, (a_i+1) / q^{d_i})."""

    resolutions: tuple[int, ...]  # d_i
    anchors: tuple[int, ...]  # a_i

    def __post_init__(self):
        if len(self.resolutions) != len(self.anchors):
            raise ValueError("resolutions and anchors must have equal length")
        if any(d < 0 for d in self.resolutions) or any(a < 0 for a in self.anchors):
            raise ValueError("resolutions and anchors must be nonnegative")

    @property
    def volume_exponent(self) -> int:
        """Volume is q^-volume_exponent."""
        return sum(self.resolutions)

    def describe(self, q: int) -> str:
        parts = []
        for d, a in zip(self.resolutions, self.anchors):
            parts.append(f"[{a}/{q}^{d},{a + 1}/{q}^{d})")
        return "x".join(parts)


class PointSet:
    """Exact points of U^n: integer numerators over the common q^r."""

    def __init__(self, space: OrderedSpace, numerators):
        self.space = space
        denom = space.q**space.r
        pts = []
        for row in numerators:
            row = tuple(int(v) for v in row)
            if len(row) != space.n:
                raise ValueError(f"point has {len(row)} coordinates, expected {space.n}")
            if any(not 0 <= v < denom for v in row):
                raise ValueError(f"numerator outside [0, {denom}) in {row}")
            pts.append(row)
        self.numerators = tuple(pts)
        self.denominator = denom

    def __len__(self) -> int:
        return len(self.numerators)

    def __repr__(self):
        return f"PointSet({len(self)} points in U^{self.space.n}, base {self.space.q})"


def code_to_points(code: LinearCode, max_enum: int | None = None) -> PointSet:
    """Map a chain-product code into the cube: x_i = sum_j c_ij q^{j-r-1}."""
    detected = detect_chain_product(code.poset)
    if detected is None:
        raise ValueError("cube points are defined for chain-product posets only")
    nb, r = detected
    q = code.field.q
    space = OrderedSpace(nb, r, q)
    total = code.enum_size()
    check_budget("codeword enumeration", total, max_enum)
    powers = q ** np.arange(r, dtype=np.int64)  # digit j (0-based) weighs q^j
    nums = np.empty((total, nb), dtype=np.int64)
    msg_powers = q ** np.arange(code.k, dtype=np.int64)[None, :]
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        msgs = (np.arange(start, stop, dtype=np.int64)[:, None] // msg_powers) % q
        words = (msgs @ code.generator) % q
        nums[start:stop] = words.reshape(stop - start, nb, r) @ powers
    return PointSet(space, nums)


def interval_count(ps: PointSet, interval: ElementaryInterval) -> int:
    """Exact number of points inside an elementary interval."""
    space = ps.space
    if len(interval.resolutions) != space.n:
        raise ValueError(f"interval has {len(interval.resolutions)} dimensions, expected {space.n}")
    q, r = space.q, space.r
    for d, a in zip(interval.resolutions, interval.anchors):
        if d > r:
            raise ValueError(f"resolution {d} exceeds the point resolution r={r}")
        if a >= q**d:
            raise ValueError(f"anchor {a} outside [0, q^{d})")
    shifts = [q ** (r - d) for d in interval.resolutions]
    count = 0
    for point in ps.numerators:
        if all(num // shift == a for num, shift, a in zip(point, shifts, interval.anchors)):
            count += 1
    return count


def _compositions(total: int, parts: int, cap: int) -> Iterator[tuple[int, ...]]:
    """All (d_1..d_parts) with sum = total, 0 <= d_i <= cap, lexicographic."""
    if parts == 0:
        if total == 0:
            yield ()
        return

    def rec(i: int, remaining: int, prefix: tuple[int, ...]):
        if i == parts - 1:
            if 0 <= remaining <= cap:
                yield prefix + (remaining,)
            return
        hi = min(cap, remaining)
        for d in range(hi + 1):
            yield from rec(i + 1, remaining - d, prefix + (d,))

    yield from rec(0, total, ())


def _anchor_histogram(ps: PointSet, resolutions: tuple[int, ...]) -> Counter:
    q, r = ps.space.q, ps.space.r
    shifts = [q ** (r - d) for d in resolutions]
    hist: Counter = Counter()
    for point in ps.numerators:
        hist[tuple(num // shift for num, shift in zip(point, shifts))] += 1
    return hist


def _first_bad_interval(
    ps: PointSet, resolutions: tuple[int, ...], target: int
) -> tuple[ElementaryInterval, int] | None:
    """First anchor (lexicographically) whose box count differs from target."""
    q = ps.space.q
    hist = _anchor_histogram(ps, resolutions)
    if all(c == target for c in hist.values()) and len(hist) == q ** sum(resolutions):
        return None
    for anchors in product(*(range(q**d) for d in resolutions)):
        count = hist.get(anchors, 0)
        if count != target:
            return ElementaryInterval(resolutions, anchors), count
    return None


@dataclass(frozen=True)
class IntervalFamilyCheck:
    """Result of scanning all elementary intervals of one volume."""

    ok: bool
    target: int
    counterexample: tuple[ElementaryInterval, int] | None
    families_checked: int
    truncated: bool  # some required resolutions exceeded r and were skipped

    def __bool__(self) -> bool:
        return self.ok


def _check_interval_family(ps: PointSet, exponent: int, target: int) -> IntervalFamilyCheck:
    """Verify every representable volume-q^-exponent interval holds ``target``."""
    space = ps.space
    truncated = exponent > space.r  # compositions with some d_i > r exist
    families = 0
    for resolutions in _compositions(exponent, space.n, space.r):
        families += 1
        bad = _first_bad_interval(ps, resolutions, target)
        if bad is not None:
            return IntervalFamilyCheck(False, target, bad, families, truncated)
    return IntervalFamilyCheck(True, target, None, families, truncated)


def verify_net(ps: PointSet, t: int, m: int) -> IntervalFamilyCheck:
    """Check the (t, m, n)-net property: volume q^{t-m} boxes hold q^t points.

    Intervals needing per-dimension resolution above r are not representable
    for code-derived points; they are skipped and reported via ``truncated``.
    """
    q = ps.space.q
    if len(ps) != q**m:
        raise ValueError(f"point set has {len(ps)} points, expected q^m = {q**m}")
    if t < 0 or m < t:
        raise ValueError("need 0 <= t <= m")
    return _check_interval_family(ps, m - t, q**t)


def verify_optimal_distribution(ps: PointSet, k: int) -> IntervalFamilyCheck:
    """Check optimality: every volume q^-k elementary interval holds 1 point."""
    q = ps.space.q
    if len(ps) != q**k:
        raise ValueError(f"point set has {len(ps)} points, expected q^k = {q**k}")
    return _check_interval_family(ps, k, 1)


@dataclass(frozen=True)
class DistributionCheck:
    """Report for the two-part NMDS interval characterization."""

    part1: IntervalFamilyCheck
    part2_ok: bool
    part2_witness: tuple[int, ...] | None  # anchored exponents l with q points
    part2_counterexample: tuple[tuple[int, ...], int] | None  # smaller anchored box with q points
    degenerate_k1: bool
    vacuous_note: str | None

    @property
    def ok(self) -> bool:
        return bool(self.part1) and self.part2_ok

    def __bool__(self) -> bool:
        return self.ok


def _anchored_count(ps: PointSet, exponents: tuple[int, ...]) -> int:
    """Points inside prod_i [0, q^{-l_i})."""
    q, r = ps.space.q, ps.space.r
    bounds = [q ** (r - l) for l in exponents]
    return sum(
        1
        for point in ps.numerators
        if all(num < bound for num, bound in zip(point, bounds))
    )


def verify_nmds_distribution(code: LinearCode, max_enum: int | None = None) -> DistributionCheck:
    """Theorem-style interval check of the NMDS property of an ordered code.

    Part 1: every elementary interval of volume q^-(k-1) holds exactly q
    points.  Part 2: some anchored interval prod [0, q^{-l_i}) of volume
    q^-k holds exactly q points, and no anchored interval of smaller volume
    does.
    """
    ps = code_to_points(code, max_enum)
    space = ps.space
    q, k = space.q, code.k
    degenerate = k < 2

    vacuous_note = None
    if k - 1 > space.total:
        part1 = IntervalFamilyCheck(True, q, None, 0, True)
        vacuous_note = f"no representable intervals of volume q^-{k - 1}"
    else:
        part1 = _check_interval_family(ps, k - 1, q)

    witness = None
    counterexample = None
    for exponents in product(range(space.r + 1), repeat=space.n):
        total = sum(exponents)
        if total < k or (witness is not None and total == k):
            continue
        count = _anchored_count(ps, exponents)
        if total == k and count == q:
            witness = exponents
        elif total > k and count == q:
            counterexample = (exponents, count)
            break
    part2_ok = witness is not None and counterexample is None
    return DistributionCheck(part1, part2_ok, witness, counterexample, degenerate, vacuous_note)


@dataclass(frozen=True)
class Tiling:
    """Coset partition of a code against one ideal, and its tiling status.

    Parts are the cosets of the subcode supported inside the ideal.  The
    partition is an I-tiling when that subcode is one-dimensional (q^{k-1}
    equal parts whose I-neighborhoods are single disjoint boxes); it is
    perfect when the neighborhoods also cover the whole space.
    """

    ideal: Ideal
    subcode_dim: int
    parts: tuple[tuple[tuple[int, ...], ...], ...]
    is_tiling: bool
    perfect: bool
    cover_checked: bool  # False when coverage came from cardinality accounting


def verify_tiling(
    code: LinearCode,
    ideal: Ideal,
    max_enum: int | None = None,
    cover_enum_limit: int = COVER_ENUM_LIMIT,
) -> Tiling:
    """Partition the code into cosets of ker H[I] and test the tiling clauses."""
    if code.k < 2:
        raise ValueError("tiling verification needs k >= 2 (k=1 is degenerate)")
    if ideal.poset != code.poset:
        raise ValueError("ideal belongs to a different poset")
    q = code.field.q
    n = code.n
    from . import linalg  # local alias, avoids polluting module surface

    cols = [lab - 1 for lab in ideal.labels]
    dim = len(cols) - linalg.rank(code.parity_check[:, cols], q) if cols else 0

    words = code.codewords(max_enum)
    outside = [i for i in range(n) if i not in set(cols)]
    groups: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for row in words:
        sig = tuple(int(v) for v in row[outside])
        groups.setdefault(sig, []).append(tuple(int(v) for v in row))
    parts = tuple(
        tuple(sorted(groups[sig])) for sig in sorted(groups)
    )

    is_tiling = dim == 1 and len(parts) == q ** (code.k - 1) and all(
        len(p) == q for p in parts
    )

    perfect = False
    cover_checked = False
    if is_tiling:
        sigs = set(groups)
        if q**n <= cover_enum_limit:
            cover_checked = True
            hits = 0
            powers = q ** np.arange(n, dtype=np.int64)[None, :]
            for start in range(0, q**n, _CHUNK):
                stop = min(start + _CHUNK, q**n)
                vecs = (np.arange(start, stop, dtype=np.int64)[:, None] // powers) % q
                restricted = vecs[:, outside]
                hits += sum(1 for row in restricted if tuple(int(v) for v in row) in sigs)
            perfect = hits == q**n
        else:
            # disjointness holds (signatures are distinct by construction);
            # coverage follows iff the q^{k-1} boxes of size q^{|I|} fill q^n
            perfect = code.k - 1 + ideal.size == n
    return Tiling(ideal, dim, parts, is_tiling, perfect, cover_checked)


@dataclass(frozen=True)
class TilingSummary:
    """Aggregate of Theorem-style tiling checks across ideal sizes."""

    all_perfect_at_nk1: bool
    some_tiling_at_nk: bool
    none_smaller: bool
    first_failure: str | None

    @property
    def ok(self) -> bool:
        return self.all_perfect_at_nk1 and self.some_tiling_at_nk and self.none_smaller

    def __bool__(self) -> bool:
        return self.ok


def nmds_by_tiling(code: LinearCode, max_enum: int | None = None) -> TilingSummary:
    """Full tiling characterization: perfect at n-k+1, tiling at n-k, none below."""
    n, k = code.n, code.k
    if not 2 <= k <= n - 1:
        raise ValueError("tiling characterization needs 2 <= k <= n-1")
    first_failure = None

    all_perfect = True
    for ideal in code.poset.ideals(size=n - k + 1):
        t = verify_tiling(code, ideal, max_enum)
        if not (t.is_tiling and t.perfect):
            all_perfect = False
            first_failure = f"ideal {set(ideal.labels)} of size {n - k + 1} not a perfect tiling"
            break

    some_tiling = False
    for ideal in code.poset.ideals(size=n - k):
        if verify_tiling(code, ideal, max_enum).is_tiling:
            some_tiling = True
            break
    if not some_tiling and first_failure is None:
        first_failure = f"no tiling at any ideal of size {n - k}"

    none_smaller = True
    for size in range(1, n - k):
        for ideal in code.poset.ideals(size=size):
            if verify_tiling(code, ideal, max_enum).is_tiling:
                none_smaller = False
                if first_failure is None:
                    first_failure = f"unexpected tiling at ideal {set(ideal.labels)} of size {size}"
                break
        if not none_smaller:
            break

    return TilingSummary(all_perfect, some_tiling, none_smaller, first_failure)


def write_points_csv(ps: PointSet, path: str | Path) -> None:
    """CSV export: header x1..xn, each cell `num/q^r=<12-place decimal>`."""
    path = Path(path)
    denom = ps.denominator
    lines = [",".join(f"x{i}" for i in range(1, ps.space.n + 1))]
    for point in ps.numerators:
        lines.append(",".join(f"{num}/{denom}={num / denom:.12f}" for num in point))
    path.write_text("\n".join(lines) + "\n")
