"""Linear codes over GF(q) with distances measured by a coordinate poset.

Provides distances, duals, generalized weights, orthogonal-array strength,
the MDS/NMDS classification, and the shortened/punctured NMDS derivations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np

from . import linalg
from .errors import ConstructionError, FileFormatError, check_budget
from .field import PrimeField
from .kernels import min_support_weight, pattern_counts
from .ordered import chain_product_poset, detect_chain_product
from .poset import Ideal, Poset, parse_poset_text

_CHUNK = 1 << 15


def poset_weight(x, poset: Poset) -> int:
    """Size of the smallest ideal containing the support of x."""
    if len(x) != poset.n:
        raise ValueError(f"vector length {len(x)} != poset size {poset.n}")
    bits = 0
    for i, v in enumerate(x):
        if v:
            bits |= 1 << i
    return poset.closure_bits(bits).bit_count()


def poset_distance(x, y, field: PrimeField, poset: Poset) -> int:
    """d_P(x, y) = weight of x - y."""
    if len(x) != len(y):
        raise ValueError("vectors must have equal length")
    diff = [(a - b) % field.q for a, b in zip(x, y)]
    return poset_weight(diff, poset)


class LinearCode:
    """An [n, k] linear code: a full-row-rank generator bound to a poset."""

    def __init__(self, field: PrimeField, poset: Poset, generator):
        G = linalg.as_matrix(generator, field.q, cols=poset.n)
        if G.shape[0] and linalg.rank(G, field.q) != G.shape[0]:
            raise ValueError("generator matrix must have full row rank")
        G.setflags(write=False)
        self.field = field
        self.poset = poset
        self.generator = G
        self.n = poset.n
        self.k = G.shape[0]

    @cached_property
    def parity_check(self) -> np.ndarray:
        """Canonical (n-k) x n parity check: G @ H.T = 0."""
        H = linalg.nullspace(self.generator, self.field.q)
        H.setflags(write=False)
        return H

    def dual(self) -> "LinearCode":
        """Dual code, living in the dual poset."""
        return LinearCode(self.field, self.poset.dual(), self.parity_check)

    def enum_size(self) -> int:
        return self.field.q**self.k

    def codewords(self, max_enum: int | None = None) -> np.ndarray:
        """All q^k codewords in message-index order, budget-gated."""
        total = self.enum_size()
        check_budget("codeword enumeration", total, max_enum)
        q = self.field.q
        out = np.empty((total, self.n), dtype=np.int64)
        powers = q ** np.arange(self.k, dtype=np.int64)[None, :]
        for start in range(0, total, _CHUNK):
            stop = min(start + _CHUNK, total)
            msgs = (np.arange(start, stop, dtype=np.int64)[:, None] // powers) % q
            out[start:stop] = (msgs @ self.generator) % q
        return out

    def columns(self, labels) -> np.ndarray:
        """Generator columns for the given 1-based coordinate labels."""
        return self.generator[:, [lab - 1 for lab in labels]]

    def same_span(self, other: "LinearCode") -> bool:
        """True iff the two codes are the same set of vectors."""
        if self.field != other.field or self.n != other.n:
            return False
        q = self.field.q
        return np.array_equal(
            linalg.row_space_canonical(self.generator, q),
            linalg.row_space_canonical(other.generator, q),
        )

    def __repr__(self):
        return f"LinearCode(n={self.n}, k={self.k}, q={self.field.q})"


def min_distance(code: LinearCode, max_enum: int | None = None) -> int:
    """Minimum poset weight over nonzero codewords, by codeword enumeration."""
    if code.k < 1:
        raise ValueError("minimum distance is undefined for the zero code")
    check_budget("codeword enumeration", code.enum_size(), max_enum)
    return min_support_weight(code.generator, code.field.q, code.poset.down_bits_array)


@dataclass(frozen=True)
class WeightProfile:
    """Generalized weights d_1 < d_2 < ... < d_k."""

    weights: tuple[int, ...]
    n: int
    k: int

    def __post_init__(self):
        d = self.weights
        if len(d) != self.k:
            raise RuntimeError("weight profile has wrong length (bug)")
        for t in range(self.k):
            if t and d[t] <= d[t - 1]:
                raise RuntimeError("generalized weights must strictly increase (bug)")
            if d[t] > self.n - self.k + t + 1:
                raise RuntimeError("generalized Singleton bound violated (bug)")

    def __getitem__(self, t: int) -> int:
        """d_t with the paper's 1-based t."""
        if not 1 <= t <= self.k:
            raise IndexError(f"t must be in 1..{self.k}")
        return self.weights[t - 1]


def generalized_weights(code: LinearCode, max_ideals: int | None = None) -> WeightProfile:
    """Profile via the rank criterion: d_t = min{|I| : |I| - rank H[I] >= t}."""
    if code.k < 1:
        raise ValueError("generalized weights are undefined for the zero code")
    q = code.field.q
    H = code.parity_check
    found: list[int] = []
    next_t = 1
    scanned = 0
    for s in range(1, code.n + 1):
        for ideal in code.poset.ideals(size=s):
            scanned += 1
            check_budget("ideal enumeration", scanned, max_ideals)
            corank = s - linalg.rank(H[:, [lab - 1 for lab in ideal.labels]], q)
            while next_t <= code.k and corank >= next_t:
                found.append(s)
                next_t += 1
        if next_t > code.k:
            break
    return WeightProfile(tuple(found), code.n, code.k)


def wei_duality_check(
    code: LinearCode,
    profile: WeightProfile | None = None,
    dual_profile: WeightProfile | None = None,
) -> bool:
    """Wei-duality partition: profiles of C and its dual tile {1..n}."""
    if not 1 <= code.k <= code.n - 1:
        raise ValueError("duality check needs 1 <= k <= n-1")
    if profile is None:
        profile = generalized_weights(code)
    if dual_profile is None:
        dual_profile = generalized_weights(code.dual())
    own = set(profile.weights)
    mirrored = {code.n + 1 - d for d in dual_profile.weights}
    return (own | mirrored == set(range(1, code.n + 1))) and not (own & mirrored)


@dataclass(frozen=True)
class OrthogonalArrayCertificate:
    """Maximal verified strength t with index theta = rows / q^t."""

    strength: int
    index: int
    rows: int

    def __post_init__(self):
        if self.index * (self.rows // self.index) != self.rows:
            raise RuntimeError("inconsistent orthogonal array certificate (bug)")


def oa_strength(
    code: LinearCode,
    in_poset: Poset | None = None,
    max_enum: int | None = None,
) -> OrthogonalArrayCertificate:
    """Maximal t such that the codeword array is balanced on every size-t ideal.

    Balance is verified by exhaustive pattern counting over all q^k rows.
    ``in_poset`` overrides the poset whose ideals define "left-adjusted"
    (e.g. pass the primal poset to check a dual code as an array in it).
    """
    poset = in_poset if in_poset is not None else code.poset
    if poset.n != code.n:
        raise ValueError("poset size does not match code length")
    q = code.field.q
    rows = code.enum_size()
    check_budget("codeword enumeration", rows, max_enum)
    strength = 0
    for t in range(1, min(code.n, code.k) + 1):
        expected = q ** (code.k - t)
        balanced = True
        for ideal in poset.ideals(size=t):
            counts = pattern_counts(code.columns(ideal.labels), q)
            if counts.min() != expected or counts.max() != expected:
                balanced = False
                break
        if not balanced:
            break
        strength = t
    return OrthogonalArrayCertificate(strength, q ** (code.k - strength), rows)


@dataclass(frozen=True)
class Classification:
    """Verdict plus the evidence it was computed from."""

    category: str  # MDS | NMDS | AMDS-not-NMDS | other
    n: int
    k: int
    d: int
    d2: int | None
    dual_distance: int
    degenerate_k1: bool = False

    @property
    def is_nmds(self) -> bool:
        return self.category == "NMDS"

    @property
    def duality_criterion(self) -> bool:
        """The d(C) + d(dual) = n test."""
        return self.d + self.dual_distance == self.n

    @property
    def label(self) -> str:
        if self.degenerate_k1 and self.is_nmds:
            return "NMDS (degenerate k=1)"
        return self.category


def classify(
    code: LinearCode,
    profile: WeightProfile | None = None,
    dual_profile: WeightProfile | None = None,
) -> Classification:
    """MDS/NMDS/AMDS classification from (d_1, d_2), cross-checked via duality.

    For k = 1 the second generalized weight does not exist, so the verdict
    comes from the d + d_dual = n criterion alone and is flagged degenerate.
    """
    n, k = code.n, code.k
    if k == 0 or k == n:
        raise ValueError(f"classification requires 1 <= k <= n-1, got k={k}, n={n}")
    if profile is None:
        profile = generalized_weights(code)
    d = profile[1]
    d2 = profile[2] if k >= 2 else None
    if dual_profile is None:
        dual_profile = generalized_weights(code.dual())
    dual_distance = dual_profile[1]
    by_duality = d + dual_distance == n

    if k == 1:
        if d == n:
            category = "MDS"
        elif by_duality:
            category = "NMDS"
        else:
            category = "other"
        return Classification(category, n, k, d, d2, dual_distance, degenerate_k1=(category == "NMDS"))

    if d == n - k + 1:
        category = "MDS"
    elif d == n - k and d2 == n - k + 2:
        category = "NMDS"
    elif d == n - k:
        category = "AMDS-not-NMDS"
    else:
        category = "other"
    if (category == "NMDS") != by_duality:
        raise RuntimeError(
            f"classification cross-check failed: definition says {category}, "
            f"but d + d_dual = {d} + {dual_distance} vs n = {n} (bug)"
        )
    return Classification(category, n, k, d, d2, dual_distance)


@dataclass(frozen=True)
class DerivedCodes:
    """Shortened [n-1, k-1, d] and punctured [n-1, k] NMDS derivations."""

    shortened: LinearCode
    shortened_deleted: int
    punctured: LinearCode
    punctured_deleted: int


def derive_codes(code: LinearCode) -> DerivedCodes:
    """Search coordinate deletions yielding NMDS codes on the induced poset.

    Shortening deletes a parity-check column; puncturing deletes a generator
    column.  Every candidate is verified by :func:`classify`; the lowest
    qualifying label wins.  Raises :class:`ConstructionError` when no
    coordinate qualifies (reported, never silent).
    """
    cls = classify(code)
    if not cls.is_nmds:
        raise ValueError("derivations are defined for NMDS codes only")
    if code.k < 2 or code.n - code.k < 2:
        raise ValueError("derivations need k >= 2 and n-k >= 2")
    q = code.field.q
    n = code.n

    shortened = None
    shortened_deleted = None
    failures = []
    for lab in range(1, n + 1):
        keep = [x - 1 for x in range(1, n + 1) if x != lab]
        H2 = code.parity_check[:, keep]
        if linalg.rank(H2, q) != n - code.k:
            failures.append((lab, "parity rank drops"))
            continue
        cand = LinearCode(code.field, code.poset.delete(lab), linalg.nullspace(H2, q))
        verdict = classify(cand)
        if verdict.is_nmds and verdict.d == cls.d:
            shortened = cand
            shortened_deleted = lab
            break
        failures.append((lab, f"classified {verdict.label}, d={verdict.d}"))
    if shortened is None:
        raise ConstructionError(f"no shortening coordinate found; tried {failures}")

    punctured = None
    punctured_deleted = None
    failures = []
    for lab in range(1, n + 1):
        keep = [x - 1 for x in range(1, n + 1) if x != lab]
        G2 = code.generator[:, keep]
        if linalg.rank(G2, q) != code.k:
            failures.append((lab, "generator rank drops"))
            continue
        cand = LinearCode(code.field, code.poset.delete(lab), G2)
        verdict = classify(cand)
        if verdict.is_nmds:
            punctured = cand
            punctured_deleted = lab
            break
        failures.append((lab, f"classified {verdict.label}, d={verdict.d}"))
    if punctured is None:
        raise ConstructionError(f"no puncturing coordinate found; tried {failures}")

    return DerivedCodes(shortened, shortened_deleted, punctured, punctured_deleted)


# -- text format ----------------------------------------------------------
#
#   q=<int>
#   poset=ordered n=<int> r=<int> | poset=hamming n=<int> | poset=file:<path>
#   G=
#   <k rows of n entries: contiguous digits, or whitespace-separated>


def _parse_poset_line(line: str, line_no: int, base_dir: Path) -> Poset:
    if line.startswith("poset=ordered"):
        parts = dict(
            tok.split("=", 1) for tok in line[len("poset=ordered") :].split() if "=" in tok
        )
        try:
            return chain_product_poset(int(parts["n"]), int(parts["r"]))
        except (KeyError, ValueError) as exc:
            raise FileFormatError(line_no, f"bad ordered poset spec: {exc}") from None
    if line.startswith("poset=hamming"):
        parts = dict(
            tok.split("=", 1) for tok in line[len("poset=hamming") :].split() if "=" in tok
        )
        try:
            return Poset.antichain(int(parts["n"]))
        except (KeyError, ValueError) as exc:
            raise FileFormatError(line_no, f"bad hamming poset spec: {exc}") from None
    if line.startswith("poset=file:"):
        path = base_dir / line[len("poset=file:") :].strip()
        if not path.exists():
            raise FileFormatError(line_no, f"poset file not found: {path}")
        return parse_poset_text(path.read_text())
    raise FileFormatError(line_no, f"unrecognized poset spec {line!r}")


def _parse_row(line: str, line_no: int, n: int, q: int) -> list[int]:
    if any(ch.isspace() for ch in line):
        toks = line.split()
    else:
        toks = list(line)
    try:
        row = [int(t) for t in toks]
    except ValueError:
        raise FileFormatError(line_no, f"non-integer entry in row {line!r}") from None
    if len(row) != n:
        raise FileFormatError(line_no, f"row has {len(row)} entries, expected {n}")
    if any(not 0 <= v < q for v in row):
        raise FileFormatError(line_no, f"entry outside 0..{q - 1} in row {line!r}")
    return row


def parse_code_text(text: str, base_dir: str | Path = ".") -> LinearCode:
    """Parse the shared code file format; raises FileFormatError on problems."""
    base_dir = Path(base_dir)
    q = None
    poset = None
    rows: list[list[int]] = []
    saw_g = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if q is None:
            if not line.startswith("q="):
                raise FileFormatError(line_no, f"expected 'q=<int>', got {line!r}")
            try:
                q = int(line[2:])
            except ValueError:
                raise FileFormatError(line_no, f"invalid field size {line[2:]!r}") from None
            try:
                PrimeField(q)
            except ValueError as exc:
                raise FileFormatError(line_no, str(exc)) from None
            continue
        if poset is None:
            poset = _parse_poset_line(line, line_no, base_dir)
            continue
        if not saw_g:
            if line != "G=":
                raise FileFormatError(line_no, f"expected 'G=', got {line!r}")
            saw_g = True
            continue
        rows.append(_parse_row(line, line_no, poset.n, q))
    if q is None or poset is None or not saw_g:
        raise FileFormatError(1, "incomplete code file (need q=, poset=, G= sections)")
    try:
        return LinearCode(PrimeField(q), poset, rows)
    except ValueError as exc:
        raise FileFormatError(1, str(exc)) from None


def read_code_file(path: str | Path) -> LinearCode:
    path = Path(path)
    return parse_code_text(path.read_text(), base_dir=path.parent)


def write_code_text(code: LinearCode, poset_file: str | None = None) -> str:
    """Render the shared code file format.

    General posets need an external poset file (pass its path as written in
    the code file); antichains and chain products are encoded inline.
    """
    q = code.field.q
    lines = [f"q={q}"]
    detected = detect_chain_product(code.poset)
    if detected is not None and detected[1] == 1:
        lines.append(f"poset=hamming n={detected[0]}")
    elif detected is not None:
        lines.append(f"poset=ordered n={detected[0]} r={detected[1]}")
    elif poset_file is not None:
        lines.append(f"poset=file:{poset_file}")
    else:
        raise ValueError("general posets need poset_file= to reference a poset file")
    lines.append("G=")
    for row in code.generator:
        if q <= 10:
            lines.append("".join(str(int(v)) for v in row))
        else:
            lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"
