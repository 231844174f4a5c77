import random
from itertools import product

import numpy as np
import pytest

from posetcodes import linalg


def rowspace_size(mat, q):
    """|row space| by enumerating all row combinations (independent oracle)."""
    rows = [tuple(int(v) for v in r) for r in np.asarray(mat) % q]
    seen = set()
    for coeffs in product(range(q), repeat=len(rows)):
        vec = tuple(
            sum(c * r[i] for c, r in zip(coeffs, rows)) % q for i in range(len(rows[0]))
        )
        seen.add(vec)
    return len(seen)


@pytest.mark.parametrize("q", [2, 3, 5])
def test_rank_against_rowspace_oracle(q):
    rng = random.Random(17 * q)
    for _ in range(25):
        m, n = rng.randint(1, 4), rng.randint(1, 5)
        mat = np.array([[rng.randrange(q) for _ in range(n)] for _ in range(m)])
        assert q ** linalg.rank(mat, q) == rowspace_size(mat, q)


@pytest.mark.parametrize("q", [2, 3, 5])
def test_rref_structure(q):
    rng = random.Random(5 * q)
    for _ in range(25):
        m, n = rng.randint(1, 5), rng.randint(1, 6)
        mat = np.array([[rng.randrange(q) for _ in range(n)] for _ in range(m)])
        R, pivots = linalg.rref(mat, q)
        assert pivots == sorted(pivots)
        for ri, pc in enumerate(pivots):
            col = R[:, pc]
            assert col[ri] == 1 and (np.delete(col, ri) == 0).all()
        assert len(pivots) == linalg.rank(mat, q)


@pytest.mark.parametrize("q", [2, 3, 5])
def test_nullspace(q):
    rng = random.Random(11 * q)
    for _ in range(25):
        m, n = rng.randint(1, 4), rng.randint(1, 6)
        mat = np.array([[rng.randrange(q) for _ in range(n)] for _ in range(m)])
        basis = linalg.nullspace(mat, q)
        assert basis.shape == (n - linalg.rank(mat, q), n)
        assert (mat @ basis.T % q == 0).all()
        if basis.shape[0]:
            assert linalg.rank(basis, q) == basis.shape[0]


def test_nullspace_edge_cases():
    eye = np.eye(3, dtype=np.int64)
    assert linalg.nullspace(eye, 2).shape == (0, 3)
    empty = np.zeros((0, 3), dtype=np.int64)
    assert np.array_equal(linalg.nullspace(empty, 2), np.eye(3, dtype=np.int64))


def test_row_space_canonical_invariant():
    q = 3
    mat = np.array([[1, 2, 0], [0, 1, 1]])
    swapped = np.array([[0, 1, 1], [1, 2, 0]])
    scaled = np.array([[2, 1, 0], [0, 2, 2]])
    base = linalg.row_space_canonical(mat, q)
    assert np.array_equal(base, linalg.row_space_canonical(swapped, q))
    assert np.array_equal(base, linalg.row_space_canonical(scaled, q))


def test_as_matrix_validation():
    out = linalg.as_matrix([[1, 5], [2, 3]], 3)
    assert out.tolist() == [[1, 2], [2, 0]]
    with pytest.raises(ValueError):
        linalg.as_matrix([[1, 2], [3]], 5)
    assert linalg.as_matrix([], 2, cols=4).shape == (0, 4)
