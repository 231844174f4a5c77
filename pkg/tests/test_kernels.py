"""Backend-agreement and oracle tests for the scan kernels."""

import random
from collections import Counter

import numpy as np
import pytest

from helpers import all_codewords, assorted_poset, random_code, support_closure_size
from posetcodes.kernels import _fallback

try:
    from posetcodes.kernels import _core
except ImportError:
    _core = None

IMPLS = [("python", _fallback)] + ([("compiled", _core)] if _core else [])


def cases(seed=23, count=12):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, 8)
        q = rng.choice([2, 3, 5])
        k = rng.randint(1, min(n, 4))
        poset = assorted_poset(n, rng)
        out.append(random_code(poset, q, k, rng))
    return out


@pytest.mark.parametrize("name,impl", IMPLS)
def test_support_bits_against_oracle(name, impl):
    for code in cases():
        bits = impl.support_bits(
            np.ascontiguousarray(code.generator), code.field.q, code.poset.down_bits_array
        )
        words = all_codewords(code)
        assert len(bits) == len(words)
        for got, word in zip(bits.tolist(), words):
            expected = code.poset.closure_bits(
                sum(1 << i for i, v in enumerate(word) if v)
            )
            assert got == expected


@pytest.mark.parametrize("name,impl", IMPLS)
def test_min_support_weight_against_oracle(name, impl):
    for code in cases(seed=5):
        got = impl.min_support_weight(
            np.ascontiguousarray(code.generator), code.field.q, code.poset.down_bits_array
        )
        expected = min(
            support_closure_size(w, code.poset) for w in all_codewords(code) if any(w)
        )
        assert got == expected


@pytest.mark.parametrize("name,impl", IMPLS)
def test_pattern_counts_against_oracle(name, impl):
    rng = random.Random(99)
    for code in cases(seed=7):
        t = rng.randint(1, code.n)
        labels = rng.sample(range(1, code.n + 1), t)
        got = impl.pattern_counts(
            np.ascontiguousarray(code.columns(labels)), code.field.q
        )
        oracle = Counter(
            tuple(w[lab - 1] for lab in labels) for w in all_codewords(code)
        )
        q = code.field.q
        assert got.sum() == q**code.k
        for key, count in enumerate(got.tolist()):
            digits = []
            rem = key
            for _ in range(t):
                digits.append(rem % q)
                rem //= q
            digits.reverse()  # keys are big-endian
            assert count == oracle.get(tuple(digits), 0)


@pytest.mark.skipif(_core is None, reason="compiled kernels unavailable")
def test_backends_agree():
    rng = random.Random(3)
    for code in cases(seed=3, count=10):
        gen = np.ascontiguousarray(code.generator)
        q = code.field.q
        down = code.poset.down_bits_array
        assert np.array_equal(
            _fallback.support_bits(gen, q, down), _core.support_bits(gen, q, down)
        )
        assert _fallback.min_support_weight(gen, q, down) == _core.min_support_weight(
            gen, q, down
        )
        t = rng.randint(1, code.n)
        cols = np.ascontiguousarray(gen[:, :t])
        assert np.array_equal(
            _fallback.pattern_counts(cols, q), _core.pattern_counts(cols, q)
        )
        mat = np.array(
            [[rng.randrange(7) for _ in range(6)] for _ in range(5)], dtype=np.int64
        )
        assert _fallback.gf_rank(mat, 7) == _core.gf_rank(mat, 7)


@pytest.mark.parametrize("name,impl", IMPLS)
def test_kernel_input_validation(name, impl):
    gen = np.zeros((0, 3), dtype=np.int64)
    down = np.array([1, 2, 4], dtype=np.uint64)
    with pytest.raises(ValueError):
        impl.min_support_weight(gen, 2, down)
    # k=0 scans still define a census (the zero codeword)
    assert impl.support_bits(gen, 2, down).tolist() == [0]
    with pytest.raises(ValueError):
        impl.support_bits(np.zeros((1, 2), dtype=np.int64), 2, down)
