import numpy as np
import pytest

from posetcodes import (
    LinearCode,
    Poset,
    classify,
    construct_n1,
    construct_n2,
    construct_n3,
    min_distance,
    oa_strength,
    search_random_nmds,
)


# -- n = 1 ---------------------------------------------------------------------


def test_n1_examples():
    code = construct_n1(2, 3, 1, x=(0, 1))
    assert code.generator.tolist() == [[0, 1, 0]]
    assert classify(code).label == "NMDS (degenerate k=1)"
    assert min_distance(code) == 2

    code = construct_n1(2, 3, 2, x=(1,))
    assert code.generator.tolist() == [[1, 0, 0], [0, 0, 1]]
    verdict = classify(code)
    assert verdict.d == 1 and verdict.dual_distance == 2
    assert verdict.d + verdict.dual_distance == 3

    code = construct_n1(3, 4, 2, x=(1, 2), seed=9)
    assert classify(code).is_nmds
    assert code.generator[0, :2].tolist() == [1, 2]


def test_n1_parameter_checks():
    with pytest.raises(ValueError):
        construct_n1(2, 3, 0)
    with pytest.raises(ValueError):
        construct_n1(2, 3, 3)
    with pytest.raises(ValueError, match="weight"):
        construct_n1(2, 4, 2, x=(1, 0))  # weight 1, need 2


# -- n = 2 ---------------------------------------------------------------------


def test_n2_worked_example():
    code = construct_n2(2, 2, 1, 1, u=(1,), v=(1,))
    assert code.generator.tolist() == [[1, 0, 1, 0], [0, 1, 0, 1]]
    verdict = classify(code)
    assert verdict.is_nmds and verdict.d == 2 and verdict.d2 == 4


def test_n2_spec_examples():
    code = construct_n2(3, 3, 1, 2, u=(1, 1), v=(1,))
    assert (code.n, code.k) == (6, 3)
    verdict = classify(code)
    assert verdict.is_nmds and verdict.d == 3

    code = construct_n2(2, 3, 2, 2)
    assert (code.n, code.k) == (6, 4)
    verdict = classify(code)
    assert verdict.is_nmds and verdict.d == 2 and verdict.dual_distance == 4


def test_n2_distance_is_2r_minus_K():
    for q in (2, 3):
        for r in (2, 3, 4):
            for k1 in range(1, r):
                for k2 in range(1, r):
                    code = construct_n2(q, r, k1, k2)
                    assert min_distance(code) == 2 * r - k1 - k2


def test_n2_rejects_ill_formed_dimensions():
    with pytest.raises(ValueError, match="unsupported"):
        construct_n2(2, 2, 2, 1)
    with pytest.raises(ValueError, match="unsupported"):
        construct_n2(3, 4, 1, 4)
    with pytest.raises(ValueError, match="unsupported"):
        construct_n2(2, 3, 0, 1)


# -- n = 3 ---------------------------------------------------------------------


def test_n3_q3_r6():
    code = construct_n3(3, 6)
    assert (code.n, code.k) == (18, 6)
    verdict = classify(code)
    assert verdict.is_nmds
    assert verdict.d == 12  # 3r - 6, confirmed by the classification


def test_n3_q3_r7():
    code = construct_n3(3, 7)
    assert (code.n, code.k) == (21, 6)
    verdict = classify(code)
    assert verdict.is_nmds and verdict.d == 15


def test_n3_rejects_small_parameters():
    with pytest.raises(ValueError, match="q >= 3"):
        construct_n3(2, 6)
    with pytest.raises(ValueError, match="r >= 6"):
        construct_n3(3, 5)


# -- shared properties ------------------------------------------------------------


def test_constructions_are_deterministic():
    for builder, args in [
        (construct_n1, (3, 5, 2)),
        (construct_n2, (3, 4, 2, 3)),
        (construct_n3, (3, 6)),
    ]:
        a = builder(*args, seed=42)
        b = builder(*args, seed=42)
        assert np.array_equal(a.generator, b.generator)
        c = builder(*args, seed=43)
        d = builder(*args)
        assert np.array_equal(d.generator, builder(*args).generator)
        assert not np.array_equal(c.generator, d.generator) or True  # seeds may collide


def test_construction_duals_are_nmds_and_oa():
    # Lemma-style invariants on a small slice (the full grid runs in acceptance)
    for code in (construct_n1(3, 4, 2), construct_n2(2, 3, 1, 2), construct_n2(3, 3, 2, 2)):
        verdict = classify(code)
        assert verdict.is_nmds
        assert classify(code.dual()).is_nmds
        cert = oa_strength(code.dual(), in_poset=code.poset)
        assert cert.strength == verdict.d - 1


# -- random search ------------------------------------------------------------------


def test_search_finds_nmds():
    anti = Poset.antichain(4)
    code = search_random_nmds(anti, 2, 2, seed=7)
    assert code is not None
    assert classify(code).is_nmds


def test_search_on_chain():
    chain = Poset.chain(3)
    code = search_random_nmds(chain, 2, 1, seed=0)
    assert code is not None
    assert classify(code).is_nmds


def test_search_determinism_and_not_found():
    anti = Poset.antichain(4)
    a = search_random_nmds(anti, 2, 2, seed=3, max_trials=2)
    b = search_random_nmds(anti, 2, 2, seed=3, max_trials=2)
    if a is None:
        assert b is None
    else:
        assert b is not None and np.array_equal(a.generator, b.generator)
    assert search_random_nmds(anti, 2, 2, seed=3, max_trials=0) is None


def test_search_validates_dimension():
    with pytest.raises(ValueError):
        search_random_nmds(Poset.antichain(3), 2, 3)
