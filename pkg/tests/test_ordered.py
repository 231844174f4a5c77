from math import comb

import pytest

from posetcodes import (
    OrderedSpace,
    Poset,
    Shape,
    chain_product_poset,
    count_N_s,
    detect_chain_product,
    enumerate_shapes,
    maximal_elements,
    shape_of,
)


def test_chain_product_examples():
    assert chain_product_poset(1, 3) == Poset.chain(3)
    assert chain_product_poset(4, 1) == Poset.antichain(4)
    assert sum(1 for _ in chain_product_poset(2, 2).ideals(size=2)) == 3


def test_chain_product_caps():
    with pytest.raises(ValueError):
        chain_product_poset(0, 3)
    with pytest.raises(ValueError):
        chain_product_poset(13, 5)


def test_detect_chain_product():
    assert detect_chain_product(chain_product_poset(3, 2)) == (3, 2)
    assert detect_chain_product(Poset.antichain(5)) == (5, 1)
    assert detect_chain_product(Poset.chain(4)) == (1, 4)
    vee = Poset.from_cover_relations(3, [(1, 2), (1, 3)])
    assert detect_chain_product(vee) is None


def test_shape_of_examples():
    space = OrderedSpace(2, 2, 2)
    poset = space.poset()
    assert shape_of(poset.ideal([1, 2]), space).e == (0, 1)
    assert shape_of(poset.ideal([1, 2]), space).e0 == 1
    assert shape_of(poset.ideal([1, 3]), space).e == (2, 0)
    # shape of the l.a. support of x = (0,1|1,0)
    support = poset.closure([2, 3])
    assert shape_of(support, space).e == (1, 1)


def test_shape_invariants_exhaustive():
    for n, r in [(1, 3), (2, 2), (3, 2), (2, 3), (4, 3), (6, 2)]:
        space = OrderedSpace(n, r, 2)
        poset = space.poset()
        shape_census: dict[tuple, int] = {}
        for ideal in poset.ideals():
            shape = shape_of(ideal, space)
            assert shape.weighted_size == ideal.size
            omega, _ = maximal_elements(ideal)
            assert len(omega) == shape.size
            shape_census[shape.e] = shape_census.get(shape.e, 0) + 1
        for e, count in shape_census.items():
            assert Shape(e, n).multinomial() == count


def test_enumerate_shapes_examples():
    space = OrderedSpace(2, 2, 2)
    assert [s.e for s in enumerate_shapes(space, 2)] == [(0, 1), (2, 0)]
    assert [s.e for s in enumerate_shapes(space, 3)] == [(1, 1)]
    zero = enumerate_shapes(space, 0)
    assert [s.e for s in zero] == [(0, 0)] and zero[0].multinomial() == 1


def test_enumerate_shapes_respects_block_bound():
    space = OrderedSpace(2, 3, 2)
    assert all(s.size <= 2 for s in enumerate_shapes(space, 3))
    assert (3, 0, 0) not in [s.e for s in enumerate_shapes(space, 3)]


def test_shape_validation():
    with pytest.raises(ValueError):
        Shape((3, 0), 2)
    with pytest.raises(ValueError):
        Shape((-1, 1), 2)


def test_count_examples():
    space = OrderedSpace(2, 2, 2)
    assert count_N_s(Shape((0, 1), 2), 3, space) == 1
    assert count_N_s(Shape((2, 0), 2), 3, space) == 2
    assert count_N_s(Shape((2, 0), 2), 4, space) == 1


def test_count_hamming_reduction():
    # r=1: N_s(e) = C(n-d, s-d)
    for n in range(1, 9):
        space = OrderedSpace(n, 1, 2)
        for d in range(n + 1):
            shape = Shape((d,), n)
            for s in range(d, n + 1):
                assert count_N_s(shape, s, space) == comb(n - d, s - d)


def brute_between_count(poset, j_ideal, s):
    """|{I of size s : reduced(I) <= J <= I}| by direct enumeration."""
    count = 0
    for cand in poset.ideals(size=s):
        _, tilde = maximal_elements(cand)
        if (
            cand.bits & j_ideal.bits == j_ideal.bits
            and tilde.bits & j_ideal.bits == tilde.bits
        ):
            count += 1
    return count


def test_count_against_ideal_enumeration():
    for n in (1, 2, 3):
        for r in (1, 2, 3):
            space = OrderedSpace(n, r, 2)
            poset = space.poset()
            for j_ideal in poset.ideals():
                shape = shape_of(j_ideal, space)
                for s in range(j_ideal.size, n * r + 1):
                    assert count_N_s(shape, s, space) == brute_between_count(
                        poset, j_ideal, s
                    ), (n, r, j_ideal.labels, s)


def test_space_validation():
    with pytest.raises(ValueError):
        OrderedSpace(2, 2, 6)  # q not prime
    with pytest.raises(ValueError):
        OrderedSpace(0, 2, 2)
    space = OrderedSpace(2, 3, 3)
    assert space.total == 6
    assert space.label(2, 1) == 4
    with pytest.raises(ValueError):
        space.label(3, 1)
