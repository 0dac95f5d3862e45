import itertools
from fractions import Fraction
from math import lcm

import pytest

from sumprod.prototypes import (Prototype, addition_type, count_prototypes, count_types,
                                enumerate_prototypes, is_realizable, iter_prototypes,
                                multiplication_type, pair_list)


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 3), (4, 39), (5, 2905)])
def test_counts(n, count):
    assert enumerate_prototypes(n) == count
    assert count_prototypes(n) == count


def test_dp_count_n6():
    assert count_prototypes(6) == 1_538_369


def test_enumeration_is_duplicate_free_and_valid():
    seen = []
    enumerate_prototypes(4, seen.append)
    assert len(seen) == len(set(seen)) == 39
    for ranks in seen:
        Prototype(4, ranks)  # validates


def test_order_guard():
    with pytest.raises(ValueError):
        enumerate_prototypes(8)
    with pytest.raises(ValueError):
        count_prototypes(0)


def test_addition_type_examples():
    p = addition_type((1, 2, 3))
    assert p.rank_of(1, 3) == p.rank_of(2, 2)
    for A in ((1, 2, 4), (1, 2, 5)):
        p = addition_type(A)
        assert p.rank_of(2, 2) < p.rank_of(1, 3)


def test_multiplication_type_examples():
    p = multiplication_type((1, 2, 4))
    assert p.rank_of(1, 3) == p.rank_of(2, 2)
    assert len(multiplication_type((2, 3, 5)).classes()) == 6
    p = multiplication_type((1, 2, 3))
    assert [p.rank_of(*ij) for ij in pair_list(3)] == [0, 1, 2, 3, 4, 5]


def test_text_form():
    p = addition_type((1, 2, 3))
    assert p.to_text() == "0 1 2;2 3;4"
    assert Prototype.from_text(p.to_text()) == p
    with pytest.raises(ValueError):
        Prototype.from_text("0;1 2;1 3 4")
    with pytest.raises(ValueError):
        Prototype(2, (0, 0, 1))


def test_realizable_counts_small():
    assert [count_types(n) for n in range(1, 5)] == [1, 1, 3, 25]


def test_ap_is_realizable():
    p = addition_type((0, 1, 2))
    ok, w = is_realizable(p)
    assert ok and addition_type(w) == p


def _check_witness(p, w):
    assert w[0] == 0
    sums = [w[i - 1] + w[j - 1] for i, j in pair_list(p.n)]
    classes = p.classes()
    index = {ij: k for k, ij in enumerate(pair_list(p.n))}
    for cls in classes:
        assert len({sums[index[ij]] for ij in cls}) == 1
    for lower, upper in zip(classes, classes[1:]):
        assert sums[index[upper[0]]] - sums[index[lower[0]]] >= 1


def test_round_trip_over_subsets_of_12():
    for k in range(1, 6):
        for A in itertools.combinations(range(1, 13), k):
            p = addition_type(A)
            ok, w = is_realizable(p)
            assert ok
            _check_witness(p, w)
            assert is_realizable(multiplication_type(A))[0]


def test_addition_and_multiplication_types_coincide_n_le_4():
    for n in range(1, 5):
        realizable = {}
        for p in iter_prototypes(n):
            ok, w = is_realizable(p)
            if ok:
                realizable[p] = w
        # every type of addition table is a type of multiplication table: 2^(D a)
        for p, w in realizable.items():
            D = lcm(*(Fraction(a).denominator for a in w))
            B = [2 ** int(a * D) for a in w]
            assert multiplication_type(B) == p
        # and every multiplication type met on small integer sets is realizable
        for A in itertools.combinations(range(1, 25), n):
            assert multiplication_type(A) in realizable
