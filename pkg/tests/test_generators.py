from math import comb

import numpy as np
import pytest

from sumprod.generators import (Campaign, SplitMix64, augment_closure, campaign_blocks, campaign_sets,
                                divisor_subset_blocks, divisor_subsets, divisors,
                                enumerate_diameter_family, enumerate_interval_subsets,
                                friable_prefix, friable_prefixes_upto, interval_subset_blocks,
                                primes_upto, random_divisor_subset, random_interval_subset,
                                shift_closure)


def test_interval_counts():
    assert sum(1 for _ in enumerate_interval_subsets(4, 4)) == 15
    assert list(enumerate_interval_subsets(1, 3)) == [(1,)]
    # exact binomial count and no duplicates for N <= 20
    for N in (5, 12, 20):
        got = list(enumerate_interval_subsets(N, 4))
        assert len(got) == len(set(got)) == sum(comb(N, k) for k in range(1, 5))


def test_interval_count_36_6():
    expected = sum(comb(36, k) for k in range(1, 7))
    assert expected == 36 + 630 + 7140 + 58905 + 376992 + 1947792 == 2_391_495
    assert sum(len(b) for k in range(1, 7) for b in interval_subset_blocks(36, k)) == expected


def test_interval_rejects_large_N():
    with pytest.raises(ValueError):
        list(enumerate_interval_subsets(65, 2))
    with pytest.raises(ValueError):
        next(interval_subset_blocks(0, 1))


def test_blocks_ordered_by_maximum_then_lexicographically():
    rows = np.vstack(list(interval_subset_blocks(9, 3, chunk=7))).tolist()
    keys = [(r[-1], r) for r in rows]
    assert keys == sorted(keys)
    assert len(rows) == comb(9, 3)


def test_diameter_family():
    assert sorted(enumerate_diameter_family(2, 1, 1)) == [(1, 2, 3), (1, 3)]
    assert sum(1 for _ in enumerate_diameter_family(3, 1, 1)) == 4
    assert sorted(enumerate_diameter_family(1, 2, 2)) == [(1, 2), (1, 3), (2, 3), (2, 4)]
    many = list(enumerate_diameter_family(5, 3, 4))
    assert len(many) == len(set(many)) == 2**4 * 3 * 4


def test_divisor_subsets():
    assert divisors(12) == (1, 2, 3, 4, 6, 12)
    assert sum(1 for _ in divisor_subsets(6)) == 15
    assert sum(1 for _ in divisor_subsets(12)) == 63
    assert list(divisor_subsets(1)) == [(1,)]
    blocks = np.vstack(list(divisor_subset_blocks(12, [3])))
    assert len(blocks) == 20 and set(blocks.ravel()) <= set(divisors(12))


def test_divisor_cutoff_matches_the_six_skipped_values():
    big = [N for N in range(1, 2049) if len(divisors(N)) > 32]
    assert big == [1260, 1440, 1680, 1800, 1980, 2016]
    with pytest.raises(ValueError):
        next(divisor_subsets(1260))


def test_random_subsets():
    assert random_interval_subset(5, 5, 99) == (1, 2, 3, 4, 5)
    a = random_interval_subset(100, 10, 1)
    assert a == random_interval_subset(100, 10, 1)
    assert len(a) == 10 and set(a) <= set(range(1, 101)) and list(a) == sorted(a)
    assert random_divisor_subset(4, 3, 7) == (1, 2, 4)
    assert random_divisor_subset(36, 9, 3) == divisors(36)
    b = random_divisor_subset(60, 5, 11)
    assert b == random_divisor_subset(60, 5, 11) and set(b) <= set(divisors(60))
    with pytest.raises(ValueError):
        random_interval_subset(3, 4, 0)
    with pytest.raises(ValueError):
        random_divisor_subset(4, 4, 0)


def test_splitmix_reference_values():
    # first outputs for seed 0, from the published reference implementation
    rng = SplitMix64(0)
    assert [rng.next() for _ in range(3)] == [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4,
                                              0x06C45D188009454F]


def test_random_draws_are_roughly_uniform():
    rng = SplitMix64(12345)
    counts = [0] * 6
    for _ in range(60_000):
        counts[rng.below(6)] += 1
    assert all(9_000 < c < 11_000 for c in counts)


def _smooth_by_trial_division(v, y):
    for p in primes_upto(y):
        while v % p == 0:
            v //= p
    return v == 1


def test_friable_examples():
    assert friable_prefix(8, 3).elements == (1, 2, 3, 4, 6, 8, 9, 12)
    assert friable_prefix(4, 3).elements == (1, 2, 3, 4)
    assert friable_prefix(1, 2).elements == (1,)
    with pytest.raises(ValueError):
        friable_prefix(3, 4)


@pytest.mark.parametrize("y", [2, 3, 5, 7, 11, 13, 17, 19, 23, 29])
@pytest.mark.parametrize("n", [1, 7, 20, 31, 150])
def test_friable_grid(n, y):
    if y == 2 and n > 31:
        n = 31  # Psi_32^2 ends at 2^31, the element cap, and the chain check needs n + 1
    elems = friable_prefix(n, y).elements
    assert all(_smooth_by_trial_division(v, y) for v in elems)
    if elems[-1] <= 20_000:
        brute = [v for v in range(1, elems[-1] + 1) if _smooth_by_trial_division(v, y)]
        assert list(elems) == brute
    assert friable_prefix(n + 1, y).elements[:n] == elems


def test_friable_overflow():
    with pytest.raises(OverflowError):
        friable_prefix(40, 2)


def test_friable_prefixes_upto():
    chain = [fs.elements for fs in friable_prefixes_upto(3, 12)]
    assert chain[-1] == (1, 2, 3, 4, 6, 8, 9, 12)
    assert all(a == b[:-1] for a, b in zip(chain, chain[1:]))


def test_closures():
    assert list(shift_closure((1, 2), 2)) == [(2, 3), (3, 4)]
    assert list(shift_closure((1,), 1)) == [(2,)]
    assert sum(1 for _ in shift_closure((1, 2, 4), 3)) == 3
    assert list(augment_closure((1, 2), 3)) == [(1, 2, 3)]
    assert list(augment_closure((1,), 2)) == [(1, 2)]
    assert list(augment_closure((2, 3), 4)) == [(1, 2, 3), (2, 3, 4)]


def test_campaign_text_round_trip():
    c = Campaign("RandomInterval", N=30, nMin=3, nMax=5, seed=7, sampleCount=4)
    assert Campaign.from_text(c.to_text()) == c
    with pytest.raises(ValueError):
        Campaign("RandomDivisors", N=30)
    with pytest.raises(ValueError):
        Campaign("Nope")
    with pytest.raises(ValueError):
        Campaign("ExhaustiveInterval", N=5, nMin=0)


def test_campaign_blocks_match_sets():
    for c in (Campaign("ExhaustiveInterval", N=9, nMax=4), Campaign("DivisorSubsets", N=30, nMin=2, nMax=3),
              Campaign("FriablePrefix", N=100, y=5, nMin=2, nMax=20),
              Campaign("RandomInterval", N=20, nMin=2, nMax=4, seed=5, sampleCount=3),
              Campaign("DiameterFamily", N=4, dilMax=2, shiftMax=2)):
        via_sets = sorted(campaign_sets(c))
        via_blocks = sorted(tuple(r) for b in campaign_blocks(c) for r in b.tolist())
        assert via_sets == via_blocks


def test_closure_campaigns_need_a_base():
    c = Campaign("Augment", augmentMax=4, nMax=3)
    assert sorted(campaign_sets(c, [(1, 2)])) == [(1, 2, 3), (1, 2, 4)]
    assert list(campaign_sets(Campaign("Shift", shiftMax=2), [(1, 3)])) == [(2, 4), (3, 5)]
