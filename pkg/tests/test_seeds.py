from collections import defaultdict

import pytest

from qpartition.partitions import KrVariant, check_kr, iter_partitions
from qpartition.seeds import (
    expand_seed,
    product_A,
    product_B,
    seed_decomposition,
    staircase,
    to_seed,
)

D = KrVariant.D
DP = KrVariant.DPRIME
DPP = KrVariant.DPRIMEPRIME


def test_to_seed_worked_examples():
    assert to_seed((4, 4, 8, 11, 13, 19, 21, 23, 25), D) == (
        3, 5, 8, 11, 13, 19, 21, 23, 25,
    )
    assert to_seed((2, 2, 6, 12, 12, 16, 18, 24, 24), DP) == (
        1, 3, 6, 11, 13, 16, 18, 23, 25,
    )


def test_to_seed_fixed_point():
    p = (3, 5, 8, 11, 13)
    seed = to_seed(p, D)
    assert seed == p
    assert to_seed(seed, D) == seed


def test_to_seed_preserves_weight_and_length():
    p = (4, 4, 8, 12, 12, 20, 20, 24, 24)
    seed = to_seed(p, D)
    assert sum(seed) == sum(p) and len(seed) == len(p)


def test_to_seed_rejects_outside_class():
    with pytest.raises(ValueError):
        to_seed((2, 2), D)


def test_seed_decomposition_groups():
    dec = seed_decomposition((3, 5, 8, 11, 13, 19, 21, 23, 25), D)
    assert dec.base == staircase(9)
    assert dec.mu == (2, 2, 3, 4, 4, 8, 8, 8, 8)
    assert [(g.start, g.stop, g.value) for g in dec.groups] == [
        (0, 2, 2),
        (3, 5, 4),
        (5, 9, 8),
    ]
    assert dec.forced_prefix == 0


def test_seed_decomposition_forced_prefix():
    dec = seed_decomposition((1, 3, 6, 11, 13, 16, 18, 23, 25), DP)
    assert dec.mu == (0, 0, 1, 4, 4, 5, 5, 8, 8)
    assert dec.forced_prefix == 2
    assert [(g.start, g.stop, g.value) for g in dec.groups] == [(3, 5, 4), (7, 9, 8)]


def test_seed_decomposition_rejects_odd_zero_run():
    with pytest.raises(ValueError):
        seed_decomposition((1, 3, 5, 10), DP)  # three leading zeros in mu


def test_expand_seed_worked_lists():
    eight = expand_seed((3, 5, 8, 11, 13, 19, 21, 23, 25), D)
    assert len(eight) == 8
    assert (4, 4, 8, 12, 12, 19, 21, 23, 25) in eight
    assert (4, 4, 8, 12, 12, 20, 20, 24, 24) in eight
    assert all(sum(p) == 128 and len(p) == 9 for p in eight)

    four = expand_seed((1, 3, 6, 11, 13, 16, 18, 23, 25), DP)
    assert four == [
        (2, 2, 6, 11, 13, 16, 18, 23, 25),
        (2, 2, 6, 11, 13, 16, 18, 24, 24),
        (2, 2, 6, 12, 12, 16, 18, 23, 25),
        (2, 2, 6, 12, 12, 16, 18, 24, 24),
    ]


def test_expand_seed_no_groups_is_singleton():
    assert expand_seed((4, 6), D) == [(4, 6)]
    # the whole leading zero run is rewritten pairwise, not just 1+3
    assert expand_seed((1, 3, 5, 7), DP) == [(2, 2, 6, 6)]


def test_odd_multiplicity_even_value_gives_no_toggle():
    # mu = 2,2,2: an odd-length run is not a toggle group
    assert expand_seed((3, 5, 7, 10), D) == [(3, 5, 7, 10)]


@pytest.mark.parametrize("variant", [D, DP, DPP])
def test_seed_classes_partition_the_whole_class(variant):
    # every class partition of n <= 30 lands in exactly one seed class, and
    # expanding the seed reproduces the class exactly
    top = 30
    for n in range(top + 1):
        by_seed = defaultdict(list)
        for parts in iter_partitions(n):
            if check_kr(parts, variant):
                by_seed[to_seed(parts, variant)].append(parts)
        for seed, members in by_seed.items():
            assert expand_seed(seed, variant) == sorted(members), (variant, seed)


def test_odd_streaks_cannot_toggle():
    # the streak 3,5,7 in the seed 3+5+7+10 has odd length; rewriting either
    # adjacent odd pair back into repeated evens leaves the class, so the
    # streak carries no toggle and the class is a singleton
    assert check_kr((3, 5, 7, 10), D)
    assert not check_kr((4, 4, 7, 10), D)
    assert not check_kr((3, 6, 6, 10), D)
    assert expand_seed((3, 5, 7, 10), D) == [(3, 5, 7, 10)]


def test_expansions_share_their_seed():
    # every member of an expansion maps back to the seed it came from
    for n in range(26):
        for parts in iter_partitions(n):
            if not check_kr(parts, D):
                continue
            seed = to_seed(parts, D)
            for member in expand_seed(seed, D):
                assert to_seed(member, D) == seed


def _weighted_zero_count(a, n, m, even_zeros):
    """Direct enumeration oracle for the marker products."""
    total = 0
    for parts in iter_partitions(n, max_len=m):
        zeros = m - len(parts)
        if even_zeros and zeros % 2:
            continue
        e = 0
        values = set(parts)
        for v in values:
            if v % 2 == 0 and parts.count(v) % 2 == 0:
                e += 1
        total += a**e
    return total


@pytest.mark.parametrize("a", [0, 1, 2])
def test_product_A_matches_weighted_enumeration(a):
    max_q, max_t = 20, 8
    s = product_A(a, max_q, max_t)
    for n in range(max_q + 1):
        for m in range(max_t + 1):
            assert s.coeff(n, m) == _weighted_zero_count(a, n, m, False), (a, n, m)


@pytest.mark.parametrize("a", [0, 2])
def test_product_B_matches_weighted_enumeration(a):
    max_q, max_t = 20, 8
    s = product_B(a, max_q, max_t)
    for n in range(max_q + 1):
        for m in range(max_t + 1):
            assert s.coeff(n, m) == _weighted_zero_count(a, n, m, True), (a, n, m)


def test_product_B_zero_multiplicity_is_even():
    s = product_B(2, 10, 4)
    assert s.coeff(0, 2) == 1  # two zeros
    assert s.coeff(0, 1) == 0  # a single zero is barred
    assert s.coeff(0, 4) == 1


def test_product_A_at_one_counts_padded_partitions():
    s = product_A(1, 10, 6)
    # coefficient of t^m q^n counts partitions of n into at most m parts
    assert s.coeff(4, 4) == 5
    assert s.coeff(4, 2) == 3  # 4, 1+3, 2+2
