from math import factorial

import pytest
from hypothesis import given, strategies as st

from repstab.partitions import (
    Partition, conjugate, count_syt, derangement_types, frobenius_notation, pad_first_row,
    partitions_of, rank_of, z_of,
)

partitions = st.integers(0, 12).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def test_conjugate_examples():
    assert conjugate([4, 2, 1]) == Partition([3, 2, 1, 1])
    assert conjugate([]) == Partition()
    assert conjugate([2, 2]) == Partition([2, 2])


def test_rank_examples():
    assert rank_of([2, 2]) == 2
    assert rank_of([5]) == 4
    with pytest.raises(ValueError):
        rank_of([2, 2, 3])


def test_z_examples():
    assert z_of([1, 1, 1]) == 6
    assert z_of([2, 1]) == 2
    assert z_of([3]) == 3


def test_filtered_enumeration():
    assert partitions_of(4, min_part=2, exact_rank=2) == [Partition([2, 2])]
    assert partitions_of(6, min_part=2, exact_rank=4) == [Partition([4, 2]), Partition([3, 3])]
    assert partitions_of(0) == [Partition()]


def test_pad_first_row():
    assert pad_first_row([4, 2, 1], 1) == Partition([5, 2, 1])
    assert pad_first_row([4, 2, 1], 2) == Partition([6, 2, 1])
    assert pad_first_row([], 3) == Partition([3])


def test_literal_round_trip():
    lam = Partition.parse("4,2,1")
    assert lam == (4, 2, 1) and lam.literal() == "4,2,1"
    assert Partition.parse("") == Partition()


def test_reverse_lex_order():
    assert partitions_of(4) == [Partition(x) for x in ([4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1])]


@pytest.mark.parametrize("n", range(13))
def test_class_sizes_sum_to_factorial(n):
    assert sum(factorial(n) // lam.z() for lam in partitions_of(n)) == factorial(n)


@pytest.mark.parametrize("n", range(13))
def test_conjugation_permutes_partitions(n):
    ps = partitions_of(n)
    assert sorted(lam.conjugate() for lam in ps) == sorted(ps)


@given(partitions)
def test_conjugate_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().size == lam.size


@given(partitions)
def test_rank_two_ways(lam):
    assert lam.rank() == sum((j - 1) * m for j, m in lam.multiplicities().items())
    assert lam.rank() >= 0


@given(partitions, st.integers(0, 5), st.integers(0, 5))
def test_pad_composes(lam, a, b):
    assert lam.pad(a).pad(b) == lam.pad(a + b)


@pytest.mark.parametrize("i", range(0, 6))
def test_derangement_types_window(i):
    for m in range(0, 13):
        types = derangement_types(i, m)
        if types:
            assert i + 1 <= m <= 2 * i or (i == m == 0)
        assert all(min(lam, default=2) >= 2 and lam.rank() == i for lam in types)


def test_hook_length_counts():
    assert [count_syt(lam) for lam in partitions_of(4)] == [1, 3, 2, 3, 1]
    for n in range(1, 9):
        assert sum(count_syt(lam) ** 2 for lam in partitions_of(n)) == factorial(n)


def test_frobenius_notation():
    assert frobenius_notation([3, 1]) == ((2,), (1,))
    assert frobenius_notation([4, 2, 1]) == ((3, 0), (2, 0))
    assert frobenius_notation([]) == ((), ())
