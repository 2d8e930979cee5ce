from math import factorial

import pytest
from hypothesis import given, strategies as st

from repstab import liewhitney as lw
from repstab import tables
from repstab.partitions import Partition, count_syt, partitions_of
from repstab.symfunc import SymFn, schur
from repstab.tableaux import (
    StandardTableau, all_syt, ascents, enumerate_syt, is_desarrangement, is_whitney_generating, maj,
    tableau_sum, tableaux_in_class,
)

T = StandardTableau.parse
tableaux = st.integers(0, 7).flatmap(lambda n: st.sampled_from(all_syt(n)))


def test_enumeration_counts():
    assert len(enumerate_syt([2, 1])) == 2
    assert len(enumerate_syt([1, 1, 1])) == 1
    assert sum(len(enumerate_syt(lam)) ** 2 for lam in partitions_of(4)) == 24


@pytest.mark.parametrize("n", range(0, 9))
def test_enumeration_matches_hooks(n):
    for lam in partitions_of(n):
        assert len(enumerate_syt(lam)) == count_syt(lam)
    assert len(all_syt(n)) == sum(count_syt(lam) for lam in partitions_of(n))
    assert sum(count_syt(lam) ** 2 for lam in partitions_of(n)) == factorial(n)


def test_text_form():
    q = T("1 2 4 / 3")
    assert q.rows == ((1, 2, 4), (3,)) and str(q) == "1 2 4 / 3"
    assert q.shape == Partition([3, 1])
    with pytest.raises(ValueError):
        T("2 1")
    with pytest.raises(ValueError):
        T("1 2 / 3 2")


def test_ascent_examples():
    assert ascents(T("1 3 6 8 / 2 4 7 / 5")) == {2, 5, 7, 8}
    assert ascents(T("1 2 3 4")) == {1, 2, 3, 4}
    assert ascents(T("1 / 2 / 3 / 4")) == {4}


def test_desarrangement_examples():
    assert is_desarrangement(T("1 / 2"))
    assert not is_desarrangement(T("1 2"))


def test_whitney_examples():
    assert not is_whitney_generating(T("1 2 / 3 4"))
    assert is_whitney_generating(T("1 2 3 / 4 5"))


def test_maj_examples():
    assert maj(T("1 / 2")) == 1
    assert maj(T("1 2 3 4 5")) == 0
    assert maj(T("1 3 / 2")) == 1


def test_sum_examples():
    assert tableau_sum(4, "whitney") == schur([2, 1, 1]) + schur([3, 1]) * 2
    assert tableau_sum(4, "desarrangement") == (
        schur([2, 2]) + schur([1, 1, 1, 1]) + schur([3, 1]) + schur([2, 1, 1]))
    assert tableau_sum(0, "whitney") == SymFn.one() == tableau_sum(0, "desarrangement")


@pytest.mark.parametrize("n", range(0, 10))
def test_tableau_models(n):
    assert tableau_sum(n, "desarrangement") == lw.kappa(n)
    assert tableau_sum(n, "whitney") == lw.nu(n)


@pytest.mark.parametrize("n", range(0, 6))
def test_comparison_table(n):
    des = sorted(q.rows for q in tableaux_in_class(n, "desarrangement"))
    whi = sorted(q.rows for q in tableaux_in_class(n, "whitney"))
    assert des == sorted(tables.DESARRANGEMENT[n])
    assert whi == sorted(tables.WHITNEY_GENERATING[n])


def test_size_five_lists_have_nine():
    assert len(tables.DESARRANGEMENT[5]) == len(tables.WHITNEY_GENERATING[5]) == 9


@given(tableaux)
def test_n_is_always_an_ascent(q):
    if q.size:
        assert q.size in ascents(q)
        assert max(ascents(q)) == q.size


@given(tableaux)
def test_restrictions_are_tableaux(q):
    for k in range(q.size + 1):
        r = q.restrict(k)
        assert r.size == k and r.shape.contains(Partition()) and q.shape.contains(r.shape)


@given(tableaux)
def test_maj_is_descent_sum(q):
    row = q.row_of()
    assert maj(q) == sum(i for i in range(1, q.size) if i not in ascents(q))
    assert maj(q) == sum(i for i in range(1, q.size) if row[i] < row[i + 1])


@given(tableaux)
def test_text_round_trip(q):
    assert T(str(q)) == q
