from math import factorial

import pytest

from repstab import liewhitney as lw
from repstab import tables
from repstab.characters import dimension
from repstab.partitions import Partition, partitions_of
from repstab.symfunc import SymFn, bounded_by, d_dp1, e, h, mul_p1, omega, p, schur
from repstab.verify import derangement_numbers, derangements_by_cycles


def S(*terms):
    return SymFn.from_basis("s", {Partition(lam): c for lam, c in terms})


def test_ell_examples():
    assert lw.ell(1) == p([1])
    assert lw.ell(2) == (p([1, 1]) - p([2])) / 2 == schur([1, 1]) == e(2)
    assert lw.ell(6).schur() == {Partition(k): v for k, v in tables.LIE_6.items()}
    assert lw.ell(6).schur()[Partition([3, 2, 1])] == 3


def test_pi_examples():
    assert lw.pi(2) == h(2)
    assert lw.pi(3) == schur([2, 1])
    assert lw.pi(1) == schur([1])


@pytest.mark.parametrize("n", range(1, 9))
def test_ell_dimension(n):
    assert dimension(lw.ell(n)) == factorial(n - 1)
    assert lw.pi(n) == omega(lw.ell(n))


def test_lambda_examples():
    assert lw.lie_lambda([2, 2]) == schur([2, 2]) + schur([1, 1, 1, 1])
    assert lw.w_lambda([2, 2]) == schur([3, 1])
    assert lw.lie_lambda([1, 1, 1]) == h(3)


@pytest.mark.parametrize("n", range(1, 8))
def test_lambda_dimensions(n):
    for lam in partitions_of(n):
        assert dimension(lw.lie_lambda(lam)) == lam.class_size()
        assert dimension(lw.w_lambda(lam)) == lam.class_size()
        assert lw.lie_lambda(lam).is_schur_positive() and lw.w_lambda(lam).is_schur_positive()


def test_hat_entry_examples():
    assert lw.hat_entry("W", 3, 4) == schur([3, 1]) + schur([2, 1, 1])
    assert lw.hat_entry("Lie", 4, 5) == S(([4, 1], 1), ([3, 2], 1), ([3, 1, 1], 1), ([2, 2, 1], 1), ([2, 1, 1, 1], 1))
    assert lw.hat_entry("W", 2, 6) == SymFn.zero()


def test_table_multiplicities():
    assert lw.hat_entry("Lie", 4, 6).schur()[Partition([3, 2, 1])] == 3
    assert lw.hat_entry("W", 4, 6).schur()[Partition([4, 2])] == 2


@pytest.mark.parametrize("kind", ["Lie", "W"])
@pytest.mark.parametrize("n", range(2, 9))
def test_tables_row(kind, n):
    for i in range(1, 5):
        assert lw.hat_entry(kind, i, n).schur() == tables.cell(kind, n, i)


def test_table_lookup_bounds():
    with pytest.raises(KeyError):
        tables.cell("W", 9, 2)
    with pytest.raises(KeyError):
        tables.cell("Lie", 6, 5)


@pytest.mark.parametrize("m", range(0, 9))
def test_degree_law(m):
    tally = derangements_by_cycles(m)
    for i in range(m + 1):
        for kind in ("Lie", "W"):
            assert dimension(lw.hat_entry(kind, i, m)) == tally.get(m - i, 0)


def test_derangement_numbers():
    assert derangement_numbers(6) == [1, 0, 1, 2, 9, 44, 265]
    d = derangement_numbers(10)
    for n in range(11):
        assert dimension(lw.kappa(n)) == dimension(lw.nu(n)) == d[n]


def test_graded_examples():
    assert lw.whitney_homology(2, 4) == S(([3, 1], 2), ([2, 2], 1), ([2, 1, 1], 1))
    assert lw.whitney_homology(0, 5) == h(5)
    for n in range(2, 8):
        assert lw.lie_graded(n - 1, n) == lw.ell(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_graded_via_M(n):
    for i in range(n):
        for kind in ("Lie", "W"):
            assert lw.graded(kind, i, n) == lw.graded_via_M(kind, i, n)


def test_conf_examples():
    assert lw.conf_cohomology(4, 3, 3) == SymFn.zero()
    assert lw.conf_cohomology(4, 2, 2) == lw.whitney_homology(2, 4)
    assert lw.conf_cohomology(4, 3, 2) == lw.lie_graded(1, 4) == schur([1, 1]) * h(2)


def test_tau_examples():
    assert lw.tau(4) == schur([3, 1]) - schur([2, 2])
    assert lw.tau(2) == h(2)
    assert d_dp1(lw.tau(5)) == lw.tau(4)


@pytest.mark.parametrize("n", range(4, 10))
def test_tau_alternative_form(n):
    assert lw.tau(n) == e(n) + p([2]) * e(n - 2)
    assert d_dp1(lw.tau(n)) == lw.tau(n - 1)


def test_kappa_nu_examples():
    assert lw.nu(4) == schur([3, 1]) * 2 + schur([2, 1, 1])
    assert lw.kappa(2) == schur([1, 1])
    assert lw.nu(0) == SymFn.one() and lw.nu(1) == SymFn.zero()
    assert lw.kappa(0) == SymFn.one() and lw.kappa(1) == SymFn.zero()


def test_row_recurrence_n4_by_hand():
    assert mul_p1(schur([2, 1])) + lw.tau(4) == lw.nu(4)


@pytest.mark.parametrize("n", range(1, 10))
def test_row_recurrence(n):
    assert lw.verify_row_recurrence(n)


@pytest.mark.parametrize("n", range(2, 10))
def test_wg_recurrence(n):
    assert all(lw.verify_wg_recurrence(n, i) for i in range(1, n))


def test_wg_recurrence_smallest():
    assert d_dp1(schur([1, 1])) == p([1])
    assert lw.verify_wg_recurrence(2, 1) and lw.verify_wg_recurrence(4, 3)


def test_euler_examples():
    assert lw.euler_hatW(4) == -schur([2, 1, 1])
    assert lw.euler_hatW(2) == -schur([2])
    assert lw.euler_hatW(8) == -schur([2, 1, 1, 1, 1, 1, 1])


@pytest.mark.parametrize("n", range(2, 10))
def test_euler_and_hook_pattern(n):
    assert lw.euler_hatW(n) == lw.hook_21(n) * (-1) ** (n - 1)
    hook = Partition([2] + [1] * (n - 2))
    mults = [lw.hat_entry("W", i, n).schur().get(hook, 0) for i in range(n)]
    assert mults == [0] * (n - 1) + [1]


@pytest.mark.parametrize("n", range(2, 10))
def test_top_rank_is_omega(n):
    assert lw.hat_entry("W", n - 1, n) == omega(lw.hat_entry("Lie", n - 1, n))


@pytest.mark.parametrize("i", range(1, 5))
def test_aggregate_bounds(i):
    assert bounded_by(lw.hat_aggregate("Lie", i)) == i
    assert bounded_by(lw.hat_aggregate("W", i)) == i + 1


@pytest.mark.parametrize("kind", ["Lie", "W", "hatLie", "hatW"])
def test_product_generating_functions(kind):
    assert lw.check_product_gf(1, kind)
    assert lw.check_product_gf(6, kind)


def test_ell_via_maj():
    assert lw.ell_via_maj(3) == schur([2, 1])
    assert lw.ell_via_maj(2) == schur([1, 1])
    for n in range(2, 9):
        assert lw.ell_via_maj(n) == lw.ell(n)


def test_mobius():
    assert [lw.mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
