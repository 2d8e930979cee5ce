from itertools import combinations
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from repstab import orliksolomon as osa
from repstab.liewhitney import hat_entry, hook_21
from repstab.partitions import Partition
from repstab.setpartitions import BudgetExceeded
from repstab.symfunc import schur
from repstab.verify import derangements_by_cycles

E = osa.OSElement.parse
edges5 = st.lists(st.sampled_from(list(combinations(range(1, 6), 2))), min_size=0, max_size=4)


def test_straighten_examples():
    assert E(3, "a(1,3)a(2,3)") == E(3, "a(1,2)a(2,3)") - E(3, "a(1,2)a(1,3)")
    assert osa.straighten([(1, 3), (2, 3)]) == {((1, 2), (2, 3)): 1, ((1, 2), (1, 3)): -1}
    assert not E(3, "a(1,2)a(1,2)")
    assert E(3, "a(1,2)").terms == {((1, 2),): 1}


def test_arnold_relation():
    rel = E(3, "a(1,2)a(1,3)") - E(3, "a(1,2)a(2,3)") + E(3, "a(1,3)a(2,3)")
    assert not rel


def test_parse_errors():
    with pytest.raises(ValueError):
        E(3, "a(1,4)")
    with pytest.raises(ValueError):
        E(3, "b(1,2)")
    assert str(E(3, "a(1,3)a(2,3)")) == "-a(1,2)a(1,3) + a(1,2)a(2,3)"
    assert str(E(3, "")) == "1" and str(E(3, "a(1,2)a(1,2)")) == "0"


def test_dims_examples():
    assert osa.dims(4) == [1, 6, 11, 6]
    assert osa.dims(2) == [1, 1]
    assert osa.dims(3) == [1, 3, 2]


@pytest.mark.parametrize("n", range(1, 8))
def test_dims_match_characteristic_polynomial(n):
    assert osa.dims(n) == osa.char_poly_dims(n)
    assert sum(osa.dims(n)) == factorial(n)


@pytest.mark.parametrize("n", range(2, 7))
def test_nbc_basis_is_broken_circuit_free(n):
    for i in range(n):
        for m in osa.nbc_basis(n, i):
            assert osa._broken(m) is None
            assert osa.straighten(m) == {m: 1}


def test_differential_examples():
    assert osa.differential(osa.OSElement.one(3)) == E(3, "a(1,2)") + E(3, "a(1,3)") + E(3, "a(2,3)")
    for m in osa.nbc_basis(4, 3):
        assert not osa.differential(osa.OSElement._raw(4, {m: 1}))


@pytest.mark.parametrize("n", range(2, 7))
def test_d_squared_and_equivariance(n):
    assert osa.d_squared_zero(n)
    assert osa.d_equivariant(n)


def test_filtration_examples():
    assert len(osa.filtration_basis(4, 4, 2)) == 3
    assert osa.filtration_basis(4, 0, 2) == osa.nbc_basis(4, 2)
    assert osa.filtration_basis(4, 4, 1) == []


@pytest.mark.parametrize("n", range(2, 8))
def test_filtration_dimensions(n):
    tally = derangements_by_cycles(n)
    for i in range(n):
        assert len(osa.filtration_basis(n, n, i)) == tally.get(n - i, 0)


@pytest.mark.parametrize("n", range(2, 6))
def test_filtration_characters(n):
    for i in range(n):
        assert osa.F_character(n, n, i) == hat_entry("W", i, n)


def test_hatW_cohomology_examples():
    assert osa.hatW_cohomology(3) == [(2, 2)]
    assert osa.hatW_cohomology(4) == [(3, 3)]
    assert osa.hatW_cohomology(6) == [(5, 5)]


@pytest.mark.parametrize("n", range(2, 7))
def test_concentration(n):
    assert osa.hatW_cohomology(n) == [(n - 1, n - 1)]
    assert osa.hatW_top_character(n) == hook_21(n)


def test_top_character_examples():
    assert osa.hatW_top_character(4) == schur([2, 1, 1])
    assert osa.hatW_top_character(2) == schur([2])


def test_modular_ranks_bound_rational_ranks():
    for n in range(2, 6):
        for p in (0, n):
            assert osa.complex_ranks(n, p, "GFp") == osa.complex_ranks(n, p, "Q")


def test_failed_concentration_message(monkeypatch):
    monkeypatch.setattr(osa, "hatW_cohomology", lambda n: [(1, 1), (2, 1)])
    with pytest.raises(ArithmeticError, match="cannot identify character from Euler characteristic"):
        osa.hatW_top_character(4)


@pytest.mark.parametrize("n", range(2, 7))
def test_exactness(n):
    assert osa.is_exact(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_A_characters(n):
    assert osa.verify_A_characters(n)


def test_star_tree_examples():
    r = osa.star_tree_span(3)
    assert r.dimension == 2 and r.character == schur([2, 1])
    assert osa.star_tree_span(5).relation_holds
    assert osa.star_tree_span(4).dimension == 3


@pytest.mark.parametrize("n", range(2, 7))
def test_star_tree(n):
    assert osa.star_tree_span(n).ok


def test_dprime_examples():
    assert osa.verify_Dprime_euler(2) and osa.verify_Dprime_euler(4)
    assert all(osa.verify_Dprime_euler(n) for n in range(2, 9))


def test_caps():
    with pytest.raises(BudgetExceeded):
        osa.is_exact(osa.OS.max_n + 1)
    with pytest.raises(BudgetExceeded):
        osa.hatW_cohomology(osa.OS.max_n_hat + 1)


@given(edges5)
def test_straighten_antisymmetric(edges):
    base = osa.straighten(edges)
    for k in range(len(edges) - 1):
        swapped = edges[:k] + [edges[k + 1], edges[k]] + edges[k + 2:]
        assert osa.straighten(swapped) == {m: -v for m, v in base.items()}
    if len(set(edges)) < len(edges):
        assert base == {}


@settings(max_examples=50)
@given(edges5, edges5, edges5)
def test_product_associative(a, b, c):
    x, y, z = (osa.OSElement(5, {tuple(e): 1}) for e in (a, b, c))
    assert (x * y) * z == x * (y * z)


@settings(max_examples=50)
@given(edges5, st.permutations(range(5)))
def test_action_is_multiplicative(a, w):
    x = osa.OSElement(5, {tuple(a): 1})
    g = osa.OSElement(5, {((1, 2),): 1})
    assert (g * x).act(w) == g.act(w) * x.act(w)


def test_cohomology_report():
    r = osa.cohomology_report(4)
    assert r["n"] == 4 and r["dims"] == [[3, 3]]
    assert r["top_character"]["basis"] == "s"
    assert [t["partition"] for t in r["top_character"]["terms"]] == [[2, 1, 1]]
