"""Counting planes over a fixed diagonal, and the identities the counts obey."""

import math
from collections import Counter

import pytest

from planeperm.enumeration import (
    CountTable,
    EnumerationLimitError,
    W_count,
    enumerate_U_D,
    exceedance_totals,
    p1_closed_forms,
    p1_routes,
    suite_bijection,
    suite_cycle_recurrence,
    suite_exceedance,
    suite_f_recurrence,
    suite_ntae_identity,
    suite_p1,
    suite_trisection,
    suite_w_identities,
    suite_zagier_stanley,
    tabulate,
    verify_bijection,
    verify_cycle_recurrence,
    verify_f_recurrence,
    verify_ntae_identity,
    verify_stirling_recurrence,
    verify_trisection,
    xi,
    xi_brute_all,
    zagier_stanley_check,
)
from planeperm.partitions import Partition, binomial, partitions_of, q_lambda, stirling_first
from planeperm.perm import Permutation

P = Partition.of


def test_enumerate_U_D_census():
    diag = Permutation.from_cycles([(1, 2), (3,)], labels=(1, 2, 3))
    planes = list(enumerate_U_D(diag))
    assert len(planes) == 2
    assert all(p.s[0] == 1 for p in planes)
    assert all(p.diagonal == diag for p in planes)
    assert len({p.s for p in planes}) == 2


def test_enumerate_U_D_limit():
    diag = Permutation.identity(range(1, 13))
    with pytest.raises(EnumerationLimitError):
        list(enumerate_U_D(diag))
    with pytest.raises(EnumerationLimitError):
        list(enumerate_U_D(Permutation.identity(range(1, 6)), limit=4))


def test_tabulate_smallest_cases():
    table = tabulate(3, P([3]))
    assert table.counts == {(0, (1, 1, 1)): 1, (1, (3,)): 1}
    assert table.f(P([1, 1, 1])) == 1
    assert table.f_a(P([3]), 1) == 1
    assert table.f_a(P([3]), 0) == 0
    assert table.p_k(3) == 1
    assert table.p_a_k(1, 1) == 1
    assert table.total() == 2


def test_tabulate_two_two():
    table = tabulate(4, P([2, 2]))
    assert {k: table.p_k(k) for k in (1, 2, 3, 4)} == {1: 2, 2: 0, 3: 4, 4: 0}
    assert table.total() == 6


def test_tabulate_total_is_factorial():
    for n in range(1, 7):
        for lam in partitions_of(n):
            assert tabulate(n, lam).total() == math.factorial(n - 1)


def test_tabulate_parity_filter():
    """Counts vanish unless cycle count and diagonal length agree mod 2."""
    for n in (4, 5):
        for lam in partitions_of(n):
            table = tabulate(n, lam)
            for (_, eta_parts), count in table.counts.items():
                assert (len(eta_parts) + len(lam) - (n - 1)) % 2 == 0 or count == 0


def test_tabulate_is_representative_independent():
    lam = P([2, 1, 1])
    table = tabulate(4, lam)
    alpha = Permutation.from_one_line((3, 1, 4, 2))
    moved = Permutation.from_cycle_type(lam).conjugate_by(alpha)
    census = Counter()
    for p in enumerate_U_D(moved):
        census[(len(p.exceedances()), p.pi.cycle_type().parts)] += 1
    assert dict(census) == {k: v for k, v in table.counts.items() if v}


def test_tabulate_rejects_bad_input():
    with pytest.raises(ValueError):
        tabulate(4, P([3]))
    with pytest.raises(EnumerationLimitError):
        tabulate(9, P([9]))
    with pytest.raises(EnumerationLimitError):
        tabulate(11, P([11]), allow_large=True)


def test_xi_values():
    assert xi(3, 1) == 1
    assert xi(3, 2) == 0
    assert xi(3, 3) == 1
    assert [xi(4, k) for k in range(5)] == [0, 0, 5, 0, 1]


def test_xi_matches_brute_force():
    for n in range(1, 7):
        brute = xi_brute_all(n)
        for k in range(n + 2):
            assert brute.get(k, 0) == xi(n, k), (n, k)


def test_zagier_stanley_check():
    for n in range(1, 6):
        assert zagier_stanley_check(n).passed


def test_stirling_recurrence():
    assert verify_stirling_recurrence(12).passed


def test_exceedance_totals():
    direct, via_stirling = exceedance_totals(3, 1)
    assert direct == via_stirling == 3
    for n in range(1, 7):
        for k in range(1, n + 1):
            direct, via_stirling = exceedance_totals(n, k)
            assert direct == via_stirling
            assert via_stirling == binomial(n, 2) * stirling_first(n - 1, k)


def test_ntae_identity():
    assert verify_ntae_identity(4, P([2, 2]), 1).passed
    assert verify_ntae_identity(5, P([3, 1, 1]), 2).passed
    with pytest.raises(ValueError):
        verify_ntae_identity(4, P([2, 2]), 0)


def test_f_recurrence():
    assert verify_f_recurrence(4, P([2, 1, 1]), P([4])).passed
    assert verify_f_recurrence(5, P([2, 2, 1]), P([4, 1])).passed
    with pytest.raises(ValueError):
        verify_f_recurrence(2, P([1, 1]), P([1, 1]))


def test_cycle_recurrence():
    assert verify_cycle_recurrence(4, P([2, 2]), 1).passed
    with pytest.raises(ValueError):
        verify_cycle_recurrence(3, P([1, 1, 1]), 1)


def test_p1_routes():
    routes = p1_routes(4, P([2, 2]))
    assert routes == {"alternating": 2, "product": 2, "enumerated": 2}
    # a part of size five admits no product form, the other routes remain
    tall = p1_routes(6, P([5, 1]))
    assert set(tall) == {"alternating", "enumerated"}
    assert len(set(tall.values())) == 1


def test_p1_closed_form_values():
    assert p1_closed_forms(4, P([2, 2])) == 2
    assert p1_closed_forms(3, P([3])) == 1
    assert p1_closed_forms(2, P([2])) == 0
    assert p1_closed_forms(4, P([4])) == 0
    assert p1_closed_forms(5, P([2, 2, 1])) == 8
    for n in range(1, 7):
        assert p1_closed_forms(n, P([1] * n)) == math.factorial(n - 1)


def test_p1_parity_zero():
    # odd gap between n and the diagonal length forces an empty count
    assert p1_closed_forms(5, P([2, 1, 1, 1])) == 0
    assert p1_closed_forms(6, P([3, 2, 1])) == 0


def test_w_count():
    assert W_count(P([3]), P([3]), P([3])) == 1
    assert W_count(P([2, 1]), P([1, 1, 1]), P([2, 1])) == W_count(
        P([2, 1]), P([2, 1]), P([1, 1, 1])
    )
    # the identity label row pins both others to be equal
    assert W_count(P([2, 1]), P([1, 1, 1]), P([1, 1, 1])) == 0


def test_w_count_sums_to_xi():
    for n in (3, 4):
        lam = P([n])
        for k in range(1, n + 1):
            total = sum(
                W_count(lam, lam, eta) for eta in partitions_of(n) if len(eta) == k
            )
            assert total == xi(n, k), (n, k)


def test_bijection_identity_diagonal_is_empty():
    rep = verify_bijection(Permutation.identity(range(1, 6)))
    assert rep.passed
    assert rep.info["y1"] == rep.info["y2"] == rep.info["y3"] == 0


def test_bijection_single_diagonal():
    rep = verify_bijection(Permutation.from_cycle_type(P([3, 2])))
    assert rep.passed
    assert rep.info["y1"] == rep.info["y2"] + rep.info["y3"]


def test_bijection_census_matches_closed_forms():
    """Y-counts for all diagonals up to n=4 against direct formulas: the
    marked planes come from the exceedance census, the marked triples from
    choosing three cycles."""
    rep = suite_bijection(4)
    assert rep.passed
    assert rep.info["diagonals"] == 33
    y1 = y2 = 0
    for m in range(1, 5):
        per_top = math.factorial(m - 1)
        y1 += per_top * (
            m * math.factorial(m)
            - math.factorial(m) * (m - 1) // 2
            - sum(k * stirling_first(m, k) for k in range(1, m + 1))
        )
        y2 += per_top * sum(
            binomial(k, 3) * stirling_first(m, k) for k in range(1, m + 1)
        )
    assert rep.info["y1"] == y1 == 62
    assert rep.info["y2"] == y2 == 62
    assert rep.info["y3"] == y1 - y2 == 0


def test_trisection_hand_case():
    diag = Permutation.from_cycles([(1, 2), (3, 4)], labels=range(1, 5))
    rep = verify_trisection(diag)
    assert rep.passed
    # object-level recount of the same facts
    for p in enumerate_U_D(diag):
        cycles = len(p.cycles_by_position())
        assert len(p.anti_exceedances()) == 3
        genus2 = 3 - cycles
        assert genus2 >= 0 and genus2 % 2 == 0
        assert len(p.ntaes()) == genus2


def test_trisection_sparse_labels():
    diag = Permutation.from_cycles([(1, 3), (2, 5)], labels=(1, 2, 3, 5))
    assert verify_trisection(diag).passed


def test_trisection_rejects_non_involutions():
    with pytest.raises(ValueError):
        verify_trisection(Permutation.from_cycles([(1, 2, 3), (4,)], labels=range(1, 5)))
    with pytest.raises(ValueError):
        verify_trisection(Permutation.identity(range(1, 3)))


def test_suite_trisection_small():
    rep = suite_trisection(2)
    assert rep.passed
    assert rep.info["pairings"] == 4


def test_identity_suites_pass_small():
    assert suite_ntae_identity(4).passed
    assert suite_f_recurrence(4).passed
    assert suite_cycle_recurrence(4).passed
    assert suite_zagier_stanley(4).passed
    assert suite_exceedance(4).passed
    assert suite_p1(4).passed
    assert suite_w_identities(3).passed


def test_count_table_rows_are_sorted():
    table = tabulate(4, P([2, 2]))
    rows = list(table.rows())
    assert rows == sorted(rows)
    assert all(isinstance(r, tuple) and len(r) == 3 for r in rows)
    assert isinstance(table, CountTable)
