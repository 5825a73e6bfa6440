from fractions import Fraction
from functools import reduce
from itertools import product
from math import factorial

import pytest

from hurwitz.core import HurwitzKey, Partition, partitions
from hurwitz.oracle import (
    InfeasibleError,
    count_tuples,
    count_tuples_all_cycles,
    oracle_hurwitz,
    oracle_table,
    required_tuples,
)
from hurwitz.permgroup import (
    all_ncycles,
    all_permutations,
    all_transpositions,
    canonical_ncycle,
    compose,
    cycle_type,
)

from conftest import P


def naive_hurwitz(g, b):
    """(1/n!) * #{(sigma, tau_1..tau_r)} with plain Permutation objects, no reductions."""
    n = b.degree()
    r = 2 * g + b.length() - 1
    ts = all_transpositions(n)
    count = 0
    for sigma in all_ncycles(n):
        for taus in product(ts, repeat=r):
            prod = reduce(lambda acc, t: compose(t, acc), taus, sigma)
            count += cycle_type(prod) == b
    return Fraction(count, factorial(n))


@pytest.mark.parametrize("g", range(4))
def test_h_2_2_is_half(g):
    assert oracle_hurwitz(g, P(2)) == Fraction(1, 2)


@pytest.mark.parametrize("n", range(1, 7))
def test_genus0_full_profile(n):
    assert oracle_hurwitz(0, P(n)) == Fraction(1, n)


def test_small_values():
    assert oracle_hurwitz(1, P(2, 1)) == 9
    assert oracle_hurwitz(1, P(3)) == 2
    assert oracle_hurwitz(0, P(1, 1)) == Fraction(1, 2)
    assert oracle_hurwitz(0, P(2, 1)) == 1
    assert oracle_hurwitz(1, P(1, 1)) == Fraction(1, 2)


@pytest.mark.parametrize("g, expected", [(0, 1), (1, 0), (2, 0), (3, 0)])
def test_degree_one(g, expected):
    assert oracle_hurwitz(g, P(1)) == expected


def test_every_tuple_counts_for_2_1():
    # all 3**3 transposition triples give an odd product of type (2,1)
    assert count_tuples(canonical_ncycle(3), 3, P(2, 1)) == 27
    assert count_tuples(canonical_ncycle(3), 2, P(3)) == 6


@pytest.mark.parametrize("g, b", [
    (g, b) for n in range(1, 5) for b in partitions(n) for g in range(2)
    if 2 * g + b.length() - 1 <= 5
])
def test_matches_naive_enumeration(g, b):
    assert oracle_hurwitz(g, b) == naive_hurwitz(g, b)


@pytest.mark.parametrize("n", range(1, 5))
def test_conjugation_reduction(n):
    sigma = canonical_ncycle(n)
    for b in partitions(n):
        for r in range(4):
            assert count_tuples_all_cycles(n, r, b) == factorial(n - 1) * count_tuples(sigma, r, b)


@pytest.mark.parametrize("n", range(2, 6))
def test_parity_mismatch_gives_zero(n):
    sigma = canonical_ncycle(n)
    for b in partitions(n):
        q = b.length()
        for r in range(5):
            if (r + n - 1) % 2 != (n - q) % 2:
                assert count_tuples(sigma, r, b) == 0


def test_degree_mismatch_gives_zero():
    assert count_tuples(canonical_ncycle(3), 1, P(2, 1, 1)) == 0


def test_parts_order_irrelevant():
    # the target type is canonicalized, so every ordering describes the same count
    for parts in ([3, 1], [1, 3]):
        assert oracle_hurwitz(1, Partition(parts)) == oracle_hurwitz(1, P(3, 1))


def test_nonnegative():
    table, _ = oracle_table(4, 1)
    assert all(v >= 0 for v in table.values())


def test_workers_do_not_change_result():
    sigma = canonical_ncycle(4)
    for b in partitions(4):
        assert count_tuples(sigma, 5, b, workers=3) == count_tuples(sigma, 5, b)


def test_budget_guard():
    assert required_tuples(4, 5) == 6**5
    with pytest.raises(InfeasibleError) as info:
        oracle_hurwitz(2, P(3, 1), budget=1000)
    assert info.value.required == 6**5
    assert info.value.budget == 1000
    assert "1000" in str(info.value) and "7776" in str(info.value)


def test_oracle_table_small():
    table, skipped = oracle_table(2, 1)
    assert not skipped
    assert table == {
        HurwitzKey(0, P(1)): 1,
        HurwitzKey(1, P(1)): 0,
        HurwitzKey(0, P(2)): Fraction(1, 2),
        HurwitzKey(1, P(2)): Fraction(1, 2),
        HurwitzKey(0, P(1, 1)): Fraction(1, 2),
        HurwitzKey(1, P(1, 1)): Fraction(1, 2),
    }
    assert oracle_table(1, 0)[0] == {HurwitzKey(0, P(1)): 1}
    assert oracle_table(3, 1)[0][HurwitzKey(1, P(2, 1))] == 9


def test_oracle_table_reports_skipped():
    table, skipped = oracle_table(3, 2, budget=100)
    assert HurwitzKey(2, P(1, 1, 1)) in skipped  # 3**6 tuples
    assert HurwitzKey(2, P(1, 1, 1)) not in table
    assert HurwitzKey(0, P(3)) in table


def test_all_permutations_count():
    assert sum(1 for _ in all_permutations(4)) == 24
