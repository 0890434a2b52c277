"""Combinatorics layer: counts against generating-function oracles, orders,
hooks, tableaux."""

import itertools
from fractions import Fraction

import pytest

from centermatch.partitions import (
    apply_transposition,
    conjugate,
    contents,
    enumerate_multipartitions,
    frobenius_hooks,
    hook_lengths,
    mp_boxes,
    mp_num_standard_tableaux,
    mp_size,
    num_standard_tableaux,
    partitions_of,
    standard_multitableaux,
    standard_tableaux,
    tableau_positions,
)


# -- oracles ---------------------------------------------------------------


def partition_count_oracle(n, r=1):
    # coefficient extraction from prod_k (1 - q^k)^(-r), pure integer work
    coeffs = [1] + [0] * n
    for k in range(1, n + 1):
        for _ in range(r):
            # multiply by 1/(1-q^k): running prefix sums with stride k
            for i in range(k, n + 1):
                coeffs[i] += coeffs[i - k]
    return coeffs[n]


def test_partition_counts_match_generating_function():
    for n in range(0, 13):
        assert len(partitions_of(n)) == partition_count_oracle(n)


def test_partitions_descending_lex_and_valid():
    for n in range(1, 11):
        ps = partitions_of(n)
        assert list(ps) == sorted(ps, reverse=True)
        for p in ps:
            assert sum(p) == n
            assert all(a >= b for a, b in zip(p, p[1:]))
            assert all(a > 0 for a in p)
        assert len(set(ps)) == len(ps)


def test_partitions_of_three_explicit_order():
    assert partitions_of(3) == ((3,), (2, 1), (1, 1, 1))


def test_conjugate_involution_and_transpose_oracle():
    for n in range(0, 9):
        for lam in partitions_of(n):
            assert conjugate(conjugate(lam)) == lam
            # oracle: box transposition
            boxes = {(i, j) for i in range(len(lam)) for j in range(lam[i])}
            conj_boxes = {(j, i) for (i, j) in boxes}
            rebuilt = conjugate(lam)
            boxes2 = {(i, j) for i in range(len(rebuilt)) for j in range(rebuilt[i])}
            assert boxes2 == conj_boxes


def test_content_sum_identity():
    # sum of contents = sum_i binom(lam_i,2) - binom(lam'_j,2)
    for n in range(1, 10):
        for lam in partitions_of(n):
            lhs = sum(contents(lam))
            rhs = sum(p * (p - 1) // 2 for p in lam) - sum(
                p * (p - 1) // 2 for p in conjugate(lam)
            )
            assert lhs == rhs


def test_hook_lengths_small_shape():
    assert sorted(hook_lengths((2, 1))) == [1, 1, 3]
    assert sorted(hook_lengths((3, 2))) == [1, 1, 2, 3, 4]


def test_standard_tableaux_count_matches_hook_formula():
    for n in range(1, 8):
        for lam in partitions_of(n):
            assert len(standard_tableaux(lam)) == num_standard_tableaux(lam)


def test_sum_of_squares_is_group_order():
    for n in range(1, 8):
        assert sum(num_standard_tableaux(l) ** 2 for l in partitions_of(n)) == (
            __import__("math").factorial(n)
        )


def test_standard_tableaux_are_standard():
    for lam in partitions_of(6):
        for t in standard_tableaux(lam):
            rows = t
            seen = [v for row in rows for v in row]
            assert sorted(seen) == list(range(1, 7))
            for row in rows:
                assert all(a < b for a, b in zip(row, row[1:]))
            for i in range(len(rows) - 1):
                for j in range(len(rows[i + 1])):
                    assert rows[i][j] < rows[i + 1][j]


# -- multipartitions -------------------------------------------------------


def test_multipartition_counts():
    for r in (1, 2, 3, 4):
        for n in range(0, 7 if r < 4 else 6):
            assert len(enumerate_multipartitions(r, n)) == partition_count_oracle(n, r)
    assert len(enumerate_multipartitions(3, 5)) == 108
    assert len(enumerate_multipartitions(3, 4)) == 51
    assert len(enumerate_multipartitions(4, 5)) == 252


def test_multipartition_order_two_one():
    assert enumerate_multipartitions(2, 1) == ((((1,), ())), ((), ((1,))))


def test_multipartition_order_two_two():
    expected = (
        ((2,), ()),
        ((1, 1), ()),
        ((1,), (1,)),
        ((), (2,)),
        ((), (1, 1)),
    )
    assert enumerate_multipartitions(2, 2) == expected


def test_multipartition_no_duplicates_and_sizes():
    for r in (1, 2, 3):
        for n in range(0, 6):
            mps = enumerate_multipartitions(r, n)
            assert len(set(mps)) == len(mps)
            for mp in mps:
                assert len(mp) == r
                assert mp_size(mp) == n


def test_mp_boxes_and_contents():
    mp = ((2, 1), (1,))
    boxes = mp_boxes(mp)
    assert boxes == [(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert [j - i for (_, i, j) in boxes] == [0, 1, -1, 0]


def test_multitableaux_count_matches_multinomial_hook_oracle():
    for r in (2, 3):
        for n in range(0, 5):
            for mp in enumerate_multipartitions(r, n):
                assert len(standard_multitableaux(mp)) == mp_num_standard_tableaux(mp)


def test_multitableau_squares_sum_to_wreath_order():
    import math

    for r in (1, 2, 3):
        for n in (1, 2, 3, 4):
            total = sum(
                mp_num_standard_tableaux(mp) ** 2
                for mp in enumerate_multipartitions(r, n)
            )
            assert total == r ** n * math.factorial(n)


def test_tableau_positions_round_trip():
    mp = ((2,), (1,))
    for t in standard_multitableaux(mp):
        pos = tableau_positions(t)
        assert sorted(pos) == [1, 2, 3]
        for v, (l, i, j) in pos.items():
            assert t[l][i][j] == v


def test_apply_transposition_swaps():
    t = (((1, 2), (3,)),)
    assert apply_transposition(t, 2) == (((1, 3), (2,)),)
    assert apply_transposition(apply_transposition(t, 2), 2) == t


# -- Frobenius hooks -------------------------------------------------------


def test_frobenius_hooks_examples():
    assert frobenius_hooks((1,)) == [(1, 1)]
    assert frobenius_hooks((3, 1)) == [(4, 3)]
    assert frobenius_hooks((2, 2)) == [(3, 2), (1, 1)]
    assert frobenius_hooks((2, 1)) == [(3, 2)]
    assert frobenius_hooks((4, 3, 3, 1)) == [(7, 4), (3, 2), (1, 1)]


def test_frobenius_hooks_partition_boxes():
    # hooks partition the diagram: sizes sum to n and contents match
    for n in range(1, 11):
        for lam in partitions_of(n):
            hooks = frobenius_hooks(lam)
            assert sum(m for (m, _) in hooks) == n
            # the i-th hook has corner content 0, arm 0..k-1, leg -(m-k)..-1
            rebuilt = []
            for m, k in hooks:
                rebuilt.extend(range(-(m - k), k))
            assert sorted(rebuilt) == sorted(contents(lam))


def test_frobenius_hooks_strictly_decreasing_sizes():
    for n in range(1, 11):
        for lam in partitions_of(n):
            hooks = frobenius_hooks(lam)
            sizes = [m for (m, _) in hooks]
            assert all(a > b for a, b in zip(sizes, sizes[1:]))
            for m, k in hooks:
                assert 1 <= k <= m
