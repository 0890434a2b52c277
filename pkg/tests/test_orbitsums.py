"""Orbit-sum invariants, the degree-0 quotient, and the spanning recursion."""

import random
from fractions import Fraction

import pytest

from centermatch.orbitsums import (
    InvariantElement,
    OrbitMonomial,
    canonical_family,
    canonical_family_independent,
    fixed_point_quotient,
    hat_forward,
    hat_inverse,
    orbit_product,
    pair_to_monomial,
    reduction_consistency_check,
    spanning_bound,
    spanning_reduction,
)
from centermatch.partitions import enumerate_multipartitions


def mono(r, entries):
    return OrbitMonomial(r, entries)


def elem(n, r, entries, c=1):
    return InvariantElement.from_monomial(n, r, entries, c)


def test_monomial_validation():
    with pytest.raises(ValueError):
        mono(1, [(0, 0)])
    with pytest.raises(ValueError):
        mono(2, [(0, 0, 0)])
    with pytest.raises(ValueError):
        mono(2, [(1, 0, 2)])  # c exceeds r-1
    with pytest.raises(ValueError):
        mono(2, [(1, 0)])  # pairs only for r = 1
    with pytest.raises(ValueError):
        mono(1, [(-1, 2)])
    assert repr(mono(1, [])) == "1"
    assert repr(mono(1, [(1, 0), (0, 1)])) == "(1,0)(0,1)"
    assert repr(mono(3, [(0, 0, 2)])) == "(0,0,2)"
    m = mono(1, [(0, 1), (1, 0)])
    assert m.length == 2 and m.tdeg == 0 and m.wdeg == 2


def test_product_examples():
    got = orbit_product(elem(2, 1, [(1, 0)]), elem(2, 1, [(0, 1)]), 2, 1)
    want = elem(2, 1, [(1, 1)]) + elem(2, 1, [(1, 0), (0, 1)])
    assert got == want

    got = orbit_product(elem(2, 1, [(1, 0)]), elem(2, 1, [(1, 0)]), 2, 1)
    want = elem(2, 1, [(2, 0)]) + elem(2, 1, [(1, 0), (1, 0)], 2)
    assert got == want

    for r in (2, 3, 4):
        got = orbit_product(
            elem(1, r, [(0, 0, 1)]), elem(1, r, [(0, 0, r - 1)]), 1, r
        )
        assert got == elem(1, r, [(1, 1, 0)])


def test_product_ring_mismatch():
    with pytest.raises(ValueError):
        orbit_product(elem(2, 1, [(1, 0)]), elem(2, 1, [(0, 1)]), 3, 1)
    with pytest.raises(ValueError):
        orbit_product(elem(2, 1, [(1, 0)]), elem(3, 1, [(0, 1)]), 2, 1)


def test_long_monomials_vanish():
    assert elem(2, 1, [(1, 0), (1, 0), (1, 0)]).is_zero()
    prod = orbit_product(
        elem(2, 1, [(1, 0), (1, 0)]), elem(2, 1, [(0, 1), (0, 1)]), 2, 1
    )
    for m in prod.terms:
        assert m.length <= 2


def _random_monomial(rng, n, r, wmax=6):
    size = rng.randint(0, n)
    bag = []
    for _ in range(size):
        while True:
            a, b = rng.randint(0, 2), rng.randint(0, 2)
            c = rng.randint(0, r - 1)
            if (a, b, c) != (0, 0, 0):
                break
        bag.append((a, b, c))
    return OrbitMonomial(r, bag)


def test_product_commutative_and_associative():
    rng = random.Random(99)
    for n in (2, 3):
        for r in (1, 2, 3):
            for _ in range(8):
                u = InvariantElement(n, r, {_random_monomial(rng, n, r): Fraction(1)})
                v = InvariantElement(n, r, {_random_monomial(rng, n, r): Fraction(1)})
                w = InvariantElement(n, r, {_random_monomial(rng, n, r): Fraction(1)})
                assert orbit_product(u, v, n, r) == orbit_product(v, u, n, r)
                left = orbit_product(orbit_product(u, v, n, r), w, n, r)
                right = orbit_product(u, orbit_product(v, w, n, r), n, r)
                assert left == right


def test_structure_constants_positive_integers():
    rng = random.Random(5)
    for _ in range(25):
        n, r = rng.choice([(2, 1), (3, 1), (2, 2), (3, 2), (2, 3)])
        u = _random_monomial(rng, n, r)
        v = _random_monomial(rng, n, r)
        prod = orbit_product(
            InvariantElement(n, r, {u: Fraction(1)}),
            InvariantElement(n, r, {v: Fraction(1)}),
            n,
            r,
        )
        if u.length > n or v.length > n:
            assert prod.is_zero()
            continue
        for coeff in prod.terms.values():
            assert coeff.denominator == 1 and coeff > 0
        if u.length + v.length <= n:
            concat = OrbitMonomial(r, u.bag + v.bag)
            assert prod.coefficient(concat) > 0


def test_quotient_examples():
    rep = fixed_point_quotient(2, 1, cutoff=4)
    assert rep["dimension"] == 2
    assert set(rep["basis"]) == {"1", "(1,1)"}

    for r in (1, 2, 3):
        rep = fixed_point_quotient(1, r)
        assert rep["dimension"] == r
        assert set(rep["basis"]) == {"1"} | {
            repr(mono(r, [(0, 0, c)])) for c in range(1, r)
        }

    rep = fixed_point_quotient(3, 1, cutoff=6)
    assert rep["dimension"] == 3


def test_quotient_medium_sizes():
    for n, r in [(3, 2), (2, 3), (2, 2)]:
        rep = fixed_point_quotient(n, r)
        assert rep["dimension"] == len(enumerate_multipartitions(r, n))
        assert rep["window_ok"]
        assert rep["last_nonzero_degree"] <= rep["spanning_bound"]


def test_cutoff_below_bound_rejected():
    with pytest.raises(ValueError):
        fixed_point_quotient(2, 1, cutoff=1)
    with pytest.raises(ValueError):
        fixed_point_quotient(3, 2, cutoff=spanning_bound(3, 2) - 1)


def test_spanning_bound_values():
    assert spanning_bound(2, 1) == 2
    assert spanning_bound(1, 2) == 2
    assert spanning_bound(1, 1) == 0


def test_reduction_examples():
    red = spanning_reduction(mono(1, [(1, 1)]), 2, 1)
    assert red == elem(2, 1, [(1, 0), (0, 1)], -1)

    for can in canonical_family(2, 2):
        assert spanning_reduction(can, 2, 2) == InvariantElement(
            2, 2, {can: Fraction(1)}
        )

    assert spanning_reduction(mono(1, [(1, 1), (1, 1), (1, 1)]), 2, 1).is_zero()

    with pytest.raises(ValueError):
        spanning_reduction(mono(1, [(1, 0)]), 2, 1)  # nonzero torus degree

    red = spanning_reduction(mono(2, [(2, 2, 1)]), 3, 2)
    assert not red.is_zero()
    from centermatch.orbitsums import is_canonical

    assert all(is_canonical(m) for m in red.terms)


def test_reduction_consistent_with_linear_algebra():
    for n, r in [(3, 1), (2, 2), (3, 2), (2, 3)]:
        assert reduction_consistency_check(n, r)


def test_canonical_family_counts_and_independence():
    for n, r in [(2, 1), (3, 1), (2, 2), (3, 2), (1, 3), (2, 3)]:
        fam = canonical_family(n, r)
        assert len(fam) == len(enumerate_multipartitions(r, n))
        assert len(set(fam)) == len(fam)
        assert all(m.length <= n and m.tdeg == 0 for m in fam)
        assert canonical_family_independent(n, r)


def test_hat_bijection_round_trip():
    for r in (1, 2, 3):
        for n in range(1, 6):
            seen = set()
            for mp in enumerate_multipartitions(r, n):
                lam, p = hat_inverse(mp)
                assert hat_forward(lam, p, n, r) == mp
                budget = (
                    sum(len(c) for c in lam)
                    + sum(sum(c) for c in lam)
                    + sum(p)
                )
                assert budget <= n
                seen.add((lam, p))
            assert len(seen) == len(enumerate_multipartitions(r, n))


def test_hat_forward_budget_error():
    with pytest.raises(ValueError):
        hat_forward(((2,),), (), 2, 1)  # l + |lam| = 3 > 2


def test_pair_to_monomial_shapes():
    m = pair_to_monomial(((1,), (2,)), (1,), 2)
    # entries: (1,0,0), (2,0,1), one pad count (0,0,1), three (0,1,0)
    assert m.bag == tuple(
        sorted([(1, 0, 0), (2, 0, 1), (0, 0, 1), (0, 1, 0), (0, 1, 0), (0, 1, 0)], reverse=True)
    )
    with pytest.raises(ValueError):
        pair_to_monomial(((1,),), (1,), 1)
