"""Matrix kernel: charpoly against the cofactor oracle, echelon bookkeeping."""

import random
from fractions import Fraction

from centermatch.matrix import (
    Matrix,
    RowReducer,
    charpoly,
    det_cofactor,
    poly_from_roots,
)
from centermatch.poly import QQ, PolyRing


def _rand_matrix(n, rng, lo=-5, hi=5):
    return Matrix([[Fraction(rng.randint(lo, hi)) for _ in range(n)] for _ in range(n)])


def test_charpoly_constant_term_is_det_oracle():
    rng = random.Random(11)
    for n in (1, 2, 3, 4):
        for _ in range(30):
            m = _rand_matrix(n, rng)
            coeffs = charpoly(m)
            det = det_cofactor(m)
            # det(tI - M) at t=0 is (-1)^n det(M)
            assert coeffs[-1] == (-1) ** n * det


def test_charpoly_full_expansion_oracle_via_polynomial_entries():
    # charpoly computed numerically must match det(tI - M) expanded symbolically
    rng = random.Random(12)
    S = PolyRing(QQ, ("t",))
    t = S.gen("t")
    for n in (2, 3, 4):
        for _ in range(10):
            m = _rand_matrix(n, rng)
            tim = Matrix.identity(n).scale(t) - m.map(S.const)
            sym = det_cofactor(tim)
            coeffs = charpoly(m)
            rebuilt = S.zero()
            for k, c in enumerate(coeffs):
                rebuilt = rebuilt + S.const(c) * t ** (n - k)
            assert rebuilt == sym


def test_charpoly_of_diagonal_matches_roots():
    roots = [Fraction(x) for x in (0, 1, 2, -1, 3)]
    m = Matrix.diagonal(roots)
    assert charpoly(m) == poly_from_roots(roots)


def test_poly_from_roots_expansion():
    # (t-1)(t+2) = t^2 + t - 2
    assert poly_from_roots([1, -2]) == [1, 1, -2]
    assert poly_from_roots([]) == [1]


def test_cayley_hamilton_spot():
    rng = random.Random(13)
    for _ in range(12):
        m = _rand_matrix(3, rng)
        coeffs = charpoly(m)
        acc = Matrix.zeros(3, 3)
        p = Matrix.identity(3)
        # evaluate with Horner from the leading coefficient
        for c in coeffs:
            acc = acc @ m + Matrix.identity(3).scale(c)
        assert acc.is_zero()
        assert p is not None


def test_matmul_zero_skip_correctness():
    rng = random.Random(14)
    for _ in range(25):
        a = _rand_matrix(4, rng, -2, 2)
        b = _rand_matrix(4, rng, -2, 2)
        ref = [
            [sum(a[(i, k)] * b[(k, j)] for k in range(4)) for j in range(4)]
            for i in range(4)
        ]
        assert (a @ b) == Matrix(ref)


def test_commutator_antisymmetry():
    rng = random.Random(15)
    a = _rand_matrix(3, rng)
    b = _rand_matrix(3, rng)
    assert a.commutator(b) == -(b.commutator(a))


def test_row_reducer_rank_against_dense_oracle():
    rng = random.Random(16)
    for _ in range(40):
        nrows, ncols = rng.randint(1, 6), rng.randint(1, 5)
        rows = [
            [Fraction(rng.randint(-3, 3)) for _ in range(ncols)] for _ in range(nrows)
        ]
        red = RowReducer(column_order=list(range(ncols)))
        for row in rows:
            red.add_row({j: v for j, v in enumerate(row) if v})
        # oracle: classic dense gaussian elimination
        dense = [list(r) for r in rows]
        rank = 0
        for col in range(ncols):
            piv = next((i for i in range(rank, nrows) if dense[i][col]), None)
            if piv is None:
                continue
            dense[rank], dense[piv] = dense[piv], dense[rank]
            for i in range(nrows):
                if i != rank and dense[i][col]:
                    f = dense[i][col] / dense[rank][col]
                    dense[i] = [x - f * y for x, y in zip(dense[i], dense[rank])]
            rank += 1
        assert red.rank == rank


def test_row_reducer_span_membership():
    red = RowReducer()
    red.add_row({0: Fraction(1), 1: Fraction(2)})
    red.add_row({1: Fraction(1), 2: Fraction(1)})
    assert red.in_span({0: Fraction(2), 1: Fraction(5), 2: Fraction(1)})
    assert not red.in_span({2: Fraction(1)})
    # duplicate rows add nothing
    assert not red.add_row({0: Fraction(3), 1: Fraction(6)})
