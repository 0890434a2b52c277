"""Torus-fixed points of the Calogero-Moser space as explicit matrix pairs.

For a partition lam of n the pair (X, Y) consists of X = direct sum of the
shift matrices D_m over the principal hooks of lam and Y with prescribed
diagonal blocks Y(m, k); the off-diagonal blocks are solved exactly from the
rank-one condition [Y, X] + Id = (rank 1).  Everything over Q via Fraction.

The product Y(m,k) D_m is exactly diagonal with entries
(0, 1, ..., k-1, -(m-k), ..., -1): the contents of the hook read along its
row then its column.  The commutator identity for one block is
[Y(m,k), D_m] = m E_{kk} - Id.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .matrix import Matrix, RowReducer, charpoly, poly_from_roots
from .partitions import contents, frobenius_hooks


def shift_matrix(m: int) -> Matrix:
    """D_m = sum of E_{p,p+1}, the regular nilpotent upper shift."""
    rows = [[0] * m for _ in range(m)]
    for p in range(m - 1):
        rows[p][p + 1] = Fraction(1)
    return Matrix(rows)


def wilson_block(m: int, k: int) -> Matrix:
    """Y(m, k): subdiagonal 1, 2, ..., k-1, -(m-k), ..., -2, -1."""
    if not 1 <= k <= m:
        raise ValueError("need 1 <= k <= m")
    sub = list(range(1, k)) + list(range(-(m - k), 0))
    rows = [[0] * m for _ in range(m)]
    for p, v in enumerate(sub):
        rows[p + 1][p] = Fraction(v)
    return Matrix(rows)


def _solve_block(ni: int, nj: int, ki: int, kj: int):
    """Solve Y D_{nj} - D_{ni} Y = ni * E_{ki,kj} on a single diagonal.

    Tries unknown supports {p - q = delta} in order of distance from
    delta0 = ki - kj, accepting the first diagonal on which the linear
    system is consistent with a unique solution.  Returns (block, delta).
    """
    delta0 = ki - kj
    deltas = sorted(
        range(-(nj - 1), ni), key=lambda d: (abs(d - delta0), d)
    )
    for delta in deltas:
        support = [
            (p, q)
            for p in range(1, ni + 1)
            for q in range(1, nj + 1)
            if p - q == delta
        ]
        if not support:
            continue
        index = {cell: t for t, cell in enumerate(support)}
        rows = []
        rhs = []
        consistent = True
        # equation at result position (p, q): Y[p, q-1] - Y[p+1, q] = rhs
        for p in range(1, ni + 1):
            for q in range(1, nj + 1):
                coeffs = {}
                if q - 1 >= 1 and (p, q - 1) in index:
                    coeffs[index[(p, q - 1)]] = Fraction(1)
                if p + 1 <= ni and (p + 1, q) in index:
                    coeffs[index[(p + 1, q)]] = (
                        coeffs.get(index[(p + 1, q)], Fraction(0)) - 1
                    )
                b = Fraction(ni) if (p, q) == (ki, kj) else Fraction(0)
                rows.append(coeffs)
                rhs.append(b)
        sol = _gauss_solve(rows, rhs, len(support))
        if sol is None:
            continue
        values, unique = sol
        if not unique:
            continue
        block = [[Fraction(0)] * nj for _ in range(ni)]
        for (p, q), t in index.items():
            block[p - 1][q - 1] = values[t]
        return Matrix(block), delta
    raise ArithmeticError(
        f"no single-diagonal solution for block ({ni},{nj},{ki},{kj})"
    )


def _gauss_solve(rows, rhs, nunknowns):
    """Exact Gaussian elimination; returns (solution, unique) or None."""
    aug = [dict(r) for r in rows]
    b = list(rhs)
    pivots = {}  # unknown -> row position
    used = []
    for ri in range(len(aug)):
        row, val = aug[ri], b[ri]
        # eliminate known pivots
        for col, pos in pivots.items():
            if col in row:
                f = row.pop(col)
                prow, pval = used[pos]
                for c2, v2 in prow.items():
                    if c2 == col:
                        continue
                    nv = row.get(c2, Fraction(0)) - f * v2
                    if nv:
                        row[c2] = nv
                    else:
                        row.pop(c2, None)
                val -= f * pval
        if row:
            col = min(row)
            lead = row[col]
            row = {c: v / lead for c, v in row.items()}
            val = val / lead
            pivots[col] = len(used)
            used.append((row, val))
        elif val:
            return None  # inconsistent
    # back substitution; free unknowns set to 0 and flagged as non-unique
    unique = len(pivots) == nunknowns
    values = [Fraction(0)] * nunknowns
    for col in sorted(pivots, reverse=True):
        prow, pval = used[pivots[col]]
        s = pval
        for c2, v2 in prow.items():
            if c2 != col:
                s -= v2 * values[c2]
        values[col] = s
    return values, unique


@dataclass
class CMPair:
    """A fixed-point matrix pair with its assembly metadata."""

    lam: tuple
    x: Matrix
    y: Matrix
    hooks: list
    relaxed_supports: dict = field(default_factory=dict)

    @property
    def size(self) -> int:
        return self.x.nrows


def cm_matrices(lam: tuple) -> CMPair:
    """Assemble (X, Y) for a partition; exact, with support relaxation flags."""
    if not lam:
        raise ValueError("partition must be nonempty")
    hooks = frobenius_hooks(lam)
    sizes = [m for (m, _) in hooks]
    n = sum(sizes)
    offs = [0]
    for m in sizes:
        offs.append(offs[-1] + m)

    xrows = [[Fraction(0)] * n for _ in range(n)]
    yrows = [[Fraction(0)] * n for _ in range(n)]

    def paste(target, block, oi, oj):
        for a in range(block.nrows):
            for bcol in range(block.ncols):
                v = block[(a, bcol)]
                if v:
                    target[oi + a][oj + bcol] = v

    relaxed = {}
    for i, (m, k) in enumerate(hooks):
        paste(xrows, shift_matrix(m), offs[i], offs[i])
        paste(yrows, wilson_block(m, k), offs[i], offs[i])
    for i, (ni, ki) in enumerate(hooks):
        for j, (nj, kj) in enumerate(hooks):
            if i == j:
                continue
            block, delta = _solve_block(ni, nj, ki, kj)
            paste(yrows, block, offs[i], offs[j])
            if delta != ki - kj:
                relaxed[(i, j)] = delta
    return CMPair(lam=lam, x=Matrix(xrows), y=Matrix(yrows), hooks=hooks,
                  relaxed_supports=relaxed)


def cm_rank_one_check(pair: CMPair) -> bool:
    """[Y, X] + Id has rank exactly 1."""
    n = pair.size
    m = pair.y.commutator(pair.x) + Matrix.identity(n, Fraction(1))
    red = RowReducer(column_order=list(range(n)))
    for row in m.rows:
        red.add_row({j: v for j, v in enumerate(row) if v})
    return red.rank == 1


def cm_spectrum_check(pair: CMPair) -> bool:
    """charpoly(Y X) equals prod over boxes (t - content)."""
    got = charpoly(pair.y @ pair.x)
    want = poly_from_roots([Fraction(c) for c in contents(pair.lam)])
    return [Fraction(c) for c in got] == [Fraction(c) for c in want]


def block_spectrum_factorization(pair: CMPair):
    """charpoly(YX) vs the product of per-hook diagonal block charpolys."""
    full = charpoly(pair.y @ pair.x)
    prod = [Fraction(1)]
    for m, k in pair.hooks:
        blk = charpoly(wilson_block(m, k) @ shift_matrix(m))
        out = [Fraction(0)] * (len(prod) + len(blk) - 1)
        for a, ca in enumerate(prod):
            for b, cb in enumerate(blk):
                out[a + b] += ca * Fraction(cb)
        prod = out
    return [Fraction(c) for c in full], prod
