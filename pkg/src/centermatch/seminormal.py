"""Shared seminormal-form builder for adjacent transposition actions.

One local rule covers the Specht modules of S_n, the irreducibles of the
wreath product, and the cyclotomic Hecke modules; only the diagonal
coefficient policy differs.  For a standard (multi)tableau B and index i:

  * i, i+1 in the same component and row   ->  s_i p_B = p_B
  * same component and column              ->  s_i p_B = -p_B
  * otherwise B' = swap is standard and    ->  s_i p_B = d p_B + u p_B'

with d given by the policy and u = 1 on the canonical side (the tableau
whose position of i precedes that of i+1 in (component, row, column) lex
order) and u = 1 - d^2 on the other side.
"""

from __future__ import annotations

from .matrix import Matrix
from .partitions import apply_transposition, tableau_positions


def seminormal_matrices(tableaux, n: int, policy):
    """Matrices of s_1..s_{n-1} acting on the span of the given tableaux.

    policy(positions, i) -> the diagonal coefficient d for the crossing case;
    it receives the position map of the tableau and the index i and may
    return any exact scalar type (Fraction, rational function, ...).
    Columns of the returned matrices are indexed like `tableaux`.
    """
    tableaux = list(tableaux)
    index = {t: c for c, t in enumerate(tableaux)}
    posmaps = [tableau_positions(t) for t in tableaux]
    out = []
    for i in range(1, n):
        rows = [[0] * len(tableaux) for _ in tableaux]
        for col, t in enumerate(tableaux):
            pos = posmaps[col]
            li, ri, ci = pos[i]
            lj, rj, cj = pos[i + 1]
            if li == lj and ri == rj:
                rows[col][col] = 1
                continue
            if li == lj and ci == cj:
                rows[col][col] = -1
                continue
            d = policy(pos, i)
            swapped = apply_transposition(t, i)
            row2 = index[swapped]
            u = 1 if pos[i] < pos[i + 1] else 1 - d * d
            rows[col][col] = d
            rows[row2][col] = u
        out.append(Matrix(rows))
    return out
