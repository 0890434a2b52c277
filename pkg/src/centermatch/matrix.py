"""Dense exact matrices over any commutative ring, plus echelon utilities.

Matrix entries only need ring operations with each other and with plain ints
(0 acts as the universal zero, truthiness as the zero test).  Characteristic
polynomials come from the Faddeev-LeVerrier recursion, which stays exact over
any Q-algebra; the cofactor determinant is kept alongside as the small-size
oracle.
"""

from __future__ import annotations

from fractions import Fraction


class Matrix:
    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("ragged matrix")

    @staticmethod
    def zeros(n: int, m: int) -> "Matrix":
        return Matrix([[0] * m for _ in range(n)])

    @staticmethod
    def identity(n: int, one=1) -> "Matrix":
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = one
        return Matrix(rows)

    @staticmethod
    def diagonal(entries) -> "Matrix":
        entries = list(entries)
        n = len(entries)
        rows = [[0] * n for _ in range(n)]
        for i, e in enumerate(entries):
            rows[i][i] = e
        return Matrix(rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            return False
        for r1, r2 in zip(self.rows, other.rows):
            for a, b in zip(r1, r2):
                if not (a == b):
                    return False
        return True

    def is_zero(self) -> bool:
        return all(not e for r in self.rows for e in r)

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return Matrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return Matrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.rows])

    def scale(self, c) -> "Matrix":
        return Matrix([[e * c for e in r] for r in self.rows])

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        out = [[0] * other.ncols for _ in range(self.nrows)]
        orows = other.rows
        for i, row in enumerate(self.rows):
            acc = out[i]
            for k, a in enumerate(row):
                if not a:
                    continue
                for j, b in enumerate(orows[k]):
                    if b:
                        acc[j] = acc[j] + a * b
        return Matrix(out)

    def transpose(self) -> "Matrix":
        return Matrix([list(col) for col in zip(*self.rows)])

    def trace(self):
        t = 0
        for i in range(self.nrows):
            t = t + self.rows[i][i]
        return t

    def map(self, fn) -> "Matrix":
        return Matrix([[fn(e) for e in r] for r in self.rows])

    def commutator(self, other: "Matrix") -> "Matrix":
        return self @ other - other @ self

    def __repr__(self):
        return "Matrix(" + ", ".join(str(r) for r in self.rows) + ")"


def charpoly(m: Matrix):
    """det(t*I - m) by Faddeev-LeVerrier; coefficients descending in t.

    Returns [1, c1, ..., cn] with ck the coefficient of t^(n-k).  Exact over
    any commutative Q-algebra.
    """
    n = m.nrows
    if n != m.ncols:
        raise ValueError("characteristic polynomial of a non-square matrix")
    if n == 0:
        return [1]
    sample = m.rows[0][0]
    one = sample ** 0 if not isinstance(sample, int) else 1
    coeffs = [one]
    mk = m
    for k in range(1, n + 1):
        ck = mk.trace() * Fraction(-1, k)
        coeffs.append(ck)
        if k < n:
            mk = m @ (mk + Matrix.identity(n, one).scale(ck))
    return coeffs


def det_cofactor(m: Matrix):
    """Cofactor-expansion determinant.  Exponential; the small-size oracle."""
    n = m.nrows
    if n != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1

    def rec(rows, cols):
        if len(cols) == 1:
            return rows[0][cols[0]]
        total = 0
        for pos, j in enumerate(cols):
            a = rows[0][j]
            if not a:
                continue
            rest = cols[:pos] + cols[pos + 1:]
            sub = rec(rows[1:], rest)
            term = a * sub
            total = total + term if pos % 2 == 0 else total - term
        return total

    return rec(m.rows, list(range(n)))


def poly_from_roots(roots):
    """Coefficients (descending) of prod (t - root), matching charpoly."""
    out = [1]
    for r in roots:
        nxt = [0] * (len(out) + 1)
        for i, c in enumerate(out):
            nxt[i] = nxt[i] + c
            nxt[i + 1] = nxt[i + 1] - c * r
        out = nxt
    return out


class RowReducer:
    """Incremental row echelon over an exact field, sparse dict rows.

    add_row returns True when the row was independent of everything seen so
    far (a new pivot was created).  Rows are dicts {column key: value}; column
    keys must be orderable only through the explicit column order given.
    """

    def __init__(self, column_order=None):
        # column_order: optional list fixing pivot preference; otherwise the
        # natural sort of the keys present in each row is used.
        self._order = None
        if column_order is not None:
            self._order = {c: i for i, c in enumerate(column_order)}
        self.pivots: dict = {}

    def _first_col(self, row: dict):
        if self._order is not None:
            return min(row, key=lambda c: self._order[c])
        return min(row)

    def reduce(self, row: dict) -> dict:
        """Residual of row modulo the stored pivots (row is not consumed)."""
        row = {c: v for c, v in row.items() if v}
        while row:
            c = self._first_col(row)
            piv = self.pivots.get(c)
            if piv is None:
                return row
            factor = row[c]
            for pc, pv in piv.items():
                s = row.get(pc, 0) - factor * pv
                if s:
                    row[pc] = s
                else:
                    row.pop(pc, None)
        return row

    def add_row(self, row: dict) -> bool:
        row = self.reduce(row)
        if not row:
            return False
        c = self._first_col(row)
        lead = row[c]
        self.pivots[c] = {k: v / lead for k, v in row.items()}
        return True

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def in_span(self, row: dict) -> bool:
        return not self.reduce(row)
