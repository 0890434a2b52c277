"""Exact arithmetic in cyclotomic fields Q(zeta_r), power basis representation.

An element is a vector of rationals of length phi(r) giving its coordinates in
the basis 1, eta, ..., eta^(phi(r)-1) modulo the r-th cyclotomic polynomial.
Everything is exact; no floats anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def _poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # Exact division of integer coefficient lists (ascending order), den monic.
    num = list(num)
    dn = len(den) - 1
    q = [0] * (len(num) - dn)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + dn]
        q[i] = c
        if c:
            for j in range(dn + 1):
                num[i + j] -= c * den[j]
    if any(num[:dn]):
        raise ArithmeticError("division was not exact")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(r: int) -> tuple[int, ...]:
    """Coefficients of the r-th cyclotomic polynomial, ascending, monic.

    Computed by exact division of x^r - 1 by the lower cyclotomic factors.
    """
    if r < 1:
        raise ValueError("r must be a positive integer")
    poly = [-1] + [0] * (r - 1) + [1]
    for d in range(1, r):
        if r % d == 0:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


class CycloField:
    """The field Q(zeta_r).  Instances are cached; compare by r."""

    def __init__(self, r: int):
        self.r = r
        self.modulus = cyclotomic_polynomial(r)
        self.degree = len(self.modulus) - 1
        # reduction table: coordinates of x^k for k >= degree, grown on demand
        self._top = [Fraction(-c) for c in self.modulus[:-1]]
        self._pow_table: list[tuple] = [tuple(self._top)]
        self._eta_cache: dict[int, "CycloNum"] = {}

    def _row(self, k: int) -> tuple:
        # coordinates of x^(degree + k)
        while len(self._pow_table) <= k:
            cur = list(self._pow_table[-1])
            spill = cur[-1]
            cur = [Fraction(0)] + cur[:-1]
            if spill:
                cur = [a + spill * b for a, b in zip(cur, self._top)]
            self._pow_table.append(tuple(cur))
        return self._pow_table[k]

    def __repr__(self):
        return f"CycloField({self.r})"

    def __eq__(self, other):
        return isinstance(other, CycloField) and other.r == self.r

    def __hash__(self):
        return hash(("CycloField", self.r))

    @property
    def zero(self) -> "CycloNum":
        return CycloNum(self, (Fraction(0),) * self.degree)

    @property
    def one(self) -> "CycloNum":
        return self.embed(1)

    def embed(self, q) -> "CycloNum":
        coords = [Fraction(0)] * self.degree
        coords[0] = Fraction(q)
        return CycloNum(self, tuple(coords))

    def coerce(self, x) -> "CycloNum":
        if isinstance(x, CycloNum):
            if x.field.r != self.r:
                raise TypeError("mixing distinct cyclotomic fields")
            return x
        if isinstance(x, (int, Fraction)):
            return self.embed(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into {self!r}")

    def eta(self, power: int = 1) -> "CycloNum":
        """The root of unity eta^power, exponent taken mod r."""
        k = power % self.r
        hit = self._eta_cache.get(k)
        if hit is not None:
            return hit
        coords = [Fraction(0)] * max(self.degree, k + 1)
        coords[k] = Fraction(1)
        val = self._reduce(coords)
        self._eta_cache[k] = val
        return val

    def from_coords(self, coords) -> "CycloNum":
        coords = [Fraction(c) for c in coords]
        if len(coords) != self.degree:
            raise ValueError("wrong coordinate length")
        return CycloNum(self, tuple(coords))

    def _reduce(self, coords: list[Fraction]) -> "CycloNum":
        # coords may be longer than degree; fold the tail through the table
        d = self.degree
        out = [Fraction(c) for c in coords[:d]]
        out += [Fraction(0)] * (d - len(out))
        for k in range(d, len(coords)):
            c = coords[k]
            if c:
                row = self._row(k - d)
                for j in range(d):
                    out[j] += c * row[j]
        return CycloNum(self, tuple(out))


@lru_cache(maxsize=None)
def cyclo_field(r: int) -> CycloField:
    return CycloField(r)


class CycloNum:
    """Element of Q(zeta_r) in the power basis.  Immutable."""

    __slots__ = ("field", "coords")

    def __init__(self, field: CycloField, coords: tuple):
        self.field = field
        self.coords = coords

    def _co(self, other):
        if isinstance(other, CycloNum):
            if other.field.r != self.field.r:
                return None
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.embed(other)
        return None

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self.coords == o.coords

    def __neg__(self):
        return CycloNum(self.field, tuple(-c for c in self.coords))

    def __add__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return CycloNum(self.field, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return CycloNum(self.field, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloNum(self.field, tuple(c * other for c in self.coords))
        o = self._co(other)
        if o is None:
            return NotImplemented
        d = self.field.degree
        prod = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(o.coords):
                    if b:
                        prod[i + j] += a * b
        return self.field._reduce(prod)

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        if not self:
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        # extended Euclid on (self as poly, modulus) over Q
        mod = [Fraction(c) for c in self.field.modulus]
        a = list(self.coords)
        r0, r1 = mod, [Fraction(c) for c in a]
        s0, s1 = [Fraction(0)], [Fraction(1)]

        def degree(p):
            for k in range(len(p) - 1, -1, -1):
                if p[k]:
                    return k
            return -1

        while True:
            d1 = degree(r1)
            if d1 <= 0:
                break
            d0 = degree(r0)
            if d0 < d1:
                r0, r1, s0, s1 = r1, r0, s1, s0
                continue
            lead = r0[d0] / r1[d1]
            shift = d0 - d1
            for j in range(d1 + 1):
                r0[j + shift] -= lead * r1[j]
            s0 = s0 + [Fraction(0)] * (len(s1) + shift - len(s0))
            for j in range(len(s1)):
                s0[j + shift] -= lead * s1[j]
            if degree(r0) < degree(r1):
                r0, r1, s0, s1 = r1, r0, s1, s0
        c = r1[degree(r1)]
        if degree(r1) != 0:
            raise ArithmeticError("modulus not coprime to element")
        inv_coords = [x / c for x in s1]
        return self.field._reduce(inv_coords)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError
            return CycloNum(self.field, tuple(c / other for c in self.coords))
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def rational_part(self) -> Fraction:
        """The element as a rational number; error if it is not one."""
        if any(self.coords[1:]):
            raise ValueError("element is not rational")
        return self.coords[0]

    def __repr__(self):
        if not self:
            return "0"
        bits = []
        for k, c in enumerate(self.coords):
            if not c:
                continue
            if k == 0:
                bits.append(str(c))
            elif k == 1:
                bits.append(f"{c}*eta" if c != 1 else "eta")
            else:
                bits.append(f"{c}*eta^{k}" if c != 1 else f"eta^{k}")
        return " + ".join(bits)
