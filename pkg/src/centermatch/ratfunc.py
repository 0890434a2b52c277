"""Rational functions with factored denominators over a rational PolyRing.

Denominators are kept as sorted tuples of monic irreducible (here: linear)
factors, never expanded; sums use factor-wise least common denominators and
products cancel by exact division attempts against each stored factor.  With
monic factors the reduced (num, factors) pair is a canonical form, so
equality is structural.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Poly, PolyRing


def _lex_leading(p: Poly):
    exp = max(p.terms)
    return exp, p.terms[exp]


def make_monic(p: Poly):
    """(monic multiple of p, leading coefficient) wrt lex-max exponent."""
    if p.is_zero():
        raise ZeroDivisionError("zero cannot be a denominator factor")
    _, lead = _lex_leading(p)
    return p / lead, lead


def divide_exact(p: Poly, d: Poly):
    """Quotient p/d if the division is exact, else None."""
    if p.is_zero():
        return p
    if p.total_degree() < d.total_degree():
        return None
    dexp, dlead = _lex_leading(d)
    q = p.ring.zero()
    rem = p
    while rem.terms:
        exp = max(rem.terms)
        diff = tuple(a - b for a, b in zip(exp, dexp))
        if any(x < 0 for x in diff):
            return None
        c = rem.terms[exp] / dlead
        t = Poly(p.ring, {diff: c})
        q = q + t
        rem = rem - t * d
    return q


def _cancel_against(num: Poly, factors):
    """Divide num by each listed factor that divides it exactly.

    Complete for irreducible factors: an irreducible f divides a product iff
    it divides one of the sides, so per-side cancellation suffices in
    __mul__.
    """
    remaining = []
    for f in factors:
        q = divide_exact(num, f)
        if q is not None:
            num = q
        else:
            remaining.append(f)
    return num, remaining


class RatFunc:
    __slots__ = ("ring", "num", "den")

    def __init__(self, ring: PolyRing, num: Poly, den: tuple = ()):
        self.ring = ring
        self.num = num
        self.den = den  # sorted tuple of monic factors, after reduction

    @staticmethod
    def build(num: Poly, factors=()) -> "RatFunc":
        """num / prod(factors); factors get monic-normalized and cancelled.

        Factors must be linear: cancellation relies on irreducibility.
        """
        ring = num.ring
        monics = []
        for f in factors:
            if f.total_degree() != 1:
                raise ValueError("denominator factors must be linear")
            mf, lead = make_monic(f)
            monics.append(mf)
            num = num / lead
        return RatFunc(ring, num, ())._with_extra_den(monics)

    def _with_extra_den(self, monics) -> "RatFunc":
        num = self.num
        den = list(self.den) + list(monics)
        if num.is_zero():
            return RatFunc(self.ring, num, ())
        # cancel factors dividing the numerator, with multiplicity
        remaining = []
        for f in sorted(den, key=lambda p: p.sort_key()):
            q = divide_exact(num, f)
            if q is not None:
                num = q
            else:
                remaining.append(f)
        return RatFunc(self.ring, num, tuple(remaining))

    def _co(self, other):
        if isinstance(other, RatFunc):
            return other if other.ring == self.ring else None
        if isinstance(other, Poly):
            if other.ring != self.ring:
                return None
            return RatFunc(self.ring, other, ())
        if isinstance(other, (int, Fraction)):
            return RatFunc(self.ring, self.ring.const(other), ())
        return None

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __neg__(self):
        return RatFunc(self.ring, -self.num, self.den)

    def __add__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        if not o:
            return self
        if not self:
            return o
        from collections import Counter

        cl, cr = Counter(self.den), Counter(o.den)
        union = cl | cr
        left = self.num
        for f, k in (union - cl).items():
            for _ in range(k):
                left = left * f
        right = o.num
        for f, k in (union - cr).items():
            for _ in range(k):
                right = right * f
        num = left + right
        den = tuple(sorted(union.elements(), key=lambda p: p.sort_key()))
        return RatFunc(self.ring, num, ())._with_extra_den(den) if num else RatFunc(
            self.ring, num, ()
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return RatFunc(self.ring, self.ring.zero(), ())
            return RatFunc(self.ring, self.num * other, self.den)
        o = self._co(other)
        if o is None:
            return NotImplemented
        if not self or not o:
            return RatFunc(self.ring, self.ring.zero(), ())
        # each side is already reduced against its own denominator, so only
        # cross cancellations can happen, factor by factor
        n1, d2 = _cancel_against(self.num, o.den)
        n2, d1 = _cancel_against(o.num, self.den)
        den = tuple(sorted(d1 + d2, key=lambda p: p.sort_key()))
        return RatFunc(self.ring, n1 * n2, den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFunc(self.ring, self.num / other, self.den)
        return NotImplemented

    def is_polynomial(self) -> bool:
        return not self.den

    def as_poly(self) -> Poly:
        if self.den:
            raise ValueError("rational function has a nontrivial denominator")
        return self.num

    def __repr__(self):
        if not self.den:
            return repr(self.num)
        dens = " * ".join(f"({f!r})" for f in self.den)
        return f"({self.num!r}) / ({dens})"
