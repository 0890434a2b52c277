"""Sparse multivariate polynomials over Q or Q(zeta_r), exact coefficients.

Terms are stored as {exponent tuple: coefficient} with zero coefficients never
kept.  The coefficient field is pluggable: RationalField (stdlib Fraction) or
cyclo.CycloField.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclo import CycloField, CycloNum


class RationalField:
    """Adapter presenting Fraction as the coefficient field."""

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into Q")

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PolyRing:
    def __init__(self, field, variables):
        self.field = field
        self.variables = tuple(variables)
        self._index = {v: i for i, v in enumerate(self.variables)}
        if len(self._index) != len(self.variables):
            raise ValueError("duplicate variable names")
        self._zero_exp = (0,) * len(self.variables)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.field == self.field
            and other.variables == self.variables
        )

    def __hash__(self):
        return hash((self.field, self.variables))

    def __repr__(self):
        return f"PolyRing({self.field!r}, {list(self.variables)})"

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c) -> "Poly":
        c = self.field.coerce(c)
        if not c:
            return Poly(self, {})
        return Poly(self, {self._zero_exp: c})

    def gen(self, name: str) -> "Poly":
        exp = [0] * len(self.variables)
        exp[self._index[name]] = 1
        return Poly(self, {tuple(exp): self.field.coerce(1)})

    def gens(self):
        return [self.gen(v) for v in self.variables]

    def from_terms(self, terms: dict) -> "Poly":
        out = {}
        for exp, c in terms.items():
            c = self.field.coerce(c)
            if c:
                out[tuple(exp)] = c
        return Poly(self, out)


class Poly:
    __slots__ = ("ring", "terms", "_h")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._h = None

    # -- coercion ---------------------------------------------------------

    def _co(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                return None
            return other
        if isinstance(other, (int, Fraction, CycloNum)):
            try:
                return self.ring.const(other)
            except TypeError:
                return None
        return None

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if self._h is None:
            # constants must hash like the scalars they compare equal to
            if self.is_constant():
                self._h = hash(self.constant_value())
            else:
                self._h = hash(self.sort_key())
        return self._h

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        """The polynomial as a field scalar; error unless it is constant."""
        if not self.terms:
            return self.ring.field.zero
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    # -- arithmetic -------------------------------------------------------

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Poly(self.ring, out)

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
        if isinstance(other, (int, Fraction, CycloNum)):
            c = self.ring.field.coerce(other)
            if not c:
                return self.ring.zero()
            return Poly(self.ring, {e: v * c for e, v in self.terms.items()})
        o = self._co(other)
        if o is None:
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                if s is None:
                    out[e] = c1 * c2
                else:
                    s = s + c1 * c2
                    if s:
                        out[e] = s
                    else:
                        del out[e]
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, CycloNum)):
            c = self.ring.field.coerce(other)
            return Poly(self.ring, {e: v / c for e, v in self.terms.items()})
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- structure --------------------------------------------------------

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        i = self.ring._index[name]
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def coefficient_of(self, exp) -> object:
        return self.terms.get(tuple(exp), self.ring.field.zero)

    def evaluate(self, point: dict):
        """Full evaluation; point must assign every variable a field scalar."""
        vals = [point[v] for v in self.ring.variables]
        total = self.ring.field.zero
        for e, c in self.terms.items():
            term = c
            for x, k in zip(vals, e):
                for _ in range(k):
                    term = term * x
            total = total + term
        return total

    def substitute_scalar(self, name: str, value) -> "Poly":
        """Replace one variable by a field scalar, staying in the same ring."""
        i = self.ring._index[name]
        value = self.ring.field.coerce(value)
        out = self.ring.zero()
        for e, c in self.terms.items():
            k = e[i]
            term = c
            for _ in range(k):
                term = term * value
            if term:
                e2 = e[:i] + (0,) + e[i + 1:]
                out = out + Poly(self.ring, {e2: term})
        return out

    def map_to(self, target: PolyRing, var_images: dict, coeff_map=None) -> "Poly":
        """Ring map: each variable goes to a polynomial of the target ring.

        coeff_map lifts coefficients into target's field (defaults to
        target.field.coerce).
        """
        if coeff_map is None:
            coeff_map = target.field.coerce
        images = [var_images[v] for v in self.ring.variables]
        powers: dict = {}
        out = target.zero()
        for e, c in self.terms.items():
            term = target.const(coeff_map(c))
            for idx, k in enumerate(e):
                if k:
                    p = powers.get((idx, k))
                    if p is None:
                        p = images[idx] ** k
                        powers[(idx, k)] = p
                    term = term * p
            out = out + term
        return out

    def sort_key(self):
        """Canonical hashable form (QQ coefficients only)."""
        return tuple(sorted(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        names = self.ring.variables
        bits = []
        for e, c in sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-x for x in t[0]))):
            mono = "*".join(
                (n if k == 1 else f"{n}^{k}") for n, k in zip(names, e) if k
            )
            cs = str(c)
            if mono:
                bits.append(f"({cs})*{mono}" if ("+" in cs or " " in cs) else (mono if cs == "1" else (f"-{mono}" if cs == "-1" else f"{cs}*{mono}")))
            else:
                bits.append(f"({cs})" if ("+" in cs or " " in cs) else cs)
        out = " + ".join(bits)
        return out.replace("+ -", "- ")


def elem_sym_table(k: int, values) -> list:
    """[e_0, e_1, .., e_k] evaluated at a finite list of ring elements.

    One pass of the e-recurrence; works over any commutative ring whose
    elements support +, * with each other and with int 0/1.  k > len(values)
    is a degree error.
    """
    values = list(values)
    if k < 0:
        raise ValueError("negative elementary symmetric index")
    if k > len(values):
        raise ValueError(
            f"e_{k} of {len(values)} values: index exceeds the number of values"
        )
    e = [1] + [0] * k
    seen = 0
    for v in values:
        seen += 1
        for j in range(min(k, seen), 0, -1):
            e[j] = e[j] + e[j - 1] * v
    return e


def elem_sym_eval(k: int, values):
    """e_k evaluated at a finite list of ring elements."""
    return elem_sym_table(k, values)[k]
