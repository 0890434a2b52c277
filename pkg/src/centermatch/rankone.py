"""Rank-one rational Cherednik algebra as a rewriting system.

Basis monomials x^a y^b eps^c with 0 <= c < r, coefficients polynomial in
hbar and c_1..c_{r-1} over Q(zeta_r).  Rewrite rules:

    y x   ->  x y + hbar + c(eps),      c(q) = sum_l c_l q^l
    eps x ->  eta   x eps
    eps y ->  eta^{-1} y eps
    eps^r -> 1

A memoized normal-form engine powers exact products; a deliberately naive
word rewriter replays the rules one redex at a time so that confluence can
be tested against the engine on random words.

On top of the engine: the spherical elements e, b = e u e, r_{+-} and the
quartet of relations they satisfy, with the framing values a_i substituted
by p(eta^{i-1}) - (i-1) hbar / r.  Both orientations (swapping the roles of
the two spherical shift operators) are computed and reported.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .cyclo import CycloNum, cyclo_field
from .poly import Poly, PolyRing
from .wreath import p_value


@lru_cache(maxsize=None)
def weyl_ring(r: int) -> PolyRing:
    """Q(zeta_r)[hbar, c_1..c_{r-1}]."""
    return PolyRing(
        cyclo_field(r), ("hbar",) + tuple(f"c{l}" for l in range(1, r))
    )


@lru_cache(maxsize=None)
def _nf1(r: int, b: int) -> tuple:
    """Normal form of y^b x, as a tuple of ((a, b, c), coeff) pairs."""
    ring = weyl_ring(r)
    field = cyclo_field(r)
    if b == 0:
        return (((1, 0, 0), ring.one()),)
    out: dict = {}
    # y^b x = y^{b-1} (x y + hbar + c(eps))
    for (aa, bb, cc), coeff in _nf1(r, b - 1):
        key = (aa, bb + 1, cc)
        add = coeff * field.eta(-cc)
        _acc(out, key, add)
    _acc(out, (0, b - 1, 0), ring.gen("hbar"))
    for l in range(1, r):
        _acc(out, (0, b - 1, l % r), ring.gen(f"c{l}"))
    return tuple(sorted(out.items()))


def _acc(store: dict, key: tuple, value) -> None:
    s = store.get(key)
    s = value if s is None else s + value
    if s:
        store[key] = s
    else:
        store.pop(key, None)


@lru_cache(maxsize=None)
def _nf_yx(r: int, b: int, a2: int) -> tuple:
    """Normal form of y^b x^{a2}."""
    ring = weyl_ring(r)
    if a2 == 0 or b == 0:
        return (((a2, b, 0), ring.one()),)
    field = cyclo_field(r)
    out: dict = {}
    for (aa, bb, cc), coeff in _nf_yx(r, b, a2 - 1):
        # multiply x on the right: move it through eps^cc, then through y^bb
        scale = coeff * field.eta(cc)
        for (a3, b3, c3), inner in _nf1(r, bb):
            _acc(out, (aa + a3, b3, (c3 + cc) % r), scale * inner)
    return tuple(sorted(out.items()))


class RankOneElement:
    __slots__ = ("r", "terms")

    def __init__(self, r: int, terms: dict):
        self.r = r
        self.terms = terms

    @staticmethod
    def zero(r: int) -> "RankOneElement":
        return RankOneElement(r, {})

    @staticmethod
    def monomial(r: int, a: int, b: int, c: int, coeff=1) -> "RankOneElement":
        ring = weyl_ring(r)
        co = coeff if isinstance(coeff, Poly) else ring.const(coeff)
        if not co:
            return RankOneElement(r, {})
        return RankOneElement(r, {(a, b, c % r): co})

    @staticmethod
    def one(r: int) -> "RankOneElement":
        return RankOneElement.monomial(r, 0, 0, 0)

    def _co(self, other):
        if isinstance(other, RankOneElement):
            return other if other.r == self.r else None
        if isinstance(other, (int, Fraction, CycloNum, Poly)):
            try:
                return RankOneElement.monomial(self.r, 0, 0, 0, other)
            except TypeError:
                return None
        return None

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __neg__(self):
        return RankOneElement(self.r, {k: -v for k, v in self.terms.items()})

    def __add__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in o.terms.items():
            _acc(out, k, v)
        return RankOneElement(self.r, out)

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

    def scaled(self, coeff) -> "RankOneElement":
        ring = weyl_ring(self.r)
        co = coeff if isinstance(coeff, Poly) else ring.const(coeff)
        if not co:
            return RankOneElement.zero(self.r)
        out = {}
        for k, v in self.terms.items():
            w = v * co
            if w:
                out[k] = w
        return RankOneElement(self.r, out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloNum, Poly)):
            return self.scaled(other)
        o = self._co(other)
        if o is None:
            return NotImplemented
        r = self.r
        field = cyclo_field(r)
        out: dict = {}
        for (a1, b1, c1), v1 in self.terms.items():
            for (a2, b2, c2), v2 in o.terms.items():
                # eps^c1 through x^a2 and then through y^b2
                scale = v1 * v2 * field.eta(c1 * (a2 - b2))
                for (aa, bb, cc), inner in _nf_yx(r, b1, a2):
                    key = (
                        a1 + aa,
                        bb + b2,
                        (cc + c1 + c2) % r,
                    )
                    co = scale * inner * field.eta(-cc * b2)
                    _acc(out, key, co)
        return RankOneElement(r, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CycloNum, Poly)):
            return self.scaled(other)
        o = self._co(other)
        if o is None:
            return NotImplemented
        return o * self

    def __pow__(self, k: int) -> "RankOneElement":
        if k < 0:
            raise ValueError("negative powers are not defined here")
        out = RankOneElement.one(self.r)
        for _ in range(k):
            out = out * self
        return out

    def substitute_hbar(self, value) -> "RankOneElement":
        out = {}
        for k, v in self.terms.items():
            w = v.substitute_scalar("hbar", value)
            if w:
                out[k] = w
        return RankOneElement(self.r, out)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (a, b, c), v in sorted(self.terms.items()):
            mono = "*".join(
                ([f"x^{a}"] if a else [])
                + ([f"y^{b}"] if b else [])
                + ([f"eps^{c}"] if c else [])
            )
            bits.append(f"({v!r})*{mono}" if mono else f"({v!r})")
        return " + ".join(bits)


def x_elem(r: int) -> RankOneElement:
    return RankOneElement.monomial(r, 1, 0, 0)


def y_elem(r: int) -> RankOneElement:
    return RankOneElement.monomial(r, 0, 1, 0)


def eps_elem(r: int, power: int = 1) -> RankOneElement:
    return RankOneElement.monomial(r, 0, 0, power)


def symmetrizer(r: int) -> RankOneElement:
    """e = (1/r) sum_p eps^p."""
    out = RankOneElement.zero(r)
    for p in range(r):
        out = out + RankOneElement.monomial(r, 0, 0, p, Fraction(1, r))
    return out


def dunkl_u(r: int) -> RankOneElement:
    """u = (1/r)(x y + hbar) + p(eta^{-1} eps)."""
    ring = weyl_ring(r)
    field = cyclo_field(r)
    out = RankOneElement.monomial(r, 1, 1, 0, Fraction(1, r))
    out = out + RankOneElement.monomial(
        r, 0, 0, 0, ring.gen("hbar") * Fraction(1, r)
    )
    for l in range(1, r):
        coeff = (
            ring.gen(f"c{l}")
            * ((field.eta(-l) - field.one).inverse() / r)
            * field.eta(-l)
        )
        out = out + RankOneElement.monomial(r, 0, 0, l, coeff)
    return out


def framing_value(r: int, i: int) -> Poly:
    """a_i = p(eta^{i-1}) - (i-1) hbar / r, as a coefficient polynomial."""
    ring = weyl_ring(r)
    return p_value(ring, r, i - 1) - ring.gen("hbar") * Fraction(i - 1, r)


def verify_rank_one_coulomb(r: int) -> dict:
    """Check the four spherical relations; report which orientation holds."""
    ring = weyl_ring(r)
    hbar = ring.gen("hbar")
    e = symmetrizer(r)
    u = dunkl_u(r)
    b = e * u * e
    r_minus = e * (x_elem(r) ** r) * e
    r_plus = (e * (y_elem(r) ** r) * e).scaled(Fraction(1, r ** r))

    prod_plain = e
    prod_shift = e
    for i in range(1, r + 1):
        ai = framing_value(r, i)
        prod_plain = prod_plain * (b - e.scaled(ai))
        prod_shift = prod_shift * (b - e.scaled(ai + hbar))

    def quartet(first, second):
        return {
            "product_up": first * second == prod_plain,
            "product_down": second * first == prod_shift,
            "commutator_up": first * b - b * first == first.scaled(hbar),
            "commutator_down": second * b - b * second == second.scaled(-hbar),
        }

    stated = quartet(r_plus, r_minus)
    swapped = quartet(r_minus, r_plus)
    orientation = None
    if all(stated.values()):
        orientation = "stated"
    elif all(swapped.values()):
        orientation = "swapped"

    commuted = r_plus * r_minus - r_minus * r_plus
    hbar_zero = commuted.substitute_hbar(0).is_zero()

    return {
        "r": r,
        "stated": stated,
        "swapped": swapped,
        "orientation": orientation,
        "hbar_zero_commutative": hbar_zero,
    }


# -- naive single-step rewriter (confluence oracle) ----------------------------


def _redexes(word: tuple, r: int) -> list:
    out = []
    for i in range(len(word) - 1):
        pair = word[i], word[i + 1]
        if pair in (("y", "x"), ("E", "x"), ("E", "y")):
            out.append((i, pair))
    run = 0
    for i, sym in enumerate(word):
        run = run + 1 if sym == "E" else 0
        if run == r:
            out.append((i - r + 1, ("E",) * r))
            run = 0
    return out


def _apply_rule(word: tuple, pos: int, pat: tuple, r: int):
    ring = weyl_ring(r)
    field = cyclo_field(r)
    head, tail = word[:pos], word[pos + len(pat):]
    if pat == ("y", "x"):
        out = [(head + ("x", "y") + tail, ring.one()), (head + tail, ring.gen("hbar"))]
        for l in range(1, r):
            out.append((head + ("E",) * l + tail, ring.gen(f"c{l}")))
        return out
    if pat == ("E", "x"):
        return [(head + ("x", "E") + tail, ring.const(field.eta(1)))]
    if pat == ("E", "y"):
        return [(head + ("y", "E") + tail, ring.const(field.eta(-1)))]
    return [(head + tail, ring.one())]


def naive_normal_form(word, r: int, strategy: str = "left") -> RankOneElement:
    """Rewrite one redex at a time until none remain; collect the element.

    strategy 'left' always reduces the leftmost redex of the smallest
    pending word, 'right' the rightmost redex of the largest pending word.
    Both must agree for the system to be confluent.
    """
    state: dict = {tuple(word): weyl_ring(r).one()}
    while True:
        target = None
        for w in sorted(state, reverse=(strategy == "right")):
            reds = _redexes(w, r)
            if reds:
                target = (w, reds[0] if strategy == "left" else reds[-1])
                break
        if target is None:
            break
        w, (pos, pat) = target
        coeff = state.pop(w)
        for new_word, factor in _apply_rule(w, pos, pat, r):
            s = state.get(new_word)
            add = coeff * factor
            s = add if s is None else s + add
            if s:
                state[new_word] = s
            else:
                state.pop(new_word, None)
    out = RankOneElement.zero(r)
    for w, coeff in state.items():
        a = sum(1 for s in w if s == "x")
        b = sum(1 for s in w if s == "y")
        c = sum(1 for s in w if s == "E")
        assert c < r and w == ("x",) * a + ("y",) * b + ("E",) * c
        out = out + RankOneElement.monomial(r, a, b, c, coeff)
    return out


def engine_product(word, r: int) -> RankOneElement:
    """The same word multiplied out by the memoized engine."""
    gens = {"x": x_elem(r), "y": y_elem(r), "E": eps_elem(r)}
    out = RankOneElement.one(r)
    for sym in word:
        out = out * gens[sym]
    return out


def confluence_check(r: int, count: int = 1000, seed: int = 0, max_len: int = 7) -> bool:
    """Random words: both naive strategies and the engine must agree."""
    import random

    rng = random.Random(seed)
    for _ in range(count):
        word = tuple(
            rng.choice(("x", "y", "E")) for _ in range(rng.randint(0, max_len))
        )
        left = naive_normal_form(word, r, "left")
        right = naive_normal_form(word, r, "right")
        if left != right:
            return False
        if left != engine_product(word, r):
            return False
    return True
