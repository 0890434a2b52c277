"""The wreath product of a symmetric group with (Z/rZ)^n.

Group elements are pairs (perm, colors): a 0-indexed permutation tuple and a
color vector mod r.  With D(c) = diag(eta^{c_1}..eta^{c_n}) and P the
permutation matrix e_j -> e_{perm(j)}, the pair stands for P @ D(c), so

    (sigma, c) * (tau, d) = (sigma o tau, c o tau + d),   (c o tau)_j = c_{tau(j)}.

The group algebra is taken over Q(zeta_r).  On top of it: the projectors
zeta_{i,j}, the colored Jucys-Murphy elements, seminormal irreducibles with
their presentation checks, conjugacy classes and characters, and the
spectrum data for the Dunkl-Opdam side (the polynomial p and friends).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .cyclo import CycloNum, cyclo_field
from .matrix import Matrix
from .partitions import (
    box_content,
    enumerate_multipartitions,
    mp_num_standard_tableaux,
    mp_size,
    standard_multitableaux,
    tableau_positions,
)
from .poly import Poly, PolyRing, elem_sym_eval
from .seminormal import seminormal_matrices
from .symgroup import compose, identity_perm, inverse_perm, reduced_word, transposition


# -- colored permutations -----------------------------------------------------


def cp_identity(n: int) -> tuple:
    return identity_perm(n), (0,) * n


def cp_mul(g: tuple, h: tuple, r: int) -> tuple:
    (sigma, c), (tau, d) = g, h
    perm = compose(sigma, tau)
    colors = tuple((c[tau[j]] + d[j]) % r for j in range(len(tau)))
    return perm, colors


def cp_inverse(g: tuple, r: int) -> tuple:
    sigma, c = g
    inv = inverse_perm(sigma)
    colors = tuple((-c[inv[j]]) % r for j in range(len(inv)))
    return inv, colors


def all_colored_perms(n: int, r: int):
    from itertools import permutations, product

    for sigma in permutations(range(n)):
        for colors in product(range(r), repeat=n):
            yield sigma, colors


class WreathElement:
    """Finitely supported Q(zeta_r)-combination of colored permutations."""

    __slots__ = ("n", "r", "field", "terms")

    def __init__(self, n: int, r: int, terms: dict):
        self.n = n
        self.r = r
        self.field = cyclo_field(r)
        self.terms = terms

    @staticmethod
    def zero(n: int, r: int) -> "WreathElement":
        return WreathElement(n, r, {})

    @staticmethod
    def from_group(g: tuple, n: int, r: int, coeff=1) -> "WreathElement":
        c = cyclo_field(r).coerce(coeff)
        return WreathElement(n, r, {g: c} if c else {})

    @staticmethod
    def one(n: int, r: int) -> "WreathElement":
        return WreathElement.from_group(cp_identity(n), n, r)

    def _co(self, other):
        if isinstance(other, WreathElement):
            return other if (other.n, other.r) == (self.n, self.r) else None
        if isinstance(other, (int, Fraction, CycloNum)):
            try:
                return WreathElement.from_group(
                    cp_identity(self.n), self.n, self.r, other
                )
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
        return WreathElement(self.n, self.r, {g: -c for g, c in self.terms.items()})

    def __add__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for g, c in o.terms.items():
            s = out.get(g)
            s = c if s is None else s + c
            if s:
                out[g] = s
            else:
                out.pop(g, None)
        return WreathElement(self.n, self.r, out)

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
            c = self.field.coerce(other)
            if not c:
                return WreathElement.zero(self.n, self.r)
            return WreathElement(
                self.n, self.r, {g: v * c for g, v in self.terms.items()}
            )
        o = self._co(other)
        if o is None:
            return NotImplemented
        out: dict = {}
        for g, a in self.terms.items():
            for h, b in o.terms.items():
                k = cp_mul(g, h, self.r)
                s = out.get(k)
                p = a * b
                s = p if s is None else s + p
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return WreathElement(self.n, self.r, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CycloNum)):
            return self * other
        o = self._co(other)
        if o is None:
            return NotImplemented
        return o * self

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = [f"({c!r})*{g}" for g, c in sorted(self.terms.items())]
        return " + ".join(bits)


def eps_element(i: int, n: int, r: int, power: int = 1) -> WreathElement:
    """epsilon_i^power as a group-algebra element (i is 1-based)."""
    colors = [0] * n
    colors[i - 1] = power % r
    return WreathElement.from_group((identity_perm(n), tuple(colors)), n, r)


def s_element(i: int, n: int, r: int) -> WreathElement:
    """The adjacent transposition s_i = (i, i+1), colorless."""
    return WreathElement.from_group((transposition(i, i + 1, n), (0,) * n), n, r)


def transposition_element(i: int, j: int, n: int, r: int) -> WreathElement:
    return WreathElement.from_group((transposition(i, j, n), (0,) * n), n, r)


def zeta_projector(i: int, j: int, n: int, r: int) -> WreathElement:
    """(1/r) sum_p eps_i^p eps_j^{-p}; an idempotent for i != j."""
    if i == j:
        raise ValueError("projector needs two distinct slots")
    out = WreathElement.zero(n, r)
    for p in range(r):
        colors = [0] * n
        colors[i - 1] = p % r
        colors[j - 1] = (-p) % r
        out = out + WreathElement.from_group(
            (identity_perm(n), tuple(colors)), n, r, Fraction(1, r)
        )
    return out


def wreath_jm(i: int, n: int, r: int) -> WreathElement:
    """JM_i = sum_{j<i} zeta_{i,j} (j i)."""
    out = WreathElement.zero(n, r)
    for j in range(1, i):
        out = out + zeta_projector(i, j, n, r) * transposition_element(j, i, n, r)
    return out


def averaging_idempotent(n: int, r: int) -> WreathElement:
    """(1/|group|) sum of all elements."""
    import math

    size = math.factorial(n) * r ** n
    coeff = Fraction(1, size)
    terms = {g: cyclo_field(r).coerce(coeff) for g in all_colored_perms(n, r)}
    return WreathElement(n, r, terms)


# -- seminormal irreducibles --------------------------------------------------


class WreathIrrep:
    """Seminormal model of the irreducible labelled by a multipartition.

    s_i acts by the content rule within a component and swaps basis vectors
    across components; eps_i is diagonal with entry eta^beta, beta the
    1-based component of the box of i.
    """

    def __init__(self, shape: tuple, r: int = None):
        self.shape = shape
        self.r = len(shape) if r is None else r
        if len(shape) != self.r:
            raise ValueError("shape has the wrong number of components")
        self.n = mp_size(shape)
        self.field = cyclo_field(self.r)
        self.tableaux = standard_multitableaux(shape)
        self._posmaps = [tableau_positions(t) for t in self.tableaux]

        def policy(pos, i):
            li = pos[i][0]
            lj = pos[i + 1][0]
            if li != lj:
                return 0
            return Fraction(1, box_content(pos[i + 1]) - box_content(pos[i]))

        self.s_matrices = seminormal_matrices(self.tableaux, self.n, policy)
        self.eps_matrices = [
            Matrix.diagonal(
                [self.field.eta(pos[i][0] + 1) for pos in self._posmaps]
            )
            for i in range(1, self.n + 1)
        ]

    @property
    def dim(self) -> int:
        return len(self.tableaux)

    def rep(self, g: tuple) -> Matrix:
        """Matrix of a colored permutation (product of generator images)."""
        sigma, colors = g
        out = Matrix.identity(self.dim, self.field.one)
        for i in reversed(reduced_word(sigma)):
            out = out @ self.s_matrices[i - 1]
        for slot, c in enumerate(colors):
            for _ in range(c % self.r):
                out = out @ self.eps_matrices[slot]
        return out

    def rep_element(self, elt: WreathElement) -> Matrix:
        out = Matrix.zeros(self.dim, self.dim)
        for g, c in elt.terms.items():
            out = out + self.rep(g).scale(c)
        return out

    def character(self, g: tuple) -> CycloNum:
        return self.field.coerce(self.rep(g).trace())

    def verify_presentation(self) -> None:
        n = self.n
        s, eps = self.s_matrices, self.eps_matrices
        ident = Matrix.identity(self.dim, self.field.one)
        for i in range(n - 1):
            assert s[i] @ s[i] == ident, (self.shape, "quadratic", i + 1)
        for i in range(n - 2):
            assert (
                s[i] @ s[i + 1] @ s[i] == s[i + 1] @ s[i] @ s[i + 1]
            ), (self.shape, "braid", i + 1)
        for i in range(n - 1):
            for j in range(i + 2, n - 1):
                assert s[i] @ s[j] == s[j] @ s[i], (self.shape, "distant s", i, j)
        for i in range(n):
            p = ident
            for _ in range(self.r):
                p = p @ eps[i]
            assert p == ident, (self.shape, "eps order", i + 1)
            for j in range(i + 1, n):
                assert eps[i] @ eps[j] == eps[j] @ eps[i]
        for i in range(n - 1):
            assert s[i] @ eps[i] @ s[i] == eps[i + 1], (self.shape, "twist", i + 1)
            for j in range(n):
                if j in (i, i + 1):
                    continue
                assert s[i] @ eps[j] == eps[j] @ s[i], (self.shape, "s-eps", i, j)

    def verify_jm_spectrum(self) -> None:
        """JM_i acts diagonally by the content of the box of i."""
        for i in range(1, self.n + 1):
            mat = self.rep_element(wreath_jm(i, self.n, self.r))
            want = Matrix.diagonal(
                [self.field.embed(box_content(pos[i])) for pos in self._posmaps]
            )
            assert mat == want, (self.shape, "jm spectrum", i)


@lru_cache(maxsize=None)
def wreath_irrep(shape: tuple) -> WreathIrrep:
    return WreathIrrep(shape)


def wreath_dimension_check(n: int, r: int) -> bool:
    import math

    total = sum(
        mp_num_standard_tableaux(shape) ** 2
        for shape in enumerate_multipartitions(r, n)
    )
    return total == math.factorial(n) * r ** n


def jm_commutation_check(n: int, r: int) -> bool:
    jms = [wreath_jm(i, n, r) for i in range(1, n + 1)]
    for i in range(n):
        for j in range(i + 1, n):
            if jms[i] * jms[j] != jms[j] * jms[i]:
                return False
    return True


def jm_elementary_action(k: int, shape: tuple):
    """Scalar of e_k(JM_1..JM_n) on the irreducible, asserted scalar.

    The matrix is computed honestly (products of rep matrices) and compared
    with e_k of the box contents.
    """
    from .partitions import mp_boxes

    irr = wreath_irrep(shape)
    n, r = irr.n, irr.r
    if not 0 <= k <= n:
        raise ValueError("k out of range for this shape")
    mats = [irr.rep_element(wreath_jm(i, n, r)) for i in range(1, n + 1)]
    ident = Matrix.identity(irr.dim, irr.field.one)
    e = [ident] + [Matrix.zeros(irr.dim, irr.dim) for _ in range(k)]
    seen = 0
    for v in mats:
        seen += 1
        for j in range(min(k, seen), 0, -1):
            e[j] = e[j] + e[j - 1] @ v
    expected = elem_sym_eval(k, [box_content(b) for b in mp_boxes(shape)])
    want = ident.scale(irr.field.embed(expected))
    assert e[k] == want, (shape, k, "not the content scalar")
    return expected


# -- conjugacy classes and characters ----------------------------------------


@lru_cache(maxsize=None)
def wreath_classes(n: int, r: int):
    """Conjugacy classes by orbit search; returns (classes, elt_to_class).

    classes is a tuple of sorted element tuples, ordered by representative;
    elt_to_class maps every group element to its class index.
    """
    conjugators = [
        (transposition(i, i + 1, n), (0,) * n) for i in range(1, n)
    ] + [(identity_perm(n), tuple(1 if j == 0 else 0 for j in range(n)))]
    seen: dict = {}
    classes = []
    for g in all_colored_perms(n, r):
        if g in seen:
            continue
        orbit = {g}
        frontier = [g]
        while frontier:
            h = frontier.pop()
            for t in conjugators:
                k = cp_mul(cp_mul(t, h, r), cp_inverse(t, r), r)
                if k not in orbit:
                    orbit.add(k)
                    frontier.append(k)
        members = tuple(sorted(orbit))
        classes.append(members)
        for h in members:
            seen[h] = None
    classes.sort(key=lambda mem: mem[0])
    elt_to_class = {}
    for idx, members in enumerate(classes):
        for h in members:
            elt_to_class[h] = idx
    return tuple(classes), elt_to_class


def wreath_character_orthonormality(n: int, r: int) -> bool:
    """Group-averaged pairing of irreducible characters is the identity."""
    import math

    classes, elt_to_class = wreath_classes(n, r)
    shapes = enumerate_multipartitions(r, n)
    reps = [members[0] for members in classes]
    inv_class = [elt_to_class[cp_inverse(g, r)] for g in reps]
    table = []
    for shape in shapes:
        irr = wreath_irrep(shape)
        table.append([irr.character(g) for g in reps])
    size = math.factorial(n) * r ** n
    field = cyclo_field(r)
    for a, chi_a in enumerate(table):
        for b, chi_b in enumerate(table):
            acc = field.zero
            for idx, members in enumerate(classes):
                acc = acc + len(members) * chi_a[idx] * chi_b[inv_class[idx]]
            want = field.embed(size if a == b else 0)
            if acc != want:
                return False
    return True


# -- the parameter polynomial p and the Dunkl-Opdam spectra -------------------


@lru_cache(maxsize=None)
def cherednik_ring(r: int) -> PolyRing:
    """Q(zeta_r)[kappa, c_1..c_{r-1}]."""
    return PolyRing(
        cyclo_field(r), ("kappa",) + tuple(f"c{l}" for l in range(1, r))
    )


@lru_cache(maxsize=None)
def q_ring(r: int) -> PolyRing:
    """Q(zeta_r)[q, c_1..c_{r-1}] for the polynomial identities in q."""
    return PolyRing(cyclo_field(r), ("q",) + tuple(f"c{l}" for l in range(1, r)))


def p_coefficient(r: int, l: int) -> CycloNum:
    """The scalar multiplying c_l in p: 1/(r*(eta^{-l} - 1)), 1 <= l < r."""
    field = cyclo_field(r)
    return (field.eta(-l) - field.one).inverse() / r


def p_value(ring: PolyRing, r: int, power: int) -> Poly:
    """p(eta^power) as a linear polynomial in the c-variables of ring."""
    field = cyclo_field(r)
    out = ring.zero()
    for l in range(1, r):
        out = out + ring.gen(f"c{l}") * (p_coefficient(r, l) * field.eta(power * l))
    return out


def p_poly(r: int) -> Poly:
    """p(q) in q_ring(r)."""
    ring = q_ring(r)
    q = ring.gen("q")
    out = ring.zero()
    for l in range(1, r):
        out = out + ring.gen(f"c{l}") * p_coefficient(r, l) * q ** l
    return out


def c_poly(r: int) -> Poly:
    """c(q) = sum_l c_l q^l in q_ring(r)."""
    ring = q_ring(r)
    q = ring.gen("q")
    out = ring.zero()
    for l in range(1, r):
        out = out + ring.gen(f"c{l}") * q ** l
    return out


def p_sum_identity(r: int) -> bool:
    """sum_{i=1}^r p(eta^{i-1}) = 0."""
    ring = cherednik_ring(r)
    total = ring.zero()
    for i in range(1, r + 1):
        total = total + p_value(ring, r, i - 1)
    return total.is_zero()


def c_vs_p_identity(r: int) -> bool:
    """c(q) = r*(p(eta^{-1} q) - p(q)) as polynomials in q."""
    ring = q_ring(r)
    field = cyclo_field(r)
    p = p_poly(r)
    images = {v: ring.gen(v) for v in ring.variables}
    images["q"] = ring.gen("q") * field.eta(-1)
    shifted = p.map_to(ring, images)
    return c_poly(r) == (shifted - p) * r


def dunkl_opdam_spectrum(shape: tuple) -> list:
    """Per standard multitableau: [kappa*ct(B(i)) + p(eta^{beta(B(i))-1})]_i."""
    r = len(shape)
    ring = cherednik_ring(r)
    kappa = ring.gen("kappa")
    tableaux = standard_multitableaux(shape)
    n = mp_size(shape)
    out = []
    for t in tableaux:
        pos = tableau_positions(t)
        row = []
        for i in range(1, n + 1):
            box = pos[i]
            row.append(kappa * box_content(box) + p_value(ring, r, box[0]))
        out.append(row)
    return out
