"""Symmetric group algebra: center, Jucys-Murphy filtration, Specht forms.

Permutations are tuples p of length n with p[i] = image of i (0-based);
composition applies the right factor first.  Group algebra elements are
sparse {perm: Fraction} dicts.  The degree filtration puts a permutation in
degree 2(n - #cycles), so F_{2m} is spanned by the class sums of cycle types
with at most m non-fixed "excess" boxes.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from functools import lru_cache

from .matrix import Matrix, RowReducer
from .partitions import contents, partitions_of, standard_multitableaux
from .poly import elem_sym_eval
from .seminormal import seminormal_matrices


# -- permutations ----------------------------------------------------------


def identity_perm(n: int) -> tuple:
    return tuple(range(n))


def compose(p: tuple, q: tuple) -> tuple:
    """(p compose q)(i) = p(q(i)); q acts first."""
    return tuple(p[q[i]] for i in range(len(p)))


def inverse_perm(p: tuple) -> tuple:
    out = [0] * len(p)
    for i, v in enumerate(p):
        out[v] = i
    return tuple(out)


def transposition(i: int, j: int, n: int) -> tuple:
    """The transposition (i j) on 1..n, given 1-based i < j."""
    out = list(range(n))
    out[i - 1], out[j - 1] = j - 1, i - 1
    return tuple(out)


def adjacent(i: int, n: int) -> tuple:
    return transposition(i, i + 1, n)


def cycle_type(p: tuple) -> tuple:
    n = len(p)
    seen = [False] * n
    lens = []
    for s in range(n):
        if seen[s]:
            continue
        c = 0
        j = s
        while not seen[j]:
            seen[j] = True
            j = p[j]
            c += 1
        lens.append(c)
    return tuple(sorted(lens, reverse=True))


def num_cycles(p: tuple) -> int:
    n = len(p)
    seen = [False] * n
    c = 0
    for s in range(n):
        if not seen[s]:
            c += 1
            j = s
            while not seen[j]:
                seen[j] = True
                j = p[j]
    return c


def perm_degree(p: tuple) -> int:
    """Filtration degree 2(n - #cycles); 0 exactly for the identity."""
    return 2 * (len(p) - num_cycles(p))


def reduced_word(p: tuple) -> list:
    """Indices [i1, ..., ik] with p = s_{ik} ... s_{i1} (adjacent, 1-based)."""
    n = len(p)
    word = []
    cur = list(p)
    changed = True
    while changed:
        changed = False
        for i in range(1, n):
            if cur[i - 1] > cur[i]:
                cur[i - 1], cur[i] = cur[i], cur[i - 1]
                word.append(i)
                changed = True
    return word


def perm_from_cycle_type(mu: tuple, n: int) -> tuple:
    """A canonical representative with the given cycle type."""
    out = list(range(n))
    pos = 0
    for c in mu:
        for t in range(c):
            out[pos + t] = pos + (t + 1) % c
        pos += c
    return tuple(out)


# -- group algebra ---------------------------------------------------------


class PermElement:
    """Sparse rational group algebra element of Q[S_n]."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict):
        self.n = n
        self.terms = terms

    @staticmethod
    def zero(n: int) -> "PermElement":
        return PermElement(n, {})

    @staticmethod
    def from_perm(p: tuple, coeff=1) -> "PermElement":
        c = Fraction(coeff)
        return PermElement(len(p), {p: c} if c else {})

    @staticmethod
    def one(n: int) -> "PermElement":
        return PermElement.from_perm(identity_perm(n))

    def _co(self, other):
        if isinstance(other, PermElement):
            return other if other.n == self.n else None
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return PermElement.zero(self.n)
            return PermElement.from_perm(identity_perm(self.n), other)
        return None

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __neg__(self):
        return PermElement(self.n, {p: -c for p, c in self.terms.items()})

    def __add__(self, other):
        o = self._co(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for p, c in o.terms.items():
            s = out.get(p)
            if s is None:
                out[p] = c
            else:
                s = s + c
                if s:
                    out[p] = s
                else:
                    del out[p]
        return PermElement(self.n, out)

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
            c = Fraction(other)
            if not c:
                return PermElement.zero(self.n)
            return PermElement(self.n, {p: v * c for p, v in self.terms.items()})
        o = self._co(other)
        if o is None:
            return NotImplemented
        out = {}
        for p1, c1 in self.terms.items():
            for p2, c2 in o.terms.items():
                p = compose(p1, p2)
                s = out.get(p)
                if s is None:
                    out[p] = c1 * c2
                else:
                    s = s + c1 * c2
                    if s:
                        out[p] = s
                    else:
                        del out[p]
        return PermElement(self.n, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def is_central(self) -> bool:
        for i in range(1, self.n):
            s = PermElement.from_perm(adjacent(i, self.n))
            if s * self != self * s:
                return False
        return True

    def max_degree(self) -> int:
        return max((perm_degree(p) for p in self.terms), default=0)

    def __repr__(self):
        return f"PermElement({self.n}, {len(self.terms)} terms)"


# -- Jucys-Murphy ----------------------------------------------------------


def jm_element(i: int, n: int) -> PermElement:
    """JM_i = sum of (j i) over j < i; JM_1 = 0."""
    if not 1 <= i <= n:
        raise ValueError("index out of range")
    terms = {transposition(j, i, n): Fraction(1) for j in range(1, i)}
    return PermElement(n, terms)


def jm_elements(n: int) -> list:
    return [jm_element(i, n) for i in range(1, n + 1)]


# -- conjugacy classes and center -------------------------------------------


@lru_cache(maxsize=None)
def sym_classes(n: int):
    """(types, members) with types = partitions_of(n) and members[t] = list."""
    members = {t: [] for t in partitions_of(n)}
    for p in itertools.permutations(range(n)):
        members[cycle_type(p)].append(p)
    return partitions_of(n), members


def center_basis(n: int) -> list:
    """Class sums, ordered by partitions_of(n)."""
    types, members = sym_classes(n)
    return [
        PermElement(n, {p: Fraction(1) for p in members[t]}) for t in types
    ]


def class_coordinates(z: PermElement, check: bool = False) -> list:
    """Coordinates of a central element in the class sum basis."""
    n = z.n
    types, members = sym_classes(n)
    coords = []
    for t in types:
        rep = members[t][0]
        c = z.terms.get(rep, Fraction(0))
        if check:
            for p in members[t]:
                if z.terms.get(p, Fraction(0)) != c:
                    raise ValueError("element is not constant on a class")
        coords.append(c)
    return coords


@lru_cache(maxsize=None)
def center_structure_constants(n: int):
    """T[mu][nu][lam] with C_mu C_nu = sum_lam T C_lam (indices by class)."""
    types, members = sym_classes(n)
    tindex = {t: k for k, t in enumerate(types)}
    perm_class = {}
    for t, ms in members.items():
        k = tindex[t]
        for p in ms:
            perm_class[p] = k
    nt = len(types)
    table = [[{} for _ in range(nt)] for _ in range(nt)]
    for mu in range(nt):
        for lam in range(nt):
            g = members[types[lam]][0]
            for alpha in members[types[mu]]:
                nu = perm_class[compose(inverse_perm(alpha), g)]
                d = table[mu][nu]
                d[lam] = d.get(lam, 0) + 1
    return table


def center_mult_coords(x: list, y: list, n: int) -> list:
    table = center_structure_constants(n)
    nt = len(x)
    out = [Fraction(0)] * nt
    for mu in range(nt):
        if not x[mu]:
            continue
        for nu in range(nt):
            if not y[nu]:
                continue
            f = x[mu] * y[nu]
            for lam, c in table[mu][nu].items():
                out[lam] += f * c
    return out


def class_degrees(n: int) -> list:
    """Filtration degree of each class, ordered like partitions_of(n)."""
    return [2 * (n - len(t)) for t in partitions_of(n)]


# -- Rees/graded dimensions --------------------------------------------------


def rees_graded_dims(n: int) -> list:
    """dim F_{2m}/F_{2m-2} for m = 0..n-1, computed from the group itself."""
    found = set()
    for p in itertools.permutations(range(n)):
        found.add(cycle_type(p))
    dims = [0] * n
    for t in found:
        dims[n - len(t)] += 1
    return dims


# -- filtration checks -------------------------------------------------------


def jm_elementary_coords(n: int) -> list:
    """Class coordinates of e_k(JM_1..JM_n) for k = 0..n."""
    jm = jm_elements(n)
    out = []
    for k in range(n + 1):
        z = elem_sym_eval(k, jm)
        if isinstance(z, int):
            z = PermElement.from_perm(identity_perm(n), z)
        if not z.is_central():
            raise AssertionError("e_k(JM) failed centrality")
        out.append(class_coordinates(z, check=True))
    return out


def filtration_generation_check(n: int, m: int) -> dict:
    """Span of the e_mu(JM), |mu| <= m, versus classes of degree <= 2m."""
    degs = class_degrees(n)
    allowed = [k for k, d in enumerate(degs) if d <= 2 * m]
    allowed_set = set(allowed)
    ecoords = jm_elementary_coords(n)
    red = RowReducer(column_order=list(range(len(degs))))
    contained = True
    for size in range(0, m + 1):
        for mu in partitions_of(size):
            if any(part > n for part in mu):
                continue
            coords = ecoords[0]
            for part in mu:
                coords = center_mult_coords(coords, ecoords[part], n)
            if any(c for k, c in enumerate(coords) if k not in allowed_set):
                contained = False
            red.add_row({k: c for k, c in enumerate(coords) if c})
    return {
        "contained": contained,
        "rank": red.rank,
        "expected": len(allowed),
        "generates": contained and red.rank == len(allowed),
    }


def filtration_multiplicativity_check(n: int) -> bool:
    """F_2a * F_2b lands in F_{2(a+b)}: degree bound on structure constants."""
    degs = class_degrees(n)
    table = center_structure_constants(n)
    nt = len(degs)
    for mu in range(nt):
        for nu in range(nt):
            for lam in table[mu][nu]:
                if degs[lam] > degs[mu] + degs[nu]:
                    return False
    return True


# -- Specht modules and characters -------------------------------------------


def _specht_policy(pos, i):
    li, ri, ci = pos[i]
    lj, rj, cj = pos[i + 1]
    return Fraction(1, (cj - rj) - (ci - ri))


@lru_cache(maxsize=None)
def specht_matrices(lam: tuple):
    """Seminormal matrices of the adjacent transpositions on Specht(lam)."""
    n = sum(lam)
    tabs = standard_multitableaux((lam,))
    return seminormal_matrices(tabs, n, _specht_policy)


def rep_of_perm(mats: list, p: tuple) -> Matrix:
    dim = mats[0].nrows if mats else 1
    out = Matrix.identity(dim, Fraction(1))
    for i in reversed(reduced_word(p)):
        out = out @ mats[i - 1]
    return out


@lru_cache(maxsize=None)
def character_table(n: int):
    """chi[lam][mu] over partitions_of(n) x partitions_of(n)."""
    lams = partitions_of(n)
    table = []
    for lam in lams:
        mats = specht_matrices(lam)
        row = []
        for mu in lams:
            g = perm_from_cycle_type(mu, n)
            row.append(rep_of_perm(mats, g).trace())
        table.append(row)
    return table


class ThetaMap:
    """Central characters: z -> (omega_lam(z)) over partitions of n.

    omega_lam(C_mu) = |C_mu| chi_lam(mu) / f^lam; the map identifies the
    center with the algebra of Q-valued functions on partitions of n.
    """

    def __init__(self, n: int):
        self.n = n
        self.lambdas = partitions_of(n)
        types, members = sym_classes(n)
        self.class_types = types
        chi = character_table(n)
        from .partitions import num_standard_tableaux

        self.omega = [
            [
                Fraction(len(members[mu])) * chi[li][mi] / num_standard_tableaux(lam)
                for mi, mu in enumerate(types)
            ]
            for li, lam in enumerate(self.lambdas)
        ]

    def apply(self, z: PermElement) -> list:
        coords = class_coordinates(z, check=False)
        return [
            sum((c * w for c, w in zip(coords, row)), Fraction(0))
            for row in self.omega
        ]

    def apply_coords(self, coords: list) -> list:
        return [
            sum((c * w for c, w in zip(coords, row)), Fraction(0))
            for row in self.omega
        ]

    def is_bijective(self) -> bool:
        red = RowReducer(column_order=list(range(len(self.class_types))))
        for row in self.omega:
            red.add_row({k: v for k, v in enumerate(row) if v})
        return red.rank == len(self.lambdas)

    def is_multiplicative(self) -> bool:
        nt = len(self.class_types)
        for mu in range(nt):
            emu = [Fraction(0)] * nt
            emu[mu] = Fraction(1)
            wmu = self.apply_coords(emu)
            for nu in range(nt):
                env = [Fraction(0)] * nt
                env[nu] = Fraction(1)
                wnu = self.apply_coords(env)
                prod = center_mult_coords(emu, env, self.n)
                wprod = self.apply_coords(prod)
                if wprod != [a * b for a, b in zip(wmu, wnu)]:
                    return False
        return True


@lru_cache(maxsize=None)
def theta_map(n: int) -> ThetaMap:
    return ThetaMap(n)


# -- eigenvalue law ----------------------------------------------------------


def monomial_sym_jm(mu: tuple, n: int) -> PermElement:
    """m_mu(JM_1, ..., JM_n) expanded in the group algebra.

    Index 1 is skipped outright since JM_1 = 0 kills its terms.
    """
    jm = jm_elements(n)
    groups = sorted(Counter(mu).items(), reverse=True)
    total = PermElement.zero(n)
    pow_cache: dict = {}

    def jm_pow(i, e):
        key = (i, e)
        hit = pow_cache.get(key)
        if hit is None:
            hit = PermElement.one(n)
            for _ in range(e):
                hit = hit * jm[i - 1]
            pow_cache[key] = hit
        return hit

    def rec(gi, avail, acc):
        nonlocal total
        if gi == len(groups):
            total = total + acc
            return
        v, mult = groups[gi]
        for subset in itertools.combinations(avail, mult):
            term = acc
            for i in subset:
                term = term * jm_pow(i, v)
            if term:
                remaining = tuple(x for x in avail if x not in subset)
                rec(gi + 1, remaining, term)

    rec(0, tuple(range(2, n + 1)), PermElement.one(n))
    return total


def monomial_sym_eval(mu: tuple, values: list):
    """m_mu at a multiset of scalars, by the same distinct-assignment sum."""
    groups = sorted(Counter(mu).items(), reverse=True)
    total = Fraction(0)

    def rec(gi, avail, acc):
        nonlocal total
        if gi == len(groups):
            total += acc
            return
        v, mult = groups[gi]
        for subset in itertools.combinations(avail, mult):
            term = acc
            for i in subset:
                term = term * values[i] ** v
            rec(gi + 1, tuple(x for x in avail if x not in subset), term)

    rec(0, tuple(range(len(values))), Fraction(1))
    return total


def eigenvalue_law_check(n: int, max_degree: int | None = None) -> bool:
    """m_mu(JM) is central and acts on Specht(lam) by m_mu(contents(lam))."""
    if max_degree is None:
        max_degree = n
    theta = theta_map(n)
    for size in range(1, max_degree + 1):
        for mu in partitions_of(size):
            z = monomial_sym_jm(mu, n)
            if not z.is_central():
                return False
            got = theta.apply(z)
            want = [
                monomial_sym_eval(mu, [Fraction(c) for c in contents(lam)])
                for lam in theta.lambdas
            ]
            if got != want:
                return False
    return True
