"""Degenerate cyclotomic Hecke algebra modules and their central characters.

Parameters are kappa and independent framing parameters a_1..a_r.  For a
multipartition shape the module is seminormal: z_i acts diagonally with entry
kappa * content + a_beta on a standard multitableau (beta the 1-based
component of the box containing i), and an adjacent transposition acts by the
local rule with crossing coefficient kappa / (z_{i+1} - z_i), a unit in the
fraction field.  The denominators that appear are collected per module so
that specialization points can avoid them.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .matrix import Matrix
from .partitions import (
    enumerate_multipartitions,
    mp_boxes,
    mp_num_standard_tableaux,
    mp_size,
    standard_multitableaux,
    tableau_positions,
)
from .poly import QQ, Poly, PolyRing, elem_sym_eval
from .ratfunc import RatFunc


@lru_cache(maxsize=None)
def hecke_ring(r: int) -> PolyRing:
    return PolyRing(QQ, ("kappa",) + tuple(f"a{i}" for i in range(1, r + 1)))


def a_param(ring: PolyRing, beta: int, r: int) -> Poly:
    if not 1 <= beta <= r:
        raise ValueError("component label out of range")
    return ring.gen(f"a{beta}")


def z_box_value(ring: PolyRing, box: tuple, r: int) -> Poly:
    l, i, j = box
    return ring.gen("kappa") * (j - i) + a_param(ring, l + 1, r)


class HeckeModule:
    """Seminormal module for one multipartition shape."""

    def __init__(self, shape: tuple):
        self.shape = shape
        self.r = len(shape)
        self.n = mp_size(shape)
        self.ring = hecke_ring(self.r)
        self.tableaux = standard_multitableaux(shape)
        self._posmaps = [tableau_positions(t) for t in self.tableaux]
        self.z_diagonals = [
            [
                z_box_value(self.ring, pos[i], self.r)
                for pos in self._posmaps
            ]
            for i in range(1, self.n + 1)
        ]
        self._s_matrices = None
        self.denominators: set = set()

    @property
    def dim(self) -> int:
        return len(self.tableaux)

    def z_matrix(self, i: int) -> Matrix:
        """z_i as a diagonal matrix over the fraction field."""
        return Matrix.diagonal(
            [RatFunc.build(v) for v in self.z_diagonals[i - 1]]
        )

    @property
    def s_matrices(self) -> list:
        if self._s_matrices is None:
            from .seminormal import seminormal_matrices

            ring = self.ring
            kappa = ring.gen("kappa")
            dens = self.denominators

            def policy(pos, i):
                zi = z_box_value(ring, pos[i], self.r)
                zj = z_box_value(ring, pos[i + 1], self.r)
                rf = RatFunc.build(kappa, (zj - zi,))
                dens.update(f.sort_key() for f in rf.den)
                return rf

            self._s_matrices = seminormal_matrices(
                self.tableaux, self.n, policy
            )
        return self._s_matrices

    # -- relation suite ----------------------------------------------------

    def verify_relations(self) -> None:
        """Assert the full defining presentation on this module."""
        n, ring = self.n, self.ring
        s = self.s_matrices
        kappa = RatFunc.build(ring.gen("kappa"))
        ident = Matrix.identity(self.dim, RatFunc.build(ring.one()))
        for i in range(n - 1):
            assert s[i] @ s[i] == ident, (self.shape, "quadratic", i + 1)
        for i in range(n - 2):
            assert (
                s[i] @ s[i + 1] @ s[i] == s[i + 1] @ s[i] @ s[i + 1]
            ), (self.shape, "braid", i + 1)
        for i in range(n - 1):
            for j in range(i + 2, n - 1):
                assert s[i] @ s[j] == s[j] @ s[i], (self.shape, "distant", i, j)
        zmats = [self.z_matrix(i) for i in range(1, n + 1)]
        for i in range(1, n):
            for j in range(1, n + 1):
                sj = j
                if j == i:
                    sj = i + 1
                elif j == i + 1:
                    sj = i
                lhs = s[i - 1] @ zmats[j - 1]
                rhs = zmats[sj - 1] @ s[i - 1]
                if j == i + 1:
                    rhs = rhs + ident.scale(kappa)
                elif j == i:
                    rhs = rhs - ident.scale(kappa)
                assert lhs == rhs, (self.shape, "cross", i, j)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                assert zmats[i - 1] @ zmats[j - 1] == zmats[j - 1] @ zmats[i - 1]
        self.verify_cyclotomic()

    def verify_cyclotomic(self) -> None:
        """prod_beta (z_1 - a_beta) kills the module, exactly."""
        ring = self.ring
        for pos in self._posmaps:
            z1 = z_box_value(ring, pos[1], self.r)
            prod = ring.one()
            for beta in range(1, self.r + 1):
                prod = prod * (z1 - a_param(ring, beta, self.r))
            assert prod.is_zero(), (self.shape, "cyclotomic")


@lru_cache(maxsize=None)
def hecke_module(shape: tuple) -> HeckeModule:
    return HeckeModule(shape)


def central_scalar(k: int, shape: tuple) -> Poly:
    """Scalar of e_k(z_1..z_n) on the module of the given shape.

    Computed per tableau and asserted tableau-independent, then checked
    against e_k of the box multiset {kappa*content + a_beta}.
    """
    mod = hecke_module(shape)
    if not 0 <= k <= mod.n:
        raise ValueError("k out of range for this shape")
    per_tab = [
        elem_sym_eval(k, [mod.z_diagonals[i][t] for i in range(mod.n)])
        for t in range(mod.dim)
    ]
    first = per_tab[0]
    for other in per_tab[1:]:
        assert other == first, (shape, k, "tableau dependence")
    box_val = elem_sym_eval(
        k, [z_box_value(mod.ring, b, mod.r) for b in mp_boxes(shape)]
    )
    first = _as_poly(mod.ring, first)
    assert first == _as_poly(mod.ring, box_val), (shape, k, "box multiset")
    return first


def _as_poly(ring: PolyRing, v) -> Poly:
    return ring.const(v) if isinstance(v, (int, Fraction)) else v


def centrality_check(n: int, r: int) -> bool:
    """diag(e_k(z) per tableau) commutes with every s_i, for every shape.

    Built from the per-tableau values without assuming tableau independence,
    so the commutation is an actual matrix check.
    """
    for shape in enumerate_multipartitions(r, n):
        mod = hecke_module(shape)
        if mod.n < 2:
            continue
        for k in range(1, n + 1):
            diag = Matrix.diagonal(
                [
                    RatFunc.build(
                        _as_poly(
                            mod.ring,
                            elem_sym_eval(
                                k, [mod.z_diagonals[i][t] for i in range(mod.n)]
                            ),
                        )
                    )
                    for t in range(mod.dim)
                ]
            )
            for s in mod.s_matrices:
                if diag @ s != s @ diag:
                    return False
    return True


def z1_centrality_counterexample(n: int, r: int):
    """A witness (shape, i) where diag(z_1) alone fails to commute with s_i."""
    for shape in enumerate_multipartitions(r, n):
        mod = hecke_module(shape)
        if mod.n < 2:
            continue
        diag = mod.z_matrix(1)
        for i, s in enumerate(mod.s_matrices, start=1):
            if diag @ s != s @ diag:
                return shape, i
    return None


def dimension_check(n: int, r: int) -> bool:
    """Sum of squared module dimensions equals r^n * n!."""
    import math

    total = sum(
        mp_num_standard_tableaux(shape) ** 2
        for shape in enumerate_multipartitions(r, n)
    )
    return total == r ** n * math.factorial(n)


def relation_suite(n: int, r: int) -> dict:
    """Run verify_relations for every shape; return denominator walls.

    Returns a dict with the number of shapes checked and the sorted list of
    distinct linear denominator factors met while building s-matrices
    (rendered as strings, for reporting).
    """
    walls = set()
    count = 0
    for shape in enumerate_multipartitions(r, n):
        mod = hecke_module(shape)
        mod.verify_relations()
        count += 1
        for key in mod.denominators:
            walls.add(_render_wall(mod.ring, key))
    return {"shapes": count, "walls": sorted(walls)}


def _render_wall(ring: PolyRing, sort_key) -> str:
    return repr(Poly(ring, dict(sort_key)))
