"""The ambient algebra: one polynomial component per multipartition.

Three generator families land here.  The cohomology side and the Hecke side
live over Q[kappa, a_1..a_{r-1}] (the last framing parameter is eliminated
through a_1 + .. + a_r = 0); the Dunkl-Opdam side lives over
Q(zeta_r)[kappa, c_1..c_{r-1}].  The parameter substitution
a_i -> p(eta^{i-1}) carries the first ring into the second, and the main
comparison asserts that all three generator images coincide.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .cyclo import cyclo_field
from .hecke import central_scalar, hecke_ring
from .matrix import RowReducer
from .partitions import box_content, enumerate_multipartitions, mp_boxes, mp_size
from .poly import QQ, Poly, PolyRing, elem_sym_eval, elem_sym_table
from .wreath import cherednik_ring, dunkl_opdam_spectrum, p_value


@lru_cache(maxsize=None)
def framing_ring(r: int) -> PolyRing:
    """Q[kappa, a_1..a_{r-1}]: framing parameters after eliminating a_r."""
    return PolyRing(QQ, ("kappa",) + tuple(f"a{i}" for i in range(1, r)))


def framing_param(ring: PolyRing, beta: int, r: int) -> Poly:
    """a_beta in the eliminated ring; a_r = -(a_1 + .. + a_{r-1})."""
    if not 1 <= beta <= r:
        raise ValueError("component label out of range")
    if beta < r:
        return ring.gen(f"a{beta}")
    out = ring.zero()
    for i in range(1, r):
        out = out - ring.gen(f"a{i}")
    return out


class ETuple:
    """One polynomial per multipartition of P(r, n), in canonical order."""

    __slots__ = ("n", "r", "components")

    def __init__(self, n: int, r: int, components: dict):
        self.n = n
        self.r = r
        shapes = enumerate_multipartitions(r, n)
        if set(components) != set(shapes):
            raise ValueError("components must cover P(r, n) exactly")
        self.components = components

    def shapes(self):
        return enumerate_multipartitions(self.r, self.n)

    def __getitem__(self, shape):
        return self.components[shape]

    def __eq__(self, other):
        if not isinstance(other, ETuple):
            return NotImplemented
        return (
            (self.n, self.r) == (other.n, other.r)
            and self.components == other.components
        )

    def map(self, fn) -> "ETuple":
        return ETuple(
            self.n, self.r, {s: fn(p) for s, p in self.components.items()}
        )

    def evaluate(self, point: dict) -> tuple:
        return tuple(self.components[s].evaluate(point) for s in self.shapes())

    def __repr__(self):
        bits = [f"{s}: {p!r}" for s, p in sorted(self.components.items())]
        return "ETuple(" + "; ".join(bits) + ")"


def etuple_mismatch(t1: ETuple, t2: ETuple):
    """First differing component, as (shape, difference), or None."""
    if (t1.n, t1.r) != (t2.n, t2.r):
        raise ValueError("tuples live over different fixed-point sets")
    for s in t1.shapes():
        if t1[s] != t2[s]:
            return s, t1[s] - t2[s]
    return None


def chern_image(k: int, n: int, r: int) -> ETuple:
    """Component at each shape: e_k of {kappa*ct(box) + a_{l+1}} over boxes."""
    if not 1 <= k <= n:
        raise ValueError("generator index out of range")
    ring = framing_ring(r)
    kappa = ring.gen("kappa")
    comps = {}
    for shape in enumerate_multipartitions(r, n):
        values = [
            kappa * box_content(b) + framing_param(ring, b[0] + 1, r)
            for b in mp_boxes(shape)
        ]
        val = elem_sym_eval(k, values)
        comps[shape] = ring.const(val) if isinstance(val, int) else val
    return ETuple(n, r, comps)


def _eliminate_last_framing(p: Poly, r: int) -> Poly:
    target = framing_ring(r)
    images = {"kappa": target.gen("kappa")}
    for i in range(1, r):
        images[f"a{i}"] = target.gen(f"a{i}")
    images[f"a{r}"] = framing_param(target, r, r)
    return p.map_to(target, images)


def hecke_center_image(k: int, n: int, r: int) -> ETuple:
    """Central characters of e_k(z), pushed into the eliminated ring."""
    if not 1 <= k <= n:
        raise ValueError("generator index out of range")
    comps = {}
    for shape in enumerate_multipartitions(r, n):
        comps[shape] = _eliminate_last_framing(central_scalar(k, shape), r)
    return ETuple(n, r, comps)


@lru_cache(maxsize=None)
def _dunkl_ek_table(shape: tuple) -> tuple:
    """(e_1, .., e_n) of the Dunkl-Opdam spectrum, tableau-independent.

    One e-recurrence pass per standard multitableau; the values for every
    tableau must agree before anything is returned.
    """
    n = mp_size(shape)
    rows = dunkl_opdam_spectrum(shape)
    tables = [elem_sym_table(n, row) for row in rows]
    first = tables[0]
    for other in tables[1:]:
        assert other == first, (shape, "tableau dependence")
    return tuple(first[1:])


def dunkl_opdam_image(k: int, n: int, r: int) -> ETuple:
    """e_k of the Dunkl-Opdam spectrum, asserted tableau-independent."""
    if not 1 <= k <= n:
        raise ValueError("generator index out of range")
    ring = cherednik_ring(r)
    comps = {}
    for shape in enumerate_multipartitions(r, n):
        val = _dunkl_ek_table(shape)[k - 1]
        comps[shape] = ring.const(val) if isinstance(val, int) else val
    return ETuple(n, r, comps)


def substitute_parameters(t: ETuple) -> ETuple:
    """a_i -> p(eta^{i-1}), kappa fixed; lands over Q(zeta_r)."""
    r = t.r
    target = cherednik_ring(r)
    field = cyclo_field(r)
    images = {"kappa": target.gen("kappa")}
    for i in range(1, r):
        images[f"a{i}"] = p_value(target, r, i - 1)
    return t.map(lambda p: p.map_to(target, images, coeff_map=field.coerce))


def verify_main_theorem(n: int, r: int) -> dict:
    """Compare the three generator images; per-k report with witnesses."""
    checks = []
    for k in range(1, n + 1):
        chern = chern_image(k, n, r)
        hecke = hecke_center_image(k, n, r)
        dunkl = dunkl_opdam_image(k, n, r)
        m1 = etuple_mismatch(chern, hecke)
        m2 = etuple_mismatch(substitute_parameters(chern), dunkl)
        checks.append(
            {
                "k": k,
                "cohomology_vs_hecke": m1 is None,
                "substituted_vs_dunkl": m2 is None,
                "witness": None
                if m1 is None and m2 is None
                else _witness_string(m1 or m2),
            }
        )
    return {
        "n": n,
        "r": r,
        "checks": checks,
        "all_pass": all(
            c["cohomology_vs_hecke"] and c["substituted_vs_dunkl"] for c in checks
        ),
    }


def _witness_string(mismatch) -> str:
    shape, diff = mismatch
    return f"shape {shape}: difference {diff!r}"


def degree_bookkeeping_check(n: int, r: int) -> bool:
    """Nonzero chern components are homogeneous of total degree k."""
    for k in range(1, n + 1):
        t = chern_image(k, n, r)
        for shape in t.shapes():
            p = t[shape]
            if p.is_zero():
                continue
            if any(sum(e) != k for e in p.terms):
                return False
    return True


# -- specializations ----------------------------------------------------------


def framing_values_at(point: dict, r: int) -> list:
    """The r framing values A_1..A_r at a point of the eliminated ring."""
    vals = [Fraction(point[f"a{i}"]) for i in range(1, r)]
    return vals + [-sum(vals, Fraction(0))]


def separation_check(n: int, r: int, point: dict) -> bool:
    """Are the evaluated generator tuples pairwise distinct across shapes?"""
    shapes = enumerate_multipartitions(r, n)
    images = [chern_image(k, n, r) for k in range(1, n + 1)]
    seen = set()
    for shape in shapes:
        key = tuple(img[shape].evaluate(point) for img in images)
        if key in seen:
            return False
        seen.add(key)
    return True


def specialize_and_dimension(generators: list, point: dict) -> int:
    """Dimension of the unital subalgebra generated by evaluated tuples.

    Works inside the product ring Q^{|P(r,n)|}: close the span of the unit
    vector under multiplication by the specialized generators.
    """
    if not generators:
        raise ValueError("need at least one generator tuple")
    size = len(generators[0].shapes())
    gen_vecs = [g.evaluate(point) for g in generators]
    reducer = RowReducer()
    basis = []

    def try_add(vec):
        row = {i: v for i, v in enumerate(vec) if v}
        if reducer.add_row(row):
            basis.append(vec)
            return True
        return False

    try_add((Fraction(1),) * size)
    frontier = list(basis)
    while frontier:
        new_frontier = []
        for vec in frontier:
            for g in gen_vecs:
                prod = tuple(a * b for a, b in zip(vec, g))
                if try_add(prod):
                    new_frontier.append(prod)
        frontier = new_frontier
    return reducer.rank


def sample_generic_point(n: int, r: int, rng, bound: int = 40) -> dict:
    """Rejection-sample a rational point: kappa nonzero, framings distinct,
    separation holds."""
    for _ in range(200):
        point = {"kappa": Fraction(rng.randint(1, bound), rng.randint(1, 4))}
        if rng.random() < 0.5:
            point["kappa"] = -point["kappa"]
        for i in range(1, r):
            point[f"a{i}"] = Fraction(rng.randint(-bound, bound), rng.randint(1, 3))
        frams = framing_values_at(point, r)
        if len(set(frams)) != r:
            continue
        if separation_check(n, r, point):
            return point
    raise RuntimeError("no generic point found; widen the sampling bound")


def generic_dimension_trials(n: int, r: int, trials: int, seed: int) -> dict:
    """Sampled-point dimension checks plus the degenerate negative controls."""
    import random

    rng = random.Random(seed)
    shapes = enumerate_multipartitions(r, n)
    expected = len(shapes)
    gens = [chern_image(k, n, r) for k in range(1, n + 1)]
    points = []
    for _ in range(trials):
        point = sample_generic_point(n, r, rng)
        dim = specialize_and_dimension(gens, point)
        points.append(
            {
                "point": {v: str(point[v]) for v in sorted(point)},
                "dimension": dim,
                "separated": True,
                "ok": dim == expected,
            }
        )
    zero_kappa = {"kappa": Fraction(0)}
    for i in range(1, r):
        zero_kappa[f"a{i}"] = Fraction(i)
    controls = {}
    if n >= 2:
        controls["kappa_zero_separates"] = separation_check(n, r, zero_kappa)
    if r >= 2:
        coincident = {"kappa": Fraction(1)}
        for i in range(1, r):
            coincident[f"a{i}"] = Fraction(0)
        controls["coincident_framing_separates"] = separation_check(
            n, r, coincident
        )
    return {
        "n": n,
        "r": r,
        "expected_dimension": expected,
        "trials": points,
        "negative_controls": controls,
        "all_pass": all(p["ok"] for p in points)
        and not any(controls.values()),
    }
