import random
from fractions import Fraction

import pytest

from centermatch.cyclo import cyclo_field
from centermatch.partitions import enumerate_multipartitions, mp_boxes, box_content
from centermatch.poly import elem_sym_eval
from centermatch.symgroup import jm_element, transposition
from centermatch.wreath import (
    WreathElement,
    all_colored_perms,
    averaging_idempotent,
    c_poly,
    c_vs_p_identity,
    cherednik_ring,
    cp_identity,
    cp_inverse,
    cp_mul,
    dunkl_opdam_spectrum,
    eps_element,
    jm_commutation_check,
    jm_elementary_action,
    p_poly,
    p_sum_identity,
    p_value,
    q_ring,
    s_element,
    wreath_character_orthonormality,
    wreath_classes,
    wreath_dimension_check,
    wreath_irrep,
    wreath_jm,
    zeta_projector,
)


def test_group_law_axioms():
    rng = random.Random(3)
    elems = list(all_colored_perms(3, 3))
    ident = cp_identity(3)
    for _ in range(200):
        g, h, k = (rng.choice(elems) for _ in range(3))
        assert cp_mul(cp_mul(g, h, 3), k, 3) == cp_mul(g, cp_mul(h, k, 3), 3)
        assert cp_mul(g, ident, 3) == g
        assert cp_mul(ident, g, 3) == g
        assert cp_mul(g, cp_inverse(g, 3), 3) == ident


def test_group_order():
    assert len(list(all_colored_perms(3, 2))) == 6 * 8
    assert len(list(all_colored_perms(2, 3))) == 2 * 9


def test_algebra_axioms_random():
    rng = random.Random(5)
    elems = list(all_colored_perms(2, 2))

    def rand_elt():
        out = WreathElement.zero(2, 2)
        for _ in range(rng.randint(1, 3)):
            out = out + WreathElement.from_group(
                rng.choice(elems), 2, 2, Fraction(rng.randint(-2, 2))
            )
        return out

    for _ in range(50):
        a, b, c = rand_elt(), rand_elt(), rand_elt()
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) * c == a * c + b * c


def test_zeta_projector_examples():
    assert zeta_projector(1, 2, 2, 1) == WreathElement.one(2, 1)
    z = zeta_projector(1, 2, 2, 2)
    half = Fraction(1, 2)
    expected = WreathElement.from_group(((0, 1), (0, 0)), 2, 2, half) + (
        WreathElement.from_group(((0, 1), (1, 1)), 2, 2, half)
    )
    assert z == expected
    with pytest.raises(ValueError):
        zeta_projector(2, 2, 3, 2)


def test_zeta_projector_idempotent_sweep():
    for n in (2, 3):
        for r in (1, 2, 3, 4):
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    if i == j:
                        continue
                    z = zeta_projector(i, j, n, r)
                    assert z * z == z


def test_wreath_jm_examples():
    assert wreath_jm(1, 3, 2).is_zero()
    assert wreath_jm(2, 2, 1) == WreathElement.from_group(
        (transposition(1, 2, 2), (0, 0)), 2, 1
    )
    half = Fraction(1, 2)
    swap = transposition(1, 2, 2)
    expected = WreathElement.from_group((swap, (0, 0)), 2, 2, half) + (
        WreathElement.from_group((swap, (1, 1)), 2, 2, half)
    )
    assert wreath_jm(2, 2, 2) == expected


def test_wreath_jm_reduces_to_symmetric_jm_at_r_one():
    for n in (2, 3, 4):
        for i in range(1, n + 1):
            colored = wreath_jm(i, n, 1)
            plain = jm_element(i, n)
            assert {g[0] for g in colored.terms} == set(plain.terms)
            for (perm, colors), coeff in colored.terms.items():
                assert colors == (0,) * n
                assert coeff == plain.terms[perm]


def test_averaging_idempotent():
    for n, r in ((2, 2), (2, 3), (3, 2)):
        e = averaging_idempotent(n, r)
        assert e * e == e
        g = (transposition(1, 2, n), (1,) + (0,) * (n - 1))
        assert WreathElement.from_group(g, n, r) * e == e


def test_jm_elements_commute():
    for n, r in ((3, 2), (3, 3), (4, 2), (4, 3)):
        assert jm_commutation_check(n, r)


def test_one_dimensional_irrep():
    irr = wreath_irrep(((2,), (), ()))
    eta = cyclo_field(3).eta()
    assert irr.dim == 1
    assert irr.s_matrices[0][0, 0] == 1
    for m in irr.eps_matrices:
        assert m[0, 0] == eta
    irr.verify_presentation()
    irr.verify_jm_spectrum()


def test_two_component_irrep_eps_eigenvalues():
    irr = wreath_irrep(((1,), (1,)))
    field = cyclo_field(2)
    values = sorted(irr.eps_matrices[0][t, t].rational_part() for t in range(2))
    assert values == [Fraction(-1), Fraction(1)]
    assert all(
        irr.eps_matrices[0][t, t] in (field.eta(1), field.eta(2)) for t in range(2)
    )


def test_presentation_and_jm_spectrum_sweep():
    for r in (1, 2, 3):
        for n in (1, 2, 3):
            for shape in enumerate_multipartitions(r, n):
                irr = wreath_irrep(shape)
                irr.verify_presentation()
                irr.verify_jm_spectrum()


def test_elementary_symmetric_jm_action():
    for r in (1, 2, 3):
        for n in (2, 3):
            for shape in enumerate_multipartitions(r, n):
                for k in range(n + 1):
                    val = jm_elementary_action(k, shape)
                    want = elem_sym_eval(
                        k, [box_content(b) for b in mp_boxes(shape)]
                    )
                    assert val == want


def test_characters_constant_on_classes():
    classes, _ = wreath_classes(3, 2)
    big = next(m for m in classes if len(m) >= 3)
    for shape in (((2,), (1,)), ((1, 1), (1,))):
        irr = wreath_irrep(shape)
        vals = {}
        for g in big[:3]:
            tr = irr.character(g)
            vals[str(tr.coords)] = tr
        assert len(vals) == 1


def test_class_count_matches_multipartitions():
    for n, r in ((2, 2), (3, 2), (2, 3)):
        classes, elt_to_class = wreath_classes(n, r)
        assert len(classes) == len(enumerate_multipartitions(r, n))
        total = sum(len(m) for m in classes)
        import math

        assert total == math.factorial(n) * r ** n
        assert len(elt_to_class) == total


def test_character_orthonormality():
    for n, r in ((2, 2), (3, 2), (2, 3)):
        assert wreath_character_orthonormality(n, r)


def test_dimension_bookkeeping():
    for n in (1, 2, 3, 4):
        for r in (1, 2, 3):
            assert wreath_dimension_check(n, r)


def test_p_poly_examples():
    assert p_poly(1).is_zero()
    ring = q_ring(2)
    assert p_poly(2) == ring.gen("q") * ring.gen("c1") * Fraction(-1, 4)
    assert c_poly(2) == ring.gen("q") * ring.gen("c1")


def test_p_identities():
    for r in range(1, 9):
        assert p_sum_identity(r)
        assert c_vs_p_identity(r)


def test_dunkl_spectrum_examples():
    assert dunkl_opdam_spectrum(((1,),)) == [[cherednik_ring(1).zero()]]

    ring = cherednik_ring(2)
    c1, kappa = ring.gen("c1"), ring.gen("kappa")
    assert dunkl_opdam_spectrum(((1,), ())) == [[c1 * Fraction(-1, 4)]]
    assert dunkl_opdam_spectrum(((), (1,))) == [[c1 * Fraction(1, 4)]]
    assert dunkl_opdam_spectrum(((2,), ())) == [
        [c1 * Fraction(-1, 4), kappa + c1 * Fraction(-1, 4)]
    ]


def test_dunkl_spectrum_tableau_independent_symmetric_functions():
    for r in (1, 2, 3):
        for n in (2, 3):
            for shape in enumerate_multipartitions(r, n):
                rows = dunkl_opdam_spectrum(shape)
                for k in range(n + 1):
                    vals = [elem_sym_eval(k, row) for row in rows]
                    assert all(v == vals[0] for v in vals[1:])


def test_p_value_at_powers_is_periodic():
    ring = cherednik_ring(3)
    assert p_value(ring, 3, 0) == p_value(ring, 3, 3)
    assert p_value(ring, 3, 1) == p_value(ring, 3, -2)
