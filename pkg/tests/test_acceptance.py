"""Acceptance battery: one test per criterion, run at the contract bounds.

Each test asserts the exact identities and that the measured wall time stays
inside the stated budget.  Run with `pytest -v tests/test_acceptance.py` to
get one pass/fail line per criterion.
"""

import io
import time
from contextlib import redirect_stdout
from fractions import Fraction

from centermatch.ambient import generic_dimension_trials, verify_main_theorem
from centermatch.calogero import cm_matrices, cm_rank_one_check, cm_spectrum_check
from centermatch.cli import main as cli_main
from centermatch.hecke import central_scalar, dimension_check, relation_suite
from centermatch.orbitsums import (
    canonical_family_independent,
    fixed_point_quotient,
    hat_forward,
    hat_inverse,
)
from centermatch.partitions import contents, enumerate_multipartitions, partitions_of
from centermatch.poly import elem_sym_eval
from centermatch.rankone import verify_rank_one_coulomb
from centermatch.symgroup import (
    PermElement,
    eigenvalue_law_check,
    filtration_generation_check,
    identity_perm,
    jm_elements,
    rees_graded_dims,
    theta_map,
)
from centermatch.wreath import (
    c_vs_p_identity,
    p_sum_identity,
    wreath_dimension_check,
    wreath_irrep,
)


class Budget:
    """Wall-clock guard: elapsed() asserts we stayed under the limit."""

    def __init__(self, seconds: float):
        self.limit = seconds
        self.start = time.monotonic()

    def check(self):
        elapsed = time.monotonic() - self.start
        assert elapsed < self.limit, f"took {elapsed:.1f}s, budget {self.limit}s"
        return elapsed


def test_criterion_01_main_theorem_generators():
    budget = Budget(120)
    for r in (1, 2, 3):
        for n in range(1, 6):
            result = verify_main_theorem(n, r)
            assert result["all_pass"], (n, r, result["checks"])
            assert len(result["checks"]) == n
    budget.check()


def test_criterion_02_calogero_moser_spectrum():
    budget = Budget(60)
    for n in range(1, 9):
        for lam in partitions_of(n):
            pair = cm_matrices(lam)
            assert cm_spectrum_check(pair), lam
            assert cm_rank_one_check(pair), lam
    budget.check()


def test_criterion_03_hilbert_case_chain():
    budget = Budget(300)
    for n in range(1, 7):
        theta = theta_map(n)
        assert theta.is_bijective(), n
        assert theta.is_multiplicative(), n
        jm = jm_elements(n)
        for k in range(n + 1):
            z = elem_sym_eval(k, jm)
            if isinstance(z, int):
                z = PermElement.from_perm(identity_perm(n), z)
            got = theta.apply(z)
            want = [
                elem_sym_eval(k, [Fraction(c) for c in contents(lam)])
                for lam in theta.lambdas
            ]
            assert got == want, (n, k)
        assert eigenvalue_law_check(n), n
        for m in range(n):
            assert filtration_generation_check(n, m)["generates"], (n, m)
    for n in range(1, 10):
        dims = rees_graded_dims(n)
        want = [
            sum(1 for lam in partitions_of(n) if n - len(lam) == m)
            for m in range(n)
        ]
        assert dims == want, n
    budget.check()


def test_criterion_04_parameter_identities():
    budget = Budget(1)
    for r in range(1, 9):
        assert p_sum_identity(r), r
        assert c_vs_p_identity(r), r
    budget.check()


def test_criterion_05_hecke_relations_and_centers():
    budget = Budget(120)
    for r in (1, 2, 3):
        for n in range(1, 6):
            suite = relation_suite(n, r)
            assert suite["shapes"] == len(enumerate_multipartitions(r, n))
            for shape in enumerate_multipartitions(r, n):
                for k in range(n + 1):
                    central_scalar(k, shape)  # asserts tableau independence
        for n in range(1, 5):
            assert dimension_check(n, r), (n, r)
    budget.check()


def test_criterion_06_wreath_suite():
    budget = Budget(120)
    for r in (1, 2, 3):
        for n in range(1, 5):
            for shape in enumerate_multipartitions(r, n):
                rep = wreath_irrep(shape)
                rep.verify_presentation()
                rep.verify_jm_spectrum()
            assert wreath_dimension_check(n, r), (n, r)
    budget.check()


def test_criterion_07_rank_one_coulomb():
    budget = Budget(30)
    for r in (1, 2, 3, 4):
        result = verify_rank_one_coulomb(r)
        orientation = result["orientation"]
        assert orientation is not None, r
        quartet = result[orientation]
        assert all(quartet.values()), (r, quartet)
        assert result["hbar_zero_commutative"], r
    budget.check()


def test_criterion_08_appendix_dimension():
    budget = Budget(300)
    cases = [(n, 1) for n in range(1, 5)]
    cases += [(n, 2) for n in range(1, 4)]
    cases += [(n, 3) for n in range(1, 3)]
    for n, r in cases:
        report = fixed_point_quotient(n, r)
        assert report["dimension"] == len(enumerate_multipartitions(r, n)), (n, r)
        assert canonical_family_independent(n, r), (n, r)
    for r in (1, 2, 3):
        for n in range(1, 6):
            for mp in enumerate_multipartitions(r, n):
                assert hat_forward(*hat_inverse(mp), n, r) == mp, (n, r, mp)
    budget.check()


def test_criterion_09_generic_fiber_dimension():
    budget = Budget(60)
    for r in (1, 2, 3):
        for n in range(1, 5):
            result = generic_dimension_trials(n, r, trials=20, seed=11)
            assert result["all_pass"], (n, r)
            assert len(result["trials"]) == 20
            for name, separated in result["negative_controls"].items():
                assert not separated, (n, r, name)
    budget.check()


def test_criterion_10_deterministic_reports():
    argv = [
        "verify",
        "dimensions",
        "--n",
        "3",
        "--r",
        "2",
        "--seed",
        "13",
        "--format",
        "json",
    ]
    outputs = []
    for _ in range(2):
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = cli_main(argv)
        assert code == 0
        outputs.append(buf.getvalue().encode())
    assert outputs[0] == outputs[1]
