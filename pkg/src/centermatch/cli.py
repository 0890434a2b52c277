"""Command line driver: `centermatch verify <suite> [flags]`.

Each suite runs one module's verification battery and emits a CheckReport.
Stdout carries a human-readable summary (or the report itself with
--format json/csv); --out writes the report to a file.  Exit code 0 means
every check passed, 1 means some check failed, 2 means a usage error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import report as rp
from .partitions import (
    enumerate_multipartitions,
    partitions_of,
    render_multipartition,
    render_partition,
)

SUITES = (
    "main-theorem",
    "symmetric-center",
    "calogero",
    "wreath",
    "hecke",
    "appendix",
    "coulomb-rank1",
    "dimensions",
)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="centermatch",
        description="exact verification suites for the fixed-point "
        "center-matching package",
    )
    sub = p.add_subparsers(dest="mode", required=True)
    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--n", type=int, default=None, help="number of boxes")
    v.add_argument("--r", type=int, default=1, help="cyclic group order")
    v.add_argument("--cutoff", type=int, default=None, help="appendix degree window")
    v.add_argument("--seed", type=int, default=0, help="random seed")
    v.add_argument(
        "--point",
        type=str,
        default=None,
        help='parameter point "kappa=1/2,a1=-3" (rationals as p/q)',
    )
    v.add_argument("--out", type=str, default=None, help="write report to file")
    v.add_argument(
        "--dump-matrices",
        action="store_true",
        help="include representation matrices in the report params",
    )
    v.add_argument(
        "--format",
        choices=("text", "json", "csv"),
        default="text",
        help="stdout format (files written via --out use json, or csv "
        "when --format csv)",
    )
    return p


def parse_point(text: str) -> dict:
    point = {}
    for bit in text.split(","):
        if "=" not in bit:
            raise ValueError(f"bad point entry {bit!r}")
        key, _, val = bit.partition("=")
        point[key.strip()] = Fraction(val.strip())
    return point


def _bool_check(name: str, ok: bool, witness_on_fail: str, witness_on_pass=None):
    if ok:
        return rp.make_check(name, "pass", witness_on_pass)
    return rp.make_check(name, "fail", witness_on_fail)


# -- suite handlers ------------------------------------------------------------


def suite_main_theorem(args) -> tuple:
    from .ambient import verify_main_theorem

    n, r = args.n, args.r
    result = verify_main_theorem(n, r)
    checks = []
    for c in result["checks"]:
        w = c["witness"]
        checks.append(
            _bool_check(
                f"k={c['k']} cohomology=hecke",
                c["cohomology_vs_hecke"],
                w or "difference not rendered",
            )
        )
        checks.append(
            _bool_check(
                f"k={c['k']} substituted=dunkl-opdam",
                c["substituted_vs_dunkl"],
                w or "difference not rendered",
            )
        )
    return {"n": n, "r": r}, checks


def suite_symmetric_center(args) -> tuple:
    from .symgroup import (
        eigenvalue_law_check,
        filtration_generation_check,
        filtration_multiplicativity_check,
        rees_graded_dims,
        theta_map,
    )

    n = args.n
    theta = theta_map(n)
    checks = [
        _bool_check("theta bijective", theta.is_bijective(), "rank deficient"),
        _bool_check(
            "theta multiplicative", theta.is_multiplicative(), "product mismatch"
        ),
        _bool_check(
            "eigenvalue law for symmetric JM polynomials",
            eigenvalue_law_check(n),
            "some m_mu(JM) acts off its content value",
        ),
    ]
    dims = rees_graded_dims(n)
    expected = [
        sum(1 for lam in partitions_of(n) if n - len(lam) == m)
        for m in range(len(dims))
    ]
    checks.append(
        _bool_check(
            "Rees graded dimensions match length statistics",
            dims == expected,
            f"got {dims}, expected {expected}",
            witness_on_pass=str(dims),
        )
    )
    gen_ok = all(
        filtration_generation_check(n, m)["generates"] for m in range(n + 1)
    )
    checks.append(
        _bool_check(
            "JM elementary polynomials generate each filtration layer",
            gen_ok,
            "span defect in some layer",
        )
    )
    checks.append(
        _bool_check(
            "filtration is multiplicative",
            filtration_multiplicativity_check(n),
            "degree bound violated",
        )
    )
    return {"n": n}, checks


def suite_calogero(args) -> tuple:
    from .calogero import cm_matrices, cm_rank_one_check, cm_spectrum_check

    n = args.n
    checks = []
    matrices = {}
    for lam in partitions_of(n):
        pair = cm_matrices(lam)
        name = render_partition(lam)
        checks.append(
            _bool_check(
                f"lambda={name} YX spectrum is the content multiset",
                cm_spectrum_check(pair),
                "characteristic polynomial mismatch",
            )
        )
        checks.append(
            _bool_check(
                f"lambda={name} rank-one commutator normalization",
                cm_rank_one_check(pair),
                "rank condition violated",
            )
        )
        if args.dump_matrices:
            matrices[name] = {
                "X": [[str(v) for v in row] for row in pair.x.rows],
                "Y": [[str(v) for v in row] for row in pair.y.rows],
            }
    params = {"n": n}
    if args.dump_matrices:
        params["matrices"] = matrices
    return params, checks


def suite_wreath(args) -> tuple:
    from .wreath import (
        wreath_character_orthonormality,
        wreath_classes,
        wreath_dimension_check,
        wreath_irrep,
    )

    n, r = args.n, args.r
    checks = []
    matrices = {}
    for shape in enumerate_multipartitions(r, n):
        name = render_multipartition(shape)
        irrep = wreath_irrep(shape)
        try:
            irrep.verify_presentation()
            irrep.verify_jm_spectrum()
            checks.append(
                rp.make_check(f"shape={name} presentation and JM spectrum", "pass")
            )
        except AssertionError as exc:
            checks.append(
                rp.make_check(
                    f"shape={name} presentation and JM spectrum",
                    "fail",
                    str(exc.args),
                )
            )
        if args.dump_matrices:
            matrices[name] = {
                "s": [
                    [[str(v) for v in row] for row in m.rows]
                    for m in irrep.s_matrices
                ],
                "eps": [
                    [[str(v) for v in row] for row in m.rows]
                    for m in irrep.eps_matrices
                ],
            }
    checks.append(
        _bool_check(
            "sum of squared dimensions is r^n n!",
            wreath_dimension_check(n, r),
            "dimension count off",
        )
    )
    classes, _ = wreath_classes(n, r)
    expected = len(enumerate_multipartitions(r, n))
    checks.append(
        _bool_check(
            "conjugacy class count is |P(r,n)|",
            len(classes) == expected,
            f"got {len(classes)}, expected {expected}",
        )
    )
    checks.append(
        _bool_check(
            "irreducible characters are orthonormal",
            wreath_character_orthonormality(n, r),
            "inner product defect",
        )
    )
    params = {"n": n, "r": r}
    if args.dump_matrices:
        params["matrices"] = matrices
    return params, checks


def suite_hecke(args) -> tuple:
    from .hecke import (
        central_scalar,
        dimension_check,
        hecke_module,
        relation_suite,
        z1_centrality_counterexample,
    )

    n, r = args.n, args.r
    checks = []
    try:
        suite = relation_suite(n, r)
        checks.append(
            rp.make_check(
                f"defining relations for all {suite['shapes']} shapes",
                "pass",
                "walls: " + "; ".join(suite["walls"]),
            )
        )
    except AssertionError as exc:
        checks.append(
            rp.make_check("defining relations", "fail", str(exc.args))
        )
    try:
        for shape in enumerate_multipartitions(r, n):
            for k in range(1, n + 1):
                central_scalar(k, shape)
        checks.append(
            rp.make_check("central characters are tableau independent", "pass")
        )
    except AssertionError as exc:
        checks.append(
            rp.make_check(
                "central characters are tableau independent", "fail", str(exc.args)
            )
        )
    checks.append(
        _bool_check(
            "sum of squared dimensions is r^n n!",
            dimension_check(n, r),
            "dimension count off",
        )
    )
    if r >= 2 and n >= 2:
        witness = z1_centrality_counterexample(n, r)
        checks.append(
            _bool_check(
                "z_1 is not central (negative control)",
                witness is not None,
                "no counterexample found",
                witness_on_pass=(
                    f"shape {render_multipartition(witness[0])}, "
                    f"generator s_{witness[1]}"
                )
                if witness
                else None,
            )
        )
    params = {"n": n, "r": r}
    if args.dump_matrices:
        matrices = {}
        for shape in enumerate_multipartitions(r, n):
            mod = hecke_module(shape)
            matrices[render_multipartition(shape)] = {
                "z": [[repr(v) for v in diag] for diag in mod.z_diagonals],
                "s": [
                    [[repr(v) for v in row] for row in m.rows]
                    for m in mod.s_matrices
                ],
            }
        params["matrices"] = matrices
    return params, checks


def suite_appendix(args) -> tuple:
    from .orbitsums import (
        canonical_family_independent,
        fixed_point_quotient,
        hat_forward,
        hat_inverse,
    )

    n, r = args.n, args.r
    result = fixed_point_quotient(n, r, cutoff=args.cutoff)
    checks = [
        _bool_check(
            "quotient dimension equals |P(r,n)|",
            result["dimension"] == result["expected"],
            f"dim {result['dimension']} != {result['expected']}",
            witness_on_pass=f"dim {result['dimension']}, profile "
            f"{result['degree_profile']}, grading {result['grading']}",
        ),
        _bool_check(
            "no survivors past the spanning bound",
            result["last_nonzero_degree"] <= result["spanning_bound"],
            f"survivor at degree {result['last_nonzero_degree']} exceeds "
            f"bound {result['spanning_bound']}",
            witness_on_pass=(
                f"empty even degrees {result['verified_empty_degrees']}"
                if result["verified_empty_degrees"]
                else f"window ends at the bound {result['spanning_bound']}"
            ),
        ),
        _bool_check(
            "canonical family independent in the quotient",
            canonical_family_independent(n, r, cutoff=args.cutoff),
            "family is dependent",
        ),
    ]
    round_trip = all(
        hat_forward(*hat_inverse(mp), n, r) == mp
        for mp in enumerate_multipartitions(r, n)
    )
    checks.append(
        _bool_check(
            "hat bijection round-trips",
            round_trip,
            "some multipartition does not round-trip",
        )
    )
    params = {"n": n, "r": r, "cutoff": result["cutoff"]}
    return params, checks


def suite_coulomb(args) -> tuple:
    r = args.r
    from .rankone import verify_rank_one_coulomb

    result = verify_rank_one_coulomb(r)
    orientation = result["orientation"]
    quartet = result[orientation] if orientation else result["stated"]
    labels = {
        "product_up": "raising times lowering matches the plain product",
        "product_down": "lowering times raising matches the shifted product",
        "commutator_up": "[raising, b] = hbar * raising",
        "commutator_down": "[lowering, b] = -hbar * lowering",
    }
    checks = [
        _bool_check(
            "orientation determined",
            orientation is not None,
            "neither orientation satisfies all four relations",
            witness_on_pass=f"orientation={orientation}",
        )
    ]
    for key, label in labels.items():
        checks.append(
            _bool_check(label, quartet[key], "relation fails exactly")
        )
    checks.append(
        _bool_check(
            "hbar -> 0 gives a commutative pair",
            result["hbar_zero_commutative"],
            "commutator survives at hbar = 0",
        )
    )
    return {"r": r}, checks


def suite_dimensions(args) -> tuple:
    from .ambient import (
        chern_image,
        generic_dimension_trials,
        separation_check,
        specialize_and_dimension,
    )

    n, r = args.n, args.r
    expected = len(enumerate_multipartitions(r, n))
    if args.point:
        point = parse_point(args.point)
        gens = [chern_image(k, n, r) for k in range(1, n + 1)]
        sep = separation_check(n, r, point)
        dim = specialize_and_dimension(gens, point)
        desc = ",".join(f"{k}={v}" for k, v in sorted(point.items()))
        checks = [
            _bool_check(
                "separation at the supplied point",
                sep,
                f"point {desc} does not separate",
                witness_on_pass=desc,
            ),
            _bool_check(
                "specialized dimension equals |P(r,n)|",
                dim == expected,
                f"dim {dim} != {expected} at {desc}",
                witness_on_pass=f"dim {dim}",
            ),
        ]
        return {"n": n, "r": r, "point": desc}, checks
    result = generic_dimension_trials(n, r, trials=20, seed=args.seed)
    checks = []
    for idx, trial in enumerate(result["trials"]):
        desc = ",".join(f"{k}={v}" for k, v in sorted(trial["point"].items()))
        checks.append(
            _bool_check(
                f"trial {idx}: dimension and separation at a generic point",
                trial["ok"] and trial["separated"],
                f"dim {trial['dimension']} != {expected} at {desc}",
                witness_on_pass=desc,
            )
        )
    for name, separated in result["negative_controls"].items():
        pretty = {
            "kappa_zero_separates": "kappa = 0 fails separation",
            "coincident_framing_separates": "coincident framings fail separation",
        }[name]
        checks.append(
            _bool_check(pretty, not separated, "degenerate point still separates")
        )
    return {"n": n, "r": r, "seed": args.seed, "trials": 20}, checks


_HANDLERS = {
    "main-theorem": (suite_main_theorem, True),
    "symmetric-center": (suite_symmetric_center, True),
    "calogero": (suite_calogero, True),
    "wreath": (suite_wreath, True),
    "hecke": (suite_hecke, True),
    "appendix": (suite_appendix, True),
    "coulomb-rank1": (suite_coulomb, False),
    "dimensions": (suite_dimensions, True),
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler, needs_n = _HANDLERS[args.suite]
    if needs_n and args.n is None:
        parser.error(f"suite {args.suite} requires --n")
    if args.n is not None and args.n < 1:
        parser.error("--n must be positive")
    if args.r < 1:
        parser.error("--r must be positive")
    if args.point is not None:
        try:
            parse_point(args.point)
        except (ValueError, ZeroDivisionError) as exc:
            parser.error(f"bad --point: {exc}")
    try:
        params, checks = handler(args)
    except ValueError as exc:
        parser.error(str(exc))
    params["seed"] = args.seed
    result = rp.assemble(args.suite, params, checks)
    if args.format == "json":
        sys.stdout.write(rp.to_json(result))
    elif args.format == "csv":
        sys.stdout.write(rp.to_csv(result))
    else:
        sys.stdout.write(rp.render_text(result))
    if args.out:
        payload = rp.to_csv(result) if args.format == "csv" else rp.to_json(result)
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    return 1 if rp.has_failure(result) else 0


if __name__ == "__main__":
    sys.exit(main())
