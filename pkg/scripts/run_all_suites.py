#!/usr/bin/env python3
"""Drive every verification suite at its contract scale and collect reports.

Writes one JSON report per suite into --outdir (default reports/) and prints
a one-line summary per run.  Exit code is 0 only if every suite passed.

Usage:
    python scripts/run_all_suites.py [--outdir reports] [--seed 0] [--quick]

--quick shrinks (n, r) so the whole sweep finishes in a few seconds; the
default runs each suite at the largest size its acceptance bound names.
"""

import argparse
import io
import json
import sys
import time
from contextlib import redirect_stdout
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from centermatch.cli import main as cli_main  # noqa: E402

FULL_RUNS = [
    ("main-theorem", ["--n", "5", "--r", "3"]),
    ("symmetric-center", ["--n", "6"]),
    ("calogero", ["--n", "8"]),
    ("wreath", ["--n", "4", "--r", "3"]),
    ("hecke", ["--n", "5", "--r", "3"]),
    ("appendix", ["--n", "3", "--r", "2"]),
    ("coulomb-rank1", ["--r", "4"]),
    ("dimensions", ["--n", "4", "--r", "3"]),
]

QUICK_RUNS = [
    ("main-theorem", ["--n", "3", "--r", "2"]),
    ("symmetric-center", ["--n", "4"]),
    ("calogero", ["--n", "5"]),
    ("wreath", ["--n", "3", "--r", "2"]),
    ("hecke", ["--n", "3", "--r", "2"]),
    ("appendix", ["--n", "2", "--r", "2"]),
    ("coulomb-rank1", ["--r", "3"]),
    ("dimensions", ["--n", "3", "--r", "2"]),
]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    ap.add_argument("--outdir", default="reports", help="report directory")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--quick", action="store_true", help="small sizes only")
    args = ap.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    runs = QUICK_RUNS if args.quick else FULL_RUNS

    worst = 0
    for suite, flags in runs:
        out_path = outdir / f"{suite}.json"
        argv = (
            ["verify", suite]
            + flags
            + ["--seed", str(args.seed), "--format", "json", "--out", str(out_path)]
        )
        start = time.monotonic()
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = cli_main(argv)
        elapsed = time.monotonic() - start
        report = json.loads(out_path.read_text())
        passed = sum(1 for c in report["checks"] if c["status"] == "pass")
        total = len(report["checks"])
        state = "ok" if code == 0 else "FAILED"
        print(
            f"{suite:<18} {' '.join(flags):<14} {passed:>3}/{total:<3} "
            f"{state:<7} {elapsed:7.2f}s  -> {out_path}"
        )
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    sys.exit(main())
