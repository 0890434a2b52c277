"""Machine-readable check reports: one schema for every verification suite.

Reports must be byte-identical across reruns with the same parameters and
seed, so durations are recorded as 0 and all key orders are canonical.
"""

from __future__ import annotations

import csv
import io
import json


def make_check(name: str, status: str, witness: str | None = None) -> dict:
    if status not in ("pass", "fail", "skipped"):
        raise ValueError(f"bad status {status!r}")
    if status == "fail" and witness is None:
        raise ValueError("failing checks must carry a witness")
    check = {"name": name, "status": status, "ms": 0}
    if witness is not None:
        check["witness"] = witness
    return check


def assemble(command: str, params: dict, checks: list) -> dict:
    return {
        "schema": 1,
        "command": command,
        "params": params,
        "checks": checks,
        "total_ms": 0,
    }


def has_failure(report: dict) -> bool:
    return any(c["status"] == "fail" for c in report["checks"])


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def to_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["name", "status", "witness", "ms"])
    for c in report["checks"]:
        writer.writerow([c["name"], c["status"], c.get("witness", ""), c["ms"]])
    return buf.getvalue()


def render_text(report: dict) -> str:
    lines = [f"suite: {report['command']}"]
    for key in sorted(report["params"]):
        lines.append(f"  {key} = {report['params'][key]}")
    for c in report["checks"]:
        tag = c["status"].upper()
        line = f"[{tag}] {c['name']}"
        if c.get("witness"):
            line += f"  ({c['witness']})"
        lines.append(line)
    npass = sum(1 for c in report["checks"] if c["status"] == "pass")
    lines.append(f"{npass}/{len(report['checks'])} checks passed")
    return "\n".join(lines) + "\n"
