"""Report records: schema, witness discipline, serializers."""

import json

import pytest

from centermatch import report as rp


def test_make_check_statuses():
    assert rp.make_check("x", "pass")["status"] == "pass"
    assert rp.make_check("x", "skipped")["status"] == "skipped"
    check = rp.make_check("x", "fail", "difference at k=2")
    assert check["status"] == "fail"
    assert check["witness"] == "difference at k=2"


def test_failing_check_requires_witness():
    with pytest.raises(ValueError):
        rp.make_check("x", "fail")


def test_bad_status_rejected():
    with pytest.raises(ValueError):
        rp.make_check("x", "ok")


def test_assemble_schema():
    report = rp.assemble("demo", {"n": 2}, [rp.make_check("a", "pass")])
    assert report["schema"] == 1
    assert report["command"] == "demo"
    assert report["params"] == {"n": 2}
    assert len(report["checks"]) == 1
    assert "total_ms" in report


def test_has_failure():
    good = rp.assemble("demo", {}, [rp.make_check("a", "pass")])
    bad = rp.assemble("demo", {}, [rp.make_check("a", "fail", "w")])
    assert not rp.has_failure(good)
    assert rp.has_failure(bad)


def test_json_round_trip_and_stability():
    report = rp.assemble("demo", {"n": 2, "r": 1}, [rp.make_check("a", "pass")])
    text = rp.to_json(report)
    assert text == rp.to_json(report)
    parsed = json.loads(text)
    assert parsed["schema"] == 1
    assert parsed["checks"][0]["name"] == "a"


def test_csv_flattens_checks():
    report = rp.assemble(
        "demo",
        {},
        [rp.make_check("a", "pass"), rp.make_check("b", "fail", "boom")],
    )
    lines = rp.to_csv(report).strip().split("\n")
    assert lines[0].startswith("name,status")
    assert len(lines) == 3
    assert "boom" in lines[2]


def test_render_text_summary_line():
    report = rp.assemble(
        "demo",
        {"n": 3},
        [rp.make_check("a", "pass"), rp.make_check("b", "fail", "boom")],
    )
    text = rp.render_text(report)
    assert "[PASS] a" in text
    assert "[FAIL] b" in text
    assert "1/2 checks passed" in text
