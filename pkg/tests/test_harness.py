import json

import pytest

from freeminor.graph import GraphError
from freeminor.harness import (CACHE_FILE, THEOREMS, RunConfig, TheoremReport, VerdictCache, format_reports,
                               subdivision_wheel_report, verify_theorems)


def test_run_config_limits():
    with pytest.raises(GraphError):
        RunConfig(max_n=9)
    with pytest.raises(GraphError):
        RunConfig(jobs=0)
    with pytest.raises(GraphError):
        RunConfig(fmt="xml")
    assert RunConfig().max_n == 7


def test_report_rendering():
    rep = TheoremReport("demo")
    rep.check(True, "fine")
    rep.check(False, "broken thing")
    text = rep.to_text()
    assert text.startswith("theorem demo: FAIL instances=2 violations=1")
    assert "violation: broken thing" in text
    assert json.loads(format_reports([rep], "jsonl"))["violations"] == ["broken thing"]


def test_reports_cover_every_theorem():
    reports = verify_theorems(RunConfig(max_n=5))
    assert [r.theorem for r in reports] == list(THEOREMS)
    assert all(r.passed and r.instances > 0 for r in reports)


def test_cache_round_trip_and_soundness(tmp_path):
    plain = format_reports(verify_theorems(RunConfig(max_n=6)))
    first = format_reports(verify_theorems(RunConfig(max_n=6, cache_dir=str(tmp_path))))
    cache = VerdictCache(tmp_path)
    assert len(cache.data) == 143
    second = format_reports(verify_theorems(RunConfig(max_n=6, cache_dir=str(tmp_path))))
    assert plain == first == second


def test_stale_cache_is_ignored(tmp_path):
    path = tmp_path / CACHE_FILE
    path.write_text(json.dumps({"format": "freeminor-verdicts", "version": "0.0.0", "schema": 1}) + "\n"
                    + json.dumps({"key": "bogus", "record": {}}) + "\n")
    assert VerdictCache(tmp_path).data == {}
    verify_theorems(RunConfig(max_n=4, cache_dir=str(tmp_path)))
    fresh = VerdictCache(tmp_path)
    assert "bogus" not in fresh.data and fresh.data


def test_parallel_output_is_identical():
    one = format_reports(verify_theorems(RunConfig(max_n=6, jobs=1)))
    two = format_reports(verify_theorems(RunConfig(max_n=6, jobs=2)))
    assert one == two


def test_wheel_report_without_w3_spokes():
    rep = subdivision_wheel_report(range(3, 5))
    assert rep.passed
