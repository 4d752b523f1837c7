import pytest

from groupspec.checks import SUITES, report_lines, run_suite, worst_status


def test_registry_contents():
    assert len(SUITES) == 24
    assert "prop2.1" in SUITES and "t2-defs-diverge" in SUITES


def test_unknown_suite_raises():
    with pytest.raises(KeyError):
        run_suite("prop9.9")


def test_records_are_well_formed():
    recs = run_suite("prop3.4", "small")
    for r in recs:
        assert set(r) == {"suite", "instance", "status", "detail", "repro"}
        assert r["status"] in ("pass", "fail", "finding", "skip")
        assert r["repro"].startswith("groupspec check prop3.4")
    assert worst_status(recs) == "pass"
    lines = report_lines(recs)
    assert len(lines) == len(recs)
    assert all(line.startswith("[") for line in lines)


def test_worst_status_ordering():
    assert worst_status([{"status": "pass"}, {"status": "skip"}]) == "pass"
    assert worst_status([{"status": "pass"}, {"status": "finding"}]) == "finding"
    assert worst_status([{"status": "finding"}, {"status": "fail"}]) == "fail"
