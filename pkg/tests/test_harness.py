import json

import pytest

from colorlab import harness
from colorlab.graph import Graph, complete, construct_gn, cycle
from colorlab.harness import (
    double_verify_gap,
    gap_record,
    inequality_checks,
    low_outdegree_orientations,
    parameter_report,
    summarize_gaps,
    verify_gn,
)
from colorlab.orientations import Certified


@pytest.mark.parametrize("n", [4, 6])
def test_verify_gn_exhaustive(n):
    rec = verify_gn(n)
    assert rec["ok"] and rec["failed"] == []
    assert rec["checks"]["f_exhaustive"] == {"status": "pass", "at": n // 2, "dp": n // 2 + 1}


@pytest.mark.parametrize("n", [8, 10])
def test_verify_gn_guarded(n):
    rec = verify_gn(n)
    assert rec["ok"]
    assert rec["checks"]["f_exhaustive"]["status"] == "skipped"
    assert rec["checks"]["f_exhaustive"]["reason"] == "guard"
    assert rec["checks"]["c_sum_of_squares"]["status"] == "pass"


def test_parameter_report_is_json_and_reports_guards():
    rep = parameter_report(construct_gn(8).graph, choosability=True)
    json.dumps(rep)
    assert rep["dp"] == {**rep["dp"], "certificate": "interval", "lower": 4, "upper": 5}
    assert rep["at"]["value"] == 4 and rep["at"]["certificate"] == "witness+lower-bound"
    assert rep["list_chromatic"]["status"] == "guard"
    assert rep["mad"] == "9/2"


def test_parameter_report_c4():
    rep = parameter_report(cycle(4), choosability=True)
    assert rep["graph6"] == "Cl"
    assert rep["list_chromatic"] == {"status": "ok", "value": 2, "certificate": "exhaustive"}
    assert rep["at"]["certificate"] == rep["dp"]["certificate"] == "exhaustive"


def test_inequality_checks_all_pass():
    rec = inequality_checks(construct_gn(6).graph)
    assert rec["violations"] == []
    assert {c["status"] for c in rec["checks"]} == {"pass"}


def test_low_outdegree_orientations():
    assert low_outdegree_orientations(complete(4)) == 0
    assert low_outdegree_orientations(Graph.empty(2)) == 0


def test_double_verify_gap():
    assert double_verify_gap(cycle(4), 2, 3)["verified"]
    assert not double_verify_gap(cycle(5), 3, 5)["verified"]


def test_false_gap_candidate_is_not_reported(monkeypatch):
    # an AT certificate that is wrong by one must be caught by the oracles
    monkeypatch.setattr(harness, "certify_at", lambda g: Certified(1, 1, "bogus", "bogus", exhaustive=True))
    rec = gap_record(cycle(4))
    assert rec["hit"] is False and rec["double_check"]["at_oracle"] == 2
    summary = summarize_gaps([rec], 0)["summary"]
    assert summary["dp_ge_at_plus_2"] == [] and summary["unverified_candidates"] == ["Cl"]


def test_summarize_gaps():
    recs = [gap_record(cycle(4)), gap_record(cycle(5)), gap_record(construct_gn(8).graph)]
    s = summarize_gaps(recs, 2)["summary"]
    assert s["processed"] == 3 and s["skipped"] == 2 and s["certified"] == 2
    assert s["gap_histogram"] == {"0": 1, "1": 1, "interval": 1}
    assert s["dp_eq_at_plus_1"] == ["Cl"]
