import json

import pytest

from coxbound.classify import (classify_boundary, euclidean_triple_scan,
                               isolated_flats_check, report_to_dict,
                               report_to_json, serre_fa_criterion)
from coxbound.nerve import build_nerve
from coxbound.system import INF, complete_graph_system, make_system


def test_trichotomy_all3():
    expected = {3: "Circle", 4: "SierpinskiCarpet", 5: "MengerCurve", 6: "MengerCurve"}
    for n, tag in expected.items():
        report = classify_boundary(complete_graph_system(n))
        assert report.boundary.tag == tag
        assert report.n == n


def test_verdict_label_independent():
    for labels in ({}, {("s1", "s2"): 4}, {("s1", "s2"): 6, ("s3", "s4"): 5}):
        report = classify_boundary(complete_graph_system(4, labels=labels))
        assert report.boundary.tag == "SierpinskiCarpet"


def test_finite_system_empty_or_finite():
    sysm = make_system("xyz", {("x", "y"): 2, ("y", "z"): 3, ("x", "z"): 5})  # H3
    report = classify_boundary(sysm)
    assert report.boundary.tag == "EmptyOrFinite"


def test_out_of_scope_infinite_label():
    sysm = make_system("ab", {("a", "b"): INF})
    report = classify_boundary(sysm)
    assert report.boundary.tag == "OutOfScope"
    assert report.boundary.reason
    assert "OutOfScope(" in str(report.boundary)


def test_out_of_scope_nerve_with_triangle():
    # contains the spherical triple (2,3,3): nerve is 2-dimensional
    sysm = make_system("xyz", {("x", "y"): 2, ("y", "z"): 3, ("x", "z"): 3})
    # ... but this one is finite outright, so it's EmptyOrFinite, not OutOfScope
    assert classify_boundary(sysm).boundary.tag == "EmptyOrFinite"
    # rank 4 with a spherical triple inside an infinite group: 2-dim nerve
    labels = {("s1", "s2"): 2}
    sysm = complete_graph_system(4, labels=labels)
    report = classify_boundary(sysm)
    assert report.boundary.tag == "OutOfScope"


def test_serre_fa():
    assert serre_fa_criterion(complete_graph_system(5))
    assert not serre_fa_criterion(make_system("ab", {("a", "b"): INF}))


def test_euclidean_triples():
    assert len(euclidean_triple_scan(complete_graph_system(5))) == 10      # C(5,3)
    assert euclidean_triple_scan(complete_graph_system(5, label=4)) == []
    sysm = make_system("abc", {("a", "b"): 2, ("b", "c"): 4, ("a", "c"): 4})
    assert euclidean_triple_scan(sysm) == [("a", "b", "c")]


def test_hyperbolic_flag():
    assert not classify_boundary(complete_graph_system(5)).hyperbolic
    assert classify_boundary(complete_graph_system(5, label=4)).hyperbolic


def test_isolated_flats():
    sysm = complete_graph_system(4)
    assert isolated_flats_check(sysm, build_nerve(sysm))
    with pytest.raises(ValueError):
        bad = make_system("ab", {("a", "b"): INF})
        isolated_flats_check(bad, build_nerve(bad))


def test_report_json_schema():
    report = classify_boundary(complete_graph_system(5))
    d = json.loads(report_to_json(report))
    for key in ("system", "n", "boundary", "serre_fa", "euclidean_triples",
                "hyperbolic", "isolated_flats", "citations"):
        assert key in d, key
    assert d["boundary"] == "MengerCurve"
    assert d["n"] == 5
    assert isinstance(d["citations"], list) and d["citations"]
    assert report_to_dict(report) == report_to_dict(classify_boundary(complete_graph_system(5)))
