from __future__ import annotations

import pytest

from kgraphs import (
    Degree,
    Verdict,
    cofinality_check,
    hereditary_closure,
    saturate,
    simplicity_verdict,
)
from kgraphs.errors import NotHereditary, RefError


def test_vertex_set_protocol(g_src):
    h = hereditary_closure(g_src, {"u"})
    assert "u" in h and "w" in h
    assert h.sorted() == ["u", "w"]
    assert list(h) == ["u", "w"]
    assert "hereditary" in h.tags


def test_hereditary_closure_pushes_to_sources(g_src, g_2v):
    # u sits above w, so closing {u} pulls w in; {w} is already closed
    assert hereditary_closure(g_src, {"u"}).members == {"u", "w"}
    assert hereditary_closure(g_src, {"w"}).members == {"w"}
    assert hereditary_closure(g_2v, {"v"}).members == {"v", "w"}
    assert hereditary_closure(g_2v, {"w"}).members == {"w"}


def test_hereditary_closure_rejects_unknown_vertex(g_src):
    with pytest.raises(RefError):
        hereditary_closure(g_src, {"zz"})


def test_saturate_requires_hereditary_input(g_src):
    with pytest.raises(NotHereditary):
        saturate(g_src, {"u"}, Degree((1, 1)))


def test_saturate_fixed_points(g_2v, g_src):
    # every path leaving v in g_2v eventually enters {w}, but the edge p
    # keeps v out of the closure at small bounds
    got = saturate(g_2v, {"w"}, Degree((1,)))
    assert got.members == {"w"}
    assert "saturated" in got.tags
    # in g_src both colors at u lead into {w}-bound paths
    got = saturate(g_src, {"w"}, Degree((1, 1)))
    assert got.members == {"u", "w"}
    assert {"saturated", "hereditary"} <= set(got.tags)


def test_cofinality_on_fixtures(graphs):
    expect = {
        "g_loop": "holds",
        "g_o2": "holds",
        "g_t2": "holds",
        "g_flip": "holds",
        "g_src": "fails",
        "g_2v": "fails",
    }
    for name, status in expect.items():
        got = cofinality_check(graphs[name])
        assert got.status == status, name


def test_cofinality_failure_certificates(g_src, g_2v):
    a = cofinality_check(g_src)
    assert a.certificate["kind"] == "pumping"
    assert a.certificate["vertex"] == "w"
    assert a.certificate["confined"] == ["u"]
    assert a.certificate["cycle"] == ["g_u"]
    b = cofinality_check(g_2v)
    assert b.certificate["kind"] == "pumping"
    assert b.certificate["vertex"] == "w"
    assert b.certificate["confined"] == ["v"]
    assert b.certificate["cycle"] == ["p"]


def test_cofinality_holds_certificate_lists_reach(g_loop):
    got = cofinality_check(g_loop)
    assert got.certificate == {"reach": {"v": ["v"]}}


def test_simplicity_report_combination():
    h = Verdict.holds({"w": 1})
    f = Verdict.fails({"w": 2})
    u = Verdict.unknown()
    assert SimpleOf(h, h) == "holds"
    assert SimpleOf(f, h) == "fails"
    assert SimpleOf(h, f) == "fails"
    assert SimpleOf(f, f) == "fails"
    assert SimpleOf(u, h) == "unknown"
    assert SimpleOf(h, u) == "unknown"
    assert SimpleOf(u, f) == "fails"


def SimpleOf(cof, nlp):
    from kgraphs.verdicts import SimplicityReport

    return SimplicityReport(cofinal=cof, nlp=nlp).simple.status


def test_simplicity_report_reasons():
    from kgraphs.verdicts import SimplicityReport

    both = SimplicityReport(cofinal=Verdict.fails({}), nlp=Verdict.fails({}))
    assert both.simple.certificate["reason"] == "not cofinal, local periodicity present"
    assert [c["check"] for c in both.certificates] == ["cofinal", "nlp"]


def test_simplicity_verdicts_on_fixtures(graphs):
    expect = {
        "g_loop": "fails",
        "g_o2": "holds",
        "g_t2": "fails",
        "g_flip": "fails",
        "g_src": "fails",
        "g_2v": "fails",
    }
    for name, status in expect.items():
        report = simplicity_verdict(graphs[name])
        assert report.simple.status == status, name
        assert report.to_json()["simple"]["status"] == status


def test_simplicity_json_keys(g_o2):
    payload = simplicity_verdict(g_o2).to_json()
    assert set(payload) == {"cofinal", "nlp", "simple", "certificates"}
    assert payload["cofinal"]["status"] == "holds"
    assert payload["nlp"]["status"] == "holds"
