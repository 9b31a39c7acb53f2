import json
import pathlib

import pytest

import kirk

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def test_expand():
    assert kirk.expand("x2 x1 x2^-1", 3, 3) == "1 + X1 - X1X2 + X2X1"
    assert kirk.expand("x1^-1", 3, 3) == "1 - X1"
    assert kirk.expand("", 3, 3) == "1"
    assert kirk.expand_terms("x1 x2", 3, 3) == [([], 1), ([1], 1), ([2], 1), ([1, 2], 1)]


def test_positivity_and_equality():
    assert kirk.is_positive("x1 x2^-1", 3, 3)
    assert not kirk.is_positive("x1^-1", 3, 3)
    assert kirk.rf_equal("[x1,[x1,x2]]", "", 3, 3)
    assert not kirk.rf_equal("x1 x2", "x2 x1", 3, 3)


def test_catalog_values():
    y4 = kirk.catalog_emit("y-family", n=4)
    s4 = kirk.catalog_emit("stirling", n=4)
    assert kirk.kappa_tilde(y4, 4, [1, 2, 3]) == (1, 0)
    assert kirk.kappa_tilde(s4, 4, (1, 2, 3)) == (-1, 0)
    assert kirk.sigma(s4, 4) == "0"
    assert kirk.k_multiset(kirk.catalog_emit("stirling", n=5, reversed=3), 5) == "{(-1, X1), (1, X1)}"

    y = kirk.catalog_emit("y-modified")
    assert kirk.e_invariant(y, 3) == "0"
    k = kirk.k_sequence(y, 3, [2])
    assert k["filtered"] == [(1, -1, 0), (1, 1, 0)]
    assert k["full"] == [(-1, 0, 0), (-1, 0, 0), (1, -1, 0), (1, 1, 0)]

    fr = kirk.catalog_emit("fenn-rolfsen")
    assert kirk.kirk_classical(fr) == ("1-t", "t-1")
    assert set(kirk.catalog_names()) == {"fenn-rolfsen", "y-family", "stirling", "y-modified"}


def test_report_checks_pass():
    entry = kirk.catalog_emit("stirling", n=5)
    report = kirk.report(json.dumps(entry), all=True)
    assert report["input"]["n"] == 5
    assert [c["component"] for c in report["components"]] == [1, 2, 3, 4, 5]
    only = kirk.report(entry, component=5, sequence=[1, 2, 3, 4])
    assert only["components"][0]["kappa"][0]["kappa_tilde"] == "-1"


def test_compare():
    s4 = kirk.catalog_emit("stirling", n=4)
    s24 = kirk.catalog_emit("stirling", n=4, reversed=2)
    result = kirk.compare(s4, s24)
    assert result["verdict"] == "DISTINGUISHED"
    assert "kappa_tilde(123;4): -1 vs 1" in result["witnesses"]
    assert kirk.compare(s4, s4)["verdict"] == "INDISTINGUISHABLE-BY-THESE-INVARIANTS"
    with pytest.raises(kirk.ArityMismatch):
        kirk.compare(s4, kirk.catalog_emit("y-modified"))


def test_from_cross_section():
    fr = json.loads((DATA / "fenn_rolfsen_cross_section.json").read_text())
    p = kirk.from_cross_section(fr)
    assert p == {"n": 2, "components": {"1": [{"sign": -1, "word": "x2"}], "2": [{"sign": 1, "word": "x1"}]}}
    with pytest.raises(kirk.NonStabilizing):
        kirk.from_cross_section((DATA / "hopf_cross_section.json").read_text())
    with pytest.raises(kirk.MalformedDiagram):
        kirk.from_cross_section((DATA / "malformed_diagram.json").read_text())


def test_errors():
    with pytest.raises(kirk.ParseError):
        kirk.expand("[x1,", 3, 3)
    with pytest.raises(ValueError):
        kirk.expand("x3", 3, 3)
    with pytest.raises(kirk.InvalidInput):
        kirk.kappa_tilde({"n": 3, "components": {}}, 3, [3])
    with pytest.raises(kirk.InvalidInput):
        kirk.e_invariant("{not json", 1)
