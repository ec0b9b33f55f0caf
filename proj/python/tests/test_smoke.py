import json

import pytest

import gsq


def test_slope_ops():
    assert gsq.normalize_slope("-4/6") == "-2/3"
    assert gsq.intersection_number("1/2", "3/4") == 4
    assert gsq.apply_twist("0/1^1", "1/1") == "-1/1"
    terminal, word = gsq.reduce("7/3")
    assert terminal == "1/1"
    assert word == ["inf^-1", "0/1^1"]


def test_bad_slope():
    with pytest.raises(ValueError):
        gsq.normalize_slope("1/x")


def test_fiber_and_lift():
    f = gsq.Fiber(3, 2)
    assert (f.genus, f.order) == (2, 6)
    assert f.lift_components("2/1") == 6
    assert f.recognize_lift("5/3") == "5/3"
    assert sorted(b for _, b, _ in f.census("2/1")) == [2, 2, 2, 3, 3]
    doc = gsq.lift_report(3, 2, "2/1")
    assert doc["schema_version"] == 1
    assert len(doc["multicurve"]["components"]) == 6


def test_bad_params():
    with pytest.raises(gsq.ParameterError):
        gsq.Fiber(1, 2)


def test_derivative():
    r = gsq.derivative_report(3, 2, "2/1")
    assert r["verdict"] is True
    assert r["linking_zero"] is True
    with pytest.raises(gsq.UnsupportedSlope):
        gsq.derivative_report(3, 2, "1/1")


def test_farey():
    assert gsq.summand_slopes(5, 3) == ((3, 2), (2, 1))
    path = gsq.slide_path(("2/1", "1/1"))
    assert path["valid"] is True
    assert path["length"] == len(path["steps"])


@pytest.mark.parametrize("p,q,slope", [(3, 2, "2/1"), (5, 2, "-2/3")])
def test_trisection_round_trip(p, q, slope):
    d = gsq.trisection_diagram(p, q, slope)
    report = gsq.verify_diagram(d)
    assert report["ok"] is True
    assert report["unimodular"] is True
    g = report["genus"]
    assert report["trisection_parameters"] == [g, 0, g // 2, g // 2]
    assert gsq.verify_diagram(json.dumps(d)) == report


def test_corrupted_diagram_fails():
    d = gsq.trisection_diagram(3, 2, "2/1")
    d["systems"]["gamma"][1] = d["systems"]["gamma"][0]
    assert gsq.verify_diagram(d)["ok"] is False
