"""Smoke tests for the python bindings."""

import math

import pytest

import arquiver as aq


@pytest.fixture()
def q1():
    return aq.Quiver(points=["0"], parity="even")


def test_quiver_construction(q1):
    assert "s_0=0 (sink)" in q1.describe()
    q = aq.Quiver.from_json('{"points": ["0", "1"], "first_index_parity": "odd"}')
    assert "s_-1=0 (source)" in q.describe()
    with pytest.raises(aq.DomainError):
        aq.Quiver(points=["1", "0"], parity="even")


def test_order_queries(q1):
    assert q1.precedes("3/2", "1/2")
    assert not q1.precedes("1/2", "-1/2")
    assert q1.local_direction("0.5") == "ascending"
    assert q1.local_direction("-0.5") == "descending"


def test_intervals_and_classification(q1):
    assert aq.parse_interval("[0.5, 2)") == "[1/2,2)"
    flags = aq.classify(q1, "[0,1]")
    assert flags["projective"] and not flags["injective"]
    assert aq.classify(q1, "(-inf,+inf)")["injective"]
    with pytest.raises(aq.DomainError):
        aq.parse_interval("[-inf,0]")


def test_hom_and_ext(q1):
    dim, witness = aq.hom(q1, "[0,1]", "[0,2]")
    assert (dim, witness) == (1, "[0,1]")
    assert aq.hom(q1, "[0,2]", "[0,1]")[0] == 0
    ext = aq.ext(q1, "[2,3)", "[1,2)")
    assert ext["dim"] == 1 and ext["middle"] == ("[1,3)",)
    ext = aq.ext(q1, "[1/2,2]", "[0,1]")
    assert ext["middle"] == ("[0,2]", "[1/2,1]")


def test_ar_sequence(q1):
    seq = aq.ar_sequence(q1, "[0.5,2)")
    assert seq["type"] == 1
    assert seq["terms"] == ("[1/2,2)", "[1/2,2]", "(1/2,2)", "(1/2,2]")
    assert aq.ar_sequence(q1, "{0.5}")["reason"] == "simple"


def test_geometry(q1):
    x, y = aq.gamma(q1, "(-1,1)")
    assert math.isclose(x, math.pi / 2, abs_tol=1e-9)
    assert abs(y) < 1e-9
    x, y = aq.gamma(q1, "[0,1]@1")
    assert math.isclose(x, math.pi / 4 + math.pi, abs_tol=1e-9)
    assert math.isclose(y, -math.pi / 4, abs_tol=1e-9)
    assert aq.position(q1, "[0.5,2)") == 1
    assert aq.metric(q1, "[0.5,2)", "(0.5,2]") == (0.0, 2)


def test_triangle(q1):
    tri = aq.triangle(q1, "[0,2]@0", "[0,1]@1")
    assert tri["kind"] == "almost-complete"
    assert tri["corners"][1] == "(1,2]@0"
    assert tri["phantom"] == "[0,+inf)@0"


def test_render_and_verify(q1):
    svg = aq.render_strip(q1, ["(-1,1)"])
    assert svg.startswith("<?xml") and "<svg" in svg
    ok, report = aq.verify(trials=25, seed=3)
    assert ok, report
