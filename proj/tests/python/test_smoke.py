"""End-to-end smoke tests for the python bindings."""

import json

import pytest

import posetdecomp as pd

SQUARE = json.dumps(
    {
        "elements": ["∅", "1", "2", "12"],
        "relations": [["∅", "1"], ["∅", "2"], ["1", "12"], ["2", "12"]],
    }
)


def test_complex_counts_and_determinism():
    first = pd.complex_json(SQUARE, gset="max")
    second = pd.complex_json(SQUARE, gset="max")
    assert first == second
    doc = json.loads(first)
    assert len(doc["faces"]) == 9
    assert len(json.loads(pd.complex_json(SQUARE))["faces"]) == 11


def test_realize_formats():
    doc = json.loads(pd.realize_json(SQUARE, gset="max", phi="identity"))
    assert doc["n"] == 2
    assert len(doc["cells"]) == 9
    off = pd.realize_json(SQUARE, gset="max", phi="identity", format="off")
    assert off.startswith("OFF")
    with pytest.raises(ValueError):
        pd.realize_json(SQUARE, format="svg")


def test_product_and_coproduct():
    segment = json.dumps({"elements": ["∅", "1"], "relations": [["∅", "1"]]})
    prod = json.loads(pd.product_json(SQUARE, "max", segment, "max"))
    assert len(prod["faces"]) == 27
    assert len(prod["isomorphism"]) == 27
    cop = json.loads(pd.coproduct_json(segment, "min", segment, "min"))
    assert len(cop["faces"]) == 6


def test_nested_and_bergman():
    doc = json.loads(pd.nested_json(SQUARE, building="atoms"))
    assert len(doc["faces"]) == 3
    fan = json.loads(pd.bergman_json(json.dumps({"type": "uniform", "r": 2, "n": 3})))
    assert fan["connected"] is True
    assert len(fan["cones"]) == 4


def test_errors_translate():
    with pytest.raises(ValueError):
        pd.complex_json("not json")
    with pytest.raises(ResourceWarning):
        pd.complex_json(SQUARE, gset="max", max_chains=1)


def test_verify_single_suite():
    assert "b2-counts" in pd.suite_names()
    results = pd.verify(suites="b2-counts")
    assert len(results) == 1
    assert results[0]["pass"] is True
