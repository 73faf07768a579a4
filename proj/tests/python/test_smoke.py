"""Smoke tests for the Python bindings."""

import os

import pytest

import skhodge


def data(name: str) -> str:
    root = os.environ.get(
        "SKHODGE_DATA_DIR",
        os.path.join(os.path.dirname(__file__), "..", "..", "data"),
    )
    return os.path.join(root, name)


def test_a2_pipeline():
    div = skhodge.Divisor(data("a2.div"))
    assert div.variables == ["x", "y", "z"]
    assert div.strongly_koszul()
    beta, r = div.beta_bar()
    assert r == 1
    i0 = div.hodge_ideal_0_direct()
    assert sorted(i0) == ["x - z", "y - z"]
    assert div.hodge_ideal(0) == i0
    gl = div.generating_level(2)
    assert gl["level"] == 0
    assert gl["level"] <= gl["r"]


def test_normal_crossing_matches_order_filtration():
    div = skhodge.Divisor(data("nc2.div"))
    assert div.hodge_equals_ord(1)
    rep = div.check_inclusions(1)
    assert rep["ok"]


def test_computed_bfunction():
    div = skhodge.Divisor(data("nc2.div"))
    assert div.compute_bfunction() == "(s + 1)^2"


def test_extended_scope_warning():
    div = skhodge.Divisor(data("whitney.div"))
    assert div.extended_scope
    assert any("extended scope" in w for w in div.warnings)


def test_bad_file_raises():
    with pytest.raises(skhodge.DivFileError):
        skhodge.Divisor(data("does-not-exist.div"))
