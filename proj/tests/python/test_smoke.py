"""Smoke tests for the Python bindings.

The package is imported from the staged build directory (PYTHONPATH is set
by the test harness); fixtures come from DIMERLAB_FIXTURES.
"""

import json
import os
from pathlib import Path

import pytest

dimerlab = pytest.importorskip("dimerlab")

FIXTURES = Path(os.environ.get("DIMERLAB_FIXTURES", "fixtures"))


def read(name: str) -> str:
    return (FIXTURES / name).read_text()


def test_validate_good_and_bad():
    ok, violations = dimerlab.validate(read("conifold.quiver"))
    assert ok and violations == []
    ok, violations = dimerlab.validate(read("broken.quiver"))
    assert not ok and violations


def test_simple_matchings_conifold():
    assert dimerlab.simple_matchings(read("conifold.quiver")) == [[0], [1], [2], [3]]


def test_contract_example1_reaches_conifold():
    target_text, star, tail = dimerlab.contract(read("example1.quiver"))
    assert star == [4]
    assert tail == [2]
    ok, violations = dimerlab.validate(target_text)
    assert ok
    assert "vertices 2" in target_text.splitlines()[0]


def test_cancellativity_split():
    assert dimerlab.cancellativity(read("conifold.quiver")) == "cancellative"
    assert dimerlab.cancellativity(read("example1.quiver")) == "non-cancellative"


def test_cycle_algebra_and_center():
    text = read("example1.quiver")
    gens = dimerlab.cycle_algebra_gens(text)
    assert sorted(gens) == sorted(["x0^1 x2^1", "x1^1 x2^1", "x0^1 x3^1", "x1^1 x3^1"])
    assert sorted(dimerlab.center_module_gens(text)) == sorted(["x0^1 x2^1", "x1^1 x2^1"])
    assert sorted(dimerlab.origin_gens(text)) == sorted(["x0^1 x2^1", "x1^1 x2^1"])


def test_verdicts():
    assert dimerlab.verdict(read("example1.quiver")) == "NonnoetherianNCCR"
    assert dimerlab.verdict(read("example2.quiver")) == "NonnoetherianNCCR"
    assert dimerlab.verdict(read("conifold.quiver")) == "AssumptionsFail"


def test_certify_json_is_deterministic():
    text = read("example1.quiver")
    a = dimerlab.certify_json(text)
    b = dimerlab.certify_json(text)
    assert a == b
    rep = json.loads(a)
    assert rep["schema_version"] == 1
    assert rep["verdict"] == "NonnoetherianNCCR"
    assert rep["exit_code"] == 0
