import json
import math

import pytest

import sturmian

GOLDEN = {"A": [[1, 0], [1, 1]], "B": [[1, 1], [0, 1]]}


def test_version():
    assert sturmian.__version__ == "0.1.0"


def test_classify_default_and_explicit():
    assert sturmian.classify()["class"] == "parabolic_pair"
    scaled = {"A": [[2, 0], [2, 2]], "B": [["1/3", "1/3"], [0, "1/3"]]}
    assert sturmian.classify(scaled)["class"] == "parabolic_pair"
    crossing = {"A": [[2, 0], [0, 1]], "B": [[1, 1], [1, 2]]}
    assert sturmian.classify(crossing)["class"] not in ("co_parallel", "mixed", "parabolic_pair")


def test_slope_and_chi():
    r = sturmian.maximize_slope(max_den=1000)
    assert r["tau"] == "1/2"
    assert r["certified"]
    chi = sturmian.chi_rational(GOLDEN, 1, 2)["chi"]
    assert chi == pytest.approx(math.log((3 + math.sqrt(5)) / 2) / 2, abs=1e-12)


def test_trace_argmax():
    t = sturmian.trace_argmax(GOLDEN, 2, 4)
    assert json.dumps(t["maximizers"]) == json.dumps(["0101", "1010"])


def test_jsr():
    j = sturmian.jsr_bounds(depth=8)
    assert j["lower"] == pytest.approx((1 + math.sqrt(5)) / 2, abs=1e-12)
    assert j["upper"] >= j["lower"]


def test_bad_pair_raises():
    with pytest.raises(ValueError):
        sturmian.classify({"A": [[1, 0], [0, 1]]})


def test_run_cli_matches_bindings():
    code, out, err = sturmian.run_cli(["slope", "--max-den", "1000"])
    assert code == 0 and err == ""
    assert json.loads(out)["outputs"] == sturmian.maximize_slope(max_den=1000)
    code, _, err = sturmian.run_cli(["slope", "--bogus"])
    assert code == 2
    assert json.loads(err)["error"]["kind"] == "usage"
    code, out, _ = sturmian.run_cli(["classify", "--pair", "-"], json.dumps(GOLDEN))
    assert code == 0
    assert json.loads(out)["outputs"]["class"] == "parabolic_pair"
