import json
import os
import pathlib

import pytest

import cotorlab

PROBLEMS = pathlib.Path(os.environ.get("COTORLAB_PROBLEMS_DIR", pathlib.Path(__file__).parents[2] / "problems"))
F2 = {"type": "Fp", "p": 2}


def load(name):
    return json.loads((PROBLEMS / f"{name}.json").read_text())


def kx2(task):
    return {
        "field": F2,
        "objects": {
            "A": {"kind": "algebra", "builtin": "truncated_polynomial", "n": 2},
            "M": {"kind": "left_module", "algebra": "A", "builtin": "trivial"},
            "N": {"kind": "right_module", "algebra": "A", "builtin": "trivial"},
            "B": {"kind": "bimodule", "algebra": "A", "builtin": "regular"},
        },
        "task": task,
    }


def test_commands_listed():
    assert {"validate", "cotor", "hochschild", "compare", "tower"} <= set(cotorlab.commands())


def test_named_hochschild_values():
    r = cotorlab.hochschild(kx2({"bimodule": "B", "max_degree": 3}))
    assert r["result"]["hochschild"] == [2, 2, 2, 2]
    r = cotorlab.hochschild(kx2({"left": "M", "right": "N"}), max_degree=3)
    assert r["result"]["hochschild"] == [1, 1, 1, 1]


def test_compare_and_cotensor():
    r = cotorlab.compare(kx2({"left": "M", "right": "N"}))
    assert r["result"]["verdict"] == "pass"
    r = cotorlab.cotensor(kx2({"left": "M", "right": "N"}))
    assert r["result"]["cotensor_dim"] == r["result"]["hom_Ae_dim"] == 1


def test_graded_and_dg_corpus_problems():
    r = cotorlab.run("graded-compare", load("exterior_h0_graded_compare"))
    assert r["result"]["verdict"] == "pass"
    dims = r["result"]["cotor"]["dims"]
    assert all(dims[n][t] == (1 if n == t else 0) for n in range(5) for t in range(5))
    r = cotorlab.run("dg-compare", load("s2_loop_dg_compare"))
    assert r["result"]["cotor"]["dims"][:6] == [1] * 6


def test_tower():
    r = cotorlab.run("tower", load("zp_tower"))
    assert r["result"]["stable_dims"] == [1, 1, 0, 0]


def test_errors_map_to_python_exceptions():
    with pytest.raises(cotorlab.ValidationError):
        cotorlab.run("compare", load("broken_module_compare"))
    report = cotorlab.validate(load("broken_module_compare"))
    assert report["all_valid"] is False
    bad = {"field": F2, "objects": {"M": {"kind": "left_module", "algebra": "X", "builtin": "regular"}}}
    with pytest.raises(cotorlab.ReferenceError):
        cotorlab.validate(bad)
    with pytest.raises(cotorlab.SchemaError):
        cotorlab.validate({"field": F2, "objects": {"A": {"kind": "widget"}}})
    with pytest.raises(cotorlab.TaskError):
        cotorlab.run("hochschild", load("kx2_trivial_cotor"))


def test_normalize_round_trip():
    p = load("m2_column_row_cotensor")
    once = cotorlab.normalize(p)
    assert cotorlab.normalize(once) == once
    assert cotorlab.cotensor(once)["result"]["cotensor_dim"] == 1


def test_linear_algebra_helpers():
    Q = {"type": "Q"}
    assert cotorlab.rank(Q, [[1, 2], [2, 4]]) == 1
    assert cotorlab.kernel(F2, [[1, 1]]) == [[1, 1]]
    assert cotorlab.solve({"type": "Fp", "p": 5}, [[2]], [1]) == [3]
    assert cotorlab.solve(Q, [[0]], [1]) is None
    assert cotorlab.kernel(Q, [["1/2", 1]]) == [["-2", "1"]] or cotorlab.kernel(Q, [["1/2", 1]]) == [["-2/1", "1"]]
