import json
import os
import subprocess

import pytest

import pdmatch


def test_solve_ir():
    inst = pdmatch.fixture("IR", 3)
    assert inst.rows() == [[1], [3], [3], [3]]
    out = pdmatch.solve(inst)
    assert out["algorithm"] == "const-m"
    assert out["optimal"] and out["size"] == 3
    assert pdmatch.verify(inst, out["edges"])["valid"]


def test_maximal_but_not_strong():
    report = pdmatch.verify(pdmatch.fixture("IR", 4), [(0, 0)])
    assert report == {"valid": True, "maximal": True, "strongly_maximal": False}


def test_class_mismatch_and_budget():
    with pytest.raises(pdmatch.ClassMismatch):
        pdmatch.solve(pdmatch.Instance([[2, 0], [0, 1]]), "udep-mono")
    with pytest.raises(pdmatch.BudgetExceeded):
        pdmatch.solve(pdmatch.gen_random(12, 4, 5, 0.0, 1), "oracle", budget=10)


def test_json_round_trip_and_classify():
    inst = pdmatch.Instance([[3, 2], [2, 1]])
    assert pdmatch.Instance.from_json(inst.to_json()) == inst
    report = json.loads(pdmatch.classify(inst))
    assert report["monotonizable"] is not None
    with pytest.raises(pdmatch.ParseError):
        pdmatch.Instance.from_json('{"jobs": 1}')


def test_greedy_half_of_exact():
    for seed in range(20):
        inst = pdmatch.gen_random(7, 3, 4, 0.2, seed)
        greedy = pdmatch.solve(inst, "greedy")["size"]
        best = pdmatch.solve(inst, "oracle")["size"]
        assert 2 * greedy >= best


@pytest.mark.skipif("PDMATCH_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_matches_module(tmp_path):
    path = tmp_path / "ir.json"
    path.write_text(pdmatch.fixture("IR", 3).to_json())
    res = subprocess.run(
        [os.environ["PDMATCH_CLI"], "solve", "--input", str(path), "--algorithm", "const-m"],
        capture_output=True, text=True, check=True)
    assert json.loads(res.stdout.splitlines()[0])["size"] == 3
