"""Tests for the command-line entry point and result records."""

import json

import pytest

from src.constructions import build_general
from src.greene import greene_profile
from src.main import EXIT_INVALID, EXIT_OK, EXIT_REFUSED, EXIT_VERIFY, main
from src.metrics import delta
from src.report import ResultRecord, jsonable, parse_csv, render_diagram
from src.search import CheckResult
from src.search import verify as verify_module
from src.tableaux import Partition, Permutation, rsk, shape

from .conftest import PI_18


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


class TestCommands:
    def test_rsk(self, capsys):
        code, doc = run_json(capsys, "rsk", "--perm", "1 2 3")
        assert code == EXIT_OK
        assert doc["command"] == "rsk"
        assert doc["outputs"]["shape"] == [3]
        assert doc["outputs"]["P"] == [[1, 2, 3]]

    def test_delta(self, capsys):
        code, doc = run_json(capsys, "delta", "--lam", "6 4 4 2 2", "--mu", "5 5 3 3 1 1")
        assert code == EXIT_OK
        assert doc["outputs"]["delta"] == 3

    def test_distance(self, capsys):
        code, doc = run_json(capsys, "distance", "--pi", "1 2 3", "--tau", "3 2 1", "--side", "right")
        assert code == EXIT_OK
        assert doc["outputs"]["distance"] == 3

    def test_construct(self, capsys):
        code, doc = run_json(capsys, "construct", "--n", "18")
        assert code == EXIT_OK
        assert doc["outputs"]["pi"] == list(PI_18)
        assert doc["outputs"]["delta"] == 3
        assert doc["outputs"]["distance"] == 1

    def test_construct_witness(self, capsys):
        code, doc = run_json(capsys, "construct", "--n", "18", "--emit-witness")
        assert code == EXIT_OK
        assert doc["outputs"]["witness"]["n0"] == 18
        assert doc["outputs"]["witness"]["pi"]["decreasing"]["sizes"] == [5, 5, 3, 3, 1, 1]

    def test_greene(self, capsys):
        code, doc = run_json(capsys, "greene", "--perm", "2 1 4 3", "--j", "1")
        assert code == EXIT_OK
        assert doc["outputs"]["mu_j"] == 2

    @pytest.mark.parametrize("perm", ["3 1 2", "2 1 4 3", " ".join(map(str, PI_18))])
    def test_outputs_match_library(self, capsys, perm):
        pi = Permutation.parse(perm)
        _, doc = run_json(capsys, "rsk", "--perm", perm)
        assert doc["outputs"] == jsonable(rsk(pi).to_dict())
        _, doc = run_json(capsys, "greene", "--perm", perm)
        assert doc["outputs"] == jsonable(greene_profile(pi).to_dict())
        assert doc["outputs"]["shape"] == shape(pi).to_list()

    def test_construct_matches_library(self, capsys):
        _, doc = run_json(capsys, "construct", "--n", "36", "--t", "2")
        g = build_general(36, 2)
        for key, value in jsonable(g.to_dict()).items():
            assert doc["outputs"][key] == value
        assert doc["outputs"]["delta"] == delta(shape(g.pi), shape(g.tau))

    def test_reduce(self, capsys):
        code, doc = run_json(capsys, "reduce", "--lam", "2", "--mu", "1 1")
        assert code == EXIT_OK
        assert doc["outputs"]["sequences"]["a"] == [1, 1]
        assert doc["outputs"]["sequences"]["b"] == [1, 1]

    def test_seqlemma_enumerate(self, capsys):
        code, doc = run_json(capsys, "seqlemma", "--mode", "enumerate", "--k", "2", "--T", "3")
        assert code == EXIT_OK
        assert doc["outputs"]["minimizer"] == {"a": [1, 3], "b": [3, 1], "T": 3}

    def test_diagram_text(self, capsys):
        code, out = run(capsys, "diagram", "--lam", "2 1", "--format", "text")
        assert code == EXIT_OK
        assert out == "##\n#\n"


class TestExitCodes:
    def test_invalid_permutation(self, capsys):
        code, out = run(capsys, "rsk", "--perm", "1 1 2")
        assert code == EXIT_INVALID
        assert out == ""

    def test_invalid_partition(self, capsys):
        code, _ = run(capsys, "delta", "--lam", "1 2", "--mu", "3")
        assert code == EXIT_INVALID

    def test_out_of_range_j(self, capsys):
        code, out = run(capsys, "greene", "--perm", "2 1 3", "--j", "4")
        assert code == EXIT_INVALID
        assert out == ""

    def test_refused(self, capsys):
        code, _ = run(capsys, "search", "--n", "10", "--workers", "1")
        assert code == EXIT_REFUSED

    def test_verify_passes(self, capsys):
        code, doc = run_json(capsys, "verify", "--suite", "paper-example")
        assert code == EXIT_OK
        assert doc["outputs"]["passed"] is True

    def test_verify_failure(self, capsys, monkeypatch):
        monkeypatch.setitem(verify_module.SUITES, "kkt", lambda config: [CheckResult("forced", False)])
        code, doc = run_json(capsys, "verify", "--suite", "kkt")
        assert code == EXIT_VERIFY
        assert doc["outputs"]["passed"] is False

    def test_no_command(self, capsys):
        assert main([]) == EXIT_INVALID


class TestSweepOutput:
    ARGS = ("search", "--mode", "walk", "--n", "12", "--t", "3", "--trials", "25", "--seed", "5", "--workers", "1")

    def test_seeded_runs_are_identical(self, capsys):
        _, first = run(capsys, *self.ARGS)
        _, second = run(capsys, *self.ARGS)
        assert first == second
        assert json.loads(first)["outputs"]["seed"] == 5

    def test_csv(self, capsys):
        code, out = run(capsys, *self.ARGS, "--format", "csv")
        assert code == EXIT_OK
        assert out.splitlines()[0] == "trial,n,t,realized_d,delta,ratio"
        rows = parse_csv(out)
        assert len(rows) == 25
        assert [int(r["trial"]) for r in rows] == list(range(25))

    def test_jsonl(self, capsys):
        code, out = run(capsys, *self.ARGS, "--jsonl")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert len(lines) == 25
        assert all(json.loads(line)["t"] == 3 for line in lines)

    def test_general_sweep(self, capsys):
        code, doc = run_json(capsys, "sweep-general", "--n", "10", "--t", "2", "--trials", "10", "--workers", "1")
        assert code == EXIT_OK
        assert doc["outputs"]["mode"] == "general"


class TestRecords:
    def test_round_trip(self):
        record = ResultRecord.build("delta", {"lam": "2"}, {"delta": 1, "shape": Partition((2, 1))})
        again = ResultRecord.from_json(record.to_json())
        assert again == record
        assert again.outputs["shape"] == [2, 1]

    def test_stable_bytes(self):
        a = ResultRecord.build("x", {"b": 1, "a": 2}, {"z": 1, "y": [1, 2]})
        b = ResultRecord.build("x", {"a": 2, "b": 1}, {"y": [1, 2], "z": 1})
        assert a.to_json() == b.to_json()
        assert " " not in a.to_json()

    def test_render_overlay(self):
        assert render_diagram(Partition((2,)), Partition((1, 1))) == "#o\nx"
