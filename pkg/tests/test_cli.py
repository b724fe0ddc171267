from __future__ import annotations

import json

import pytest

from bidikit.cli import run

from conftest import FIXTURE_DIR


def fx(name: str) -> str:
    return str(FIXTURE_DIR / name)


def run_cli(capsys, *argv: str) -> tuple[int, str, str]:
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestKL:
    def test_classes_and_exit_code(self, capsys):
        code, out, _err = run_cli(capsys, "kl", fx("fx2.json"), "--sign", "-")
        assert code == 0
        body = json.loads(out)
        assert body["command"] == "kl"
        assert body["result"]["classes"] == [["1", "3"], ["2", "4"]]

    def test_output_keys_sorted(self, capsys):
        _code, out, _err = run_cli(capsys, "kl", fx("fx2.json"), "--sign", "-")
        body = json.loads(out)
        assert list(body) == sorted(body)


class TestCircularAndComponents:
    def test_circular_edges(self, capsys):
        code, out, _err = run_cli(capsys, "circular", fx("d3.json"))
        assert code == 0
        assert json.loads(out)["result"]["circular_edges"] == ["a0", "a1", "a2"]

    def test_components(self, capsys):
        code, out, _err = run_cli(capsys, "components", fx("t_minus.json"))
        assert code == 0
        assert json.loads(out)["result"]["components"] == [["x"], ["y"], ["z"]]


class TestReach:
    def test_profile(self, capsys):
        code, out, _err = run_cli(
            capsys, "reach", fx("d3.json"), "--from", "a", "--to", "b"
        )
        assert code == 0
        profile = json.loads(out)["result"]["profile"]
        assert profile["(-,+)"] is True
        assert profile["(-,-)"] is False

    def test_unknown_vertex_is_input_error(self, capsys):
        code, _out, err = run_cli(
            capsys, "reach", fx("d3.json"), "--from", "a", "--to", "zz"
        )
        assert code == 2
        assert "UNKNOWN_ID" in err


class TestBFactor:
    def test_infeasible_exit_one(self, capsys):
        code, out, _err = run_cli(capsys, "bfactor", fx("triangle_b1.json"))
        assert code == 1
        assert json.loads(out)["result"]["found"] is False

    def test_force_flags(self, capsys):
        code, out, _err = run_cli(
            capsys, "bfactor", fx("c4_b1.json"), "--force", "e23"
        )
        assert code == 0
        assert json.loads(out)["result"]["edges"] == ["e23", "e41"]


class TestBKL:
    def test_reduction_method(self, capsys):
        code, out, _err = run_cli(
            capsys, "bkl", fx("c4_b1.json"), "--sign", "+", "--method", "reduction"
        )
        assert code == 0
        assert json.loads(out)["result"]["classes"] == [["1", "3"], ["2", "4"]]


class TestExportDot:
    def test_stdout(self, capsys):
        code, out, _err = run_cli(capsys, "export-dot", fx("fx2.json"), "--sign", "-")
        assert code == 0
        assert out.startswith("graph G {")
        assert out.count("fillcolor") == 4

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "graph.dot"
        code, out, _err = run_cli(
            capsys, "export-dot", fx("fx4.json"), "--out", str(target)
        )
        assert code == 0
        assert out == ""
        assert target.read_text().startswith("graph G {")


class TestVerify:
    def test_passes(self, capsys):
        code, out, _err = run_cli(capsys, "verify", fx("c4_matched.json"))
        assert code == 0
        assert json.loads(out)["result"]["passed"] is True

    def test_empty_graph(self, capsys):
        code, _out, _err = run_cli(capsys, "verify", fx("empty.json"))
        assert code == 0


class TestInputErrors:
    def test_missing_file(self, capsys):
        code, _out, err = run_cli(capsys, "kl", "/nonexistent.json", "--sign", "-")
        assert code == 2
        assert "cannot read" in err

    def test_invalid_json(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{nope")
        code, _out, err = run_cli(capsys, "kl", str(bad), "--sign", "-")
        assert code == 2
        assert "PARSE_ERROR" in err

    def test_validation_error(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(
            '{"vertices": ["a"], "edges": [{"id": "e", "u": "a", "v": "b", "su": "+", "sv": "+"}]}'
        )
        code, _out, err = run_cli(capsys, "kl", str(bad), "--sign", "-")
        assert code == 2
        assert "VALIDATION_ERROR" in err

    def test_bad_sign_flag(self, capsys):
        with pytest.raises(SystemExit) as excinfo:
            run(["kl", fx("fx2.json"), "--sign", "*"])
        assert excinfo.value.code == 2


class TestDeterminism:
    @pytest.mark.parametrize(
        "name",
        ["fx2.json", "d3.json", "t_minus.json", "c4_b1.json", "pendant.json"],
    )
    def test_repeat_runs_are_byte_identical(self, capsys, name):
        for argv in (
            ["verify", fx(name)],
            ["kl", fx(name), "--sign", "-"],
            ["export-dot", fx(name), "--sign", "-"],
        ):
            _c1, out1, _ = run_cli(capsys, *argv)
            _c2, out2, _ = run_cli(capsys, *argv)
            assert out1 == out2
