"""Exit codes, output shapes, and determinism of the command-line surface."""

import json
import subprocess
import sys

import pytest

from chainsaw.cli import main
from chainsaw.graphs import ChainsawParams, Graph, export_graph, make_chainsaw


def run_cli(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


class TestGenerate:
    def test_edge_list(self, capsys):
        rc, out, _ = run_cli(capsys, "generate", "--family", "cycle", "--n", "2", "--format", "edge-list")
        assert (rc, out) == (0, "0 1\n")

    def test_json(self, capsys):
        rc, out, _ = run_cli(
            capsys, "generate", "--family", "chainsaw", "--n", "2", "--a", "2", "--b", "1",
            "--format", "json",
        )
        assert rc == 0
        obj = json.loads(out)
        assert obj["order"] == 4
        assert len(obj["edges"]) == 5

    def test_constraint_violation_is_a_usage_error(self, capsys):
        rc, out, err = run_cli(capsys, "generate", "--family", "chainsaw", "--n", "1", "--a", "2", "--b", "3")
        assert rc == 2
        assert out == ""
        assert "a >= b >= 1" in err

    def test_blade_options_rejected_for_plain_families(self, capsys):
        rc, _, err = run_cli(capsys, "generate", "--family", "path", "--n", "3", "--a", "2")
        assert rc == 2
        assert "--a" in err

    def test_unknown_format_is_an_argparse_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["generate", "--family", "path", "--n", "3", "--format", "graphml"])
        assert exc.value.code == 2


class TestCount:
    @pytest.mark.parametrize(
        "argv,expected",
        [
            (["count", "--family", "cycle", "--n", "5", "--method", "eliminate"], "11\n"),
            (["count", "--family", "broken", "--n", "1", "--a", "2", "--b", "1", "--method", "closed-form"], "5\n"),
            (["count", "--family", "path", "--n", "0", "--method", "brute"], "1\n"),
        ],
    )
    def test_frozen_examples(self, capsys, argv, expected):
        rc, out, _ = run_cli(capsys, *argv)
        assert (rc, out) == (0, expected)

    def test_methods_agree(self, capsys):
        outputs = set()
        for method in ("brute", "eliminate", "closed-form"):
            rc, out, _ = run_cli(capsys, "count", "--family", "chainsaw", "--n", "3", "--a", "2", "--b", "1",
                                 "--method", method)
            assert rc == 0
            outputs.add(out)
        assert outputs == {"14\n"}

    def test_brute_over_cap_exits_3(self, capsys):
        rc, out, err = run_cli(capsys, "count", "--family", "chainsaw", "--n", "7", "--a", "4", "--b", "1",
                               "--method", "brute")
        assert rc == 3
        assert out == ""
        assert "oracle cap exceeded" in err

    def test_missing_blade_options_exit_2(self, capsys):
        rc, _, err = run_cli(capsys, "count", "--family", "chainsaw", "--n", "3")
        assert rc == 2
        assert "requires --a and --b" in err


class TestPoly:
    @pytest.mark.parametrize(
        "argv,expected",
        [
            (["poly", "--family", "path", "--n", "4"], "[1, 4, 3]\n"),
            (["poly", "--family", "cycle", "--n", "4"], "[1, 4, 2]\n"),
            (["poly", "--family", "chainsaw", "--n", "1", "--a", "1", "--b", "1"], "[1]\n"),
        ],
    )
    def test_frozen_examples(self, capsys, argv, expected):
        rc, out, _ = run_cli(capsys, *argv)
        assert (rc, out) == (0, expected)


class TestSeq:
    @pytest.mark.parametrize(
        "argv,expected",
        [
            (["seq", "--kind", "V", "--n", "0", "--p", "7", "--q", "9"], "2\n"),
            (["seq", "--kind", "U", "--n", "10", "--p", "1", "--q", "-1"], "55\n"),
            (["seq", "--kind", "D", "--n", "3", "--p", "2", "--q", "1", "--method", "summation"], "2\n"),
        ],
    )
    def test_frozen_examples(self, capsys, argv, expected):
        rc, out, _ = run_cli(capsys, *argv)
        assert (rc, out) == (0, expected)

    def test_summation_of_lucas_kind_exits_2(self, capsys):
        rc, _, err = run_cli(capsys, "seq", "--kind", "V", "--n", "3", "--p", "1", "--q", "1",
                             "--method", "summation")
        assert rc == 2
        assert "summation" in err

    def test_negative_index_exits_2(self, capsys):
        rc, _, err = run_cli(capsys, "seq", "--kind", "U", "--n", "-4", "--p", "1", "--q", "1")
        assert rc == 2
        assert "nonnegative" in err

    def test_huge_index_prints_in_full(self, capsys):
        rc, out, _ = run_cli(capsys, "seq", "--kind", "V", "--n", "30000", "--p", "7", "--q", "-3",
                             "--method", "matrix")
        assert rc == 0
        # ~26k digits; would exceed the default int-to-str guard
        assert len(out.strip()) > 20000
        assert out.strip().isdigit()


class TestVerify:
    def test_small_sweep_passes(self, capsys):
        rc, out, _ = run_cli(capsys, "verify", "--n-max", "1", "--a-max", "1")
        assert rc == 0
        report = json.loads(out)
        assert report["summary"]["all_pass"] is True
        assert report["summary"]["failed"] == 0
        singleton = [
            c
            for c in report["checks"]
            if c["identity"] == "chainsaw count: closed form == V(n, a, -b)"
            and c["params"] == {"n": 1, "a": 1, "b": 1}
        ]
        assert singleton == [
            {
                "identity": "chainsaw count: closed form == V(n, a, -b)",
                "params": {"n": 1, "a": 1, "b": 1},
                "left": "1",
                "right": "1",
                "pass": True,
            }
        ]

    def test_every_value_serializes_as_a_string(self, capsys):
        rc, out, _ = run_cli(capsys, "verify", "--n-max", "2", "--a-max", "2")
        assert rc == 0
        for check in json.loads(out)["checks"]:
            assert isinstance(check["left"], str)
            assert isinstance(check["right"], str)

    def test_injection_flags_must_come_together(self, capsys):
        rc, _, err = run_cli(capsys, "verify", "--n-max", "1", "--a-max", "1", "--inject-n", "4")
        assert rc == 2
        assert "together" in err

    def test_intact_injection_passes(self, capsys, tmp_path):
        params = ChainsawParams(4, 2, 1)
        path = tmp_path / "intact.json"
        path.write_text(export_graph(make_chainsaw(params), "json"), encoding="utf-8")
        rc, out, _ = run_cli(
            capsys, "verify", "--n-max", "1", "--a-max", "1",
            "--inject-graph", str(path), "--inject-family", "chainsaw",
            "--inject-n", "4", "--inject-a", "2", "--inject-b", "1",
        )
        assert rc == 0
        assert json.loads(out)["summary"]["all_pass"] is True

    def test_perturbed_injection_fails_but_reports_fully(self, capsys, tmp_path):
        params = ChainsawParams(4, 2, 1)
        g = make_chainsaw(params)
        perturbed = Graph.build(g.order, g.edges()[1:], g.loops, g.roles)
        path = tmp_path / "perturbed.json"
        path.write_text(export_graph(perturbed, "json"), encoding="utf-8")
        rc, out, _ = run_cli(
            capsys, "verify", "--n-max", "1", "--a-max", "1",
            "--inject-graph", str(path), "--inject-family", "chainsaw",
            "--inject-n", "4", "--inject-a", "2", "--inject-b", "1",
        )
        assert rc == 1
        report = json.loads(out)
        assert report["summary"]["all_pass"] is False
        assert report["summary"]["failed"] == 1
        injected = [c for c in report["checks"] if c["identity"].startswith("injected")]
        assert len(injected) == 1 and injected[0]["pass"] is False
        # the sweep itself still ran and passed
        assert report["summary"]["total"] > 1

    def test_missing_injection_file_exits_2(self, capsys, tmp_path):
        rc, _, err = run_cli(
            capsys, "verify", "--n-max", "1", "--a-max", "1",
            "--inject-graph", str(tmp_path / "absent.json"), "--inject-family", "chainsaw",
            "--inject-n", "4", "--inject-a", "2", "--inject-b", "1",
        )
        assert rc == 2
        assert err.startswith("error:")

    def test_malformed_injection_file_exits_2(self, capsys, tmp_path):
        path = tmp_path / "noise.json"
        path.write_text('{"order": "soup"}\n')
        rc, _, err = run_cli(
            capsys, "verify", "--n-max", "1", "--a-max", "1",
            "--inject-graph", str(path), "--inject-family", "chainsaw",
            "--inject-n", "4", "--inject-a", "2", "--inject-b", "1",
        )
        assert rc == 2
        assert "malformed" in err


class TestBench:
    def test_graph_bench_compares_engines(self, capsys):
        rc, out, _ = run_cli(
            capsys, "bench", "--family", "cycle", "--n", "12",
            "--methods", "brute", "brute-jit", "brute-numpy", "eliminate", "closed-form",
        )
        assert rc == 0
        report = json.loads(out)
        assert report["agree"] is True
        assert [row["method"] for row in report["results"]] == [
            "brute", "brute-jit", "brute-numpy", "eliminate", "closed-form",
        ]
        assert {row["value"] for row in report["results"]} == {"322"}
        assert all(row["seconds"] >= 0 for row in report["results"])

    def test_seq_bench_has_a_checkpoint(self, capsys):
        rc, out, _ = run_cli(
            capsys, "bench", "--family", "seq", "--kind", "V", "--n", "2000",
            "--p", "1", "--q", "-1", "--methods", "recurrence", "matrix",
        )
        assert rc == 0
        report = json.loads(out)
        assert report["agree"] is True
        assert report["checkpoint"]["n"] == 1000
        assert report["checkpoint"]["agree"] is True
        assert report["checkpoint"]["matrix"] == report["checkpoint"]["recurrence"]

    def test_seq_bench_requires_sequence_options(self, capsys):
        rc, _, err = run_cli(capsys, "bench", "--family", "seq", "--n", "10", "--methods", "matrix")
        assert rc == 2
        assert "--kind" in err

    def test_unknown_method_exits_2(self, capsys):
        rc, _, err = run_cli(capsys, "bench", "--family", "cycle", "--n", "8", "--methods", "quantum")
        assert rc == 2
        assert "quantum" in err


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ["generate", "--family", "chainsaw", "--n", "3", "--a", "3", "--b", "2", "--format", "json"],
            ["generate", "--family", "broken", "--n", "2", "--a", "3", "--b", "1", "--format", "dimacs"],
            ["count", "--family", "chainsaw", "--n", "4", "--a", "2", "--b", "2", "--method", "eliminate"],
            ["poly", "--family", "cycle", "--n", "9"],
            ["seq", "--kind", "E", "--n", "40", "--p", "3", "--q", "2", "--method", "matrix"],
            ["verify", "--n-max", "2", "--a-max", "2"],
        ],
    )
    def test_repeat_invocations_are_byte_identical(self, capsys, argv):
        first = run_cli(capsys, *argv)
        second = run_cli(capsys, *argv)
        assert first == second
        assert first[0] == 0


class TestEntryPoints:
    def test_module_invocation(self):
        out = subprocess.run(
            [sys.executable, "-m", "chainsaw", "count", "--family", "cycle", "--n", "5"],
            capture_output=True,
            text=True,
        )
        assert out.returncode == 0
        assert out.stdout == "11\n"

    def test_missing_subcommand_is_an_argparse_error(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2
