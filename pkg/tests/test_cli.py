from __future__ import annotations

import json
import subprocess
import sys

import pytest

from apexobs.cli import run
from apexobs.graphio import to_edgelist, to_graph6
from apexobs.graphs import make_named


def invoke(capsys, *argv) -> tuple[int, str]:
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestCheck:
    def test_named_graph(self, capsys):
        code, out = invoke(capsys, "check", "--class", "subunicyclic", "K3")
        assert code == 0 and out.strip() == "true"

    def test_graph6_literal(self, capsys):
        code, out = invoke(capsys, "check", "--class", "cactus", to_graph6(make_named("K4-")))
        assert code == 0 and out.strip() == "false"

    def test_file_input(self, tmp_path, capsys):
        p = tmp_path / "k3.g6"
        p.write_text(to_graph6(make_named("K3")) + "\n")
        code, out = invoke(capsys, "check", "--class", "forest", str(p))
        assert code == 0 and out.strip() == "false"

    def test_edgelist_format(self, tmp_path, capsys):
        p = tmp_path / "z.txt"
        p.write_text(to_edgelist(make_named("Z")))
        code, out = invoke(
            capsys, "check", "--format", "edgelist", "--class", "cactus", str(p)
        )
        assert code == 0 and out.strip() == "true"

    def test_json_output(self, capsys):
        code, out = invoke(capsys, "check", "--json", "--class", "pseudoforest", "2K3")
        assert code == 0
        payload = json.loads(out)
        assert payload["member"] is True

    def test_unknown_graph_is_usage_error(self, capsys):
        assert run(["check", "--class", "forest", "NOPE@@@"]) == 2


class TestSubcommands:
    def test_minor(self, capsys):
        code, out = invoke(capsys, "minor", "K3", "C5")
        assert code == 0 and out.strip() == "true"

    def test_apex(self, capsys):
        code, out = invoke(capsys, "apex", "--class", "subunicyclic", "3K3")
        assert code == 0 and out.strip() == "2"

    def test_verify_catalog_k0(self, capsys):
        code, out = invoke(capsys, "verify-catalog", "--k", "0", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["verified"] == 3 and payload["refuted"] == []

    def test_search_small(self, capsys):
        code, out = invoke(capsys, "search", "--k", "0", "--max-n", "4", "--json")
        assert code == 0
        payload = json.loads(out)
        assert [rec["n"] for rec in payload["found"]] == [4]  # K4- only

    def test_enumerate_row_ten(self, capsys):
        code, out = invoke(capsys, "enumerate", "--n", "10")
        assert code == 0
        last = out.strip().splitlines()[-1]
        assert last == "10,34982,49397"

    def test_enumerate_json_exact_strings(self, capsys):
        code, out = invoke(capsys, "enumerate", "--n", "10", "--json")
        rows = json.loads(out)["rows"]
        assert rows[-1] == {"n": 10, "t_n": "34982", "g_n": "49397"}

    def test_gen_cacti(self, capsys):
        code, out = invoke(capsys, "gen-cacti", "--k", "3", "--json")
        assert code == 0
        fams = json.loads(out)["families"]
        assert sum(1 for f in fams if f["k"] == 3) == 3

    def test_usage_error_exit_2(self):
        assert run(["definitely-not-a-command"]) == 2
        assert run(["search", "--k", "0"]) == 2  # missing --max-n


class TestDeterminism:
    def test_byte_identical_reruns(self, capsys):
        a = invoke(capsys, "search", "--k", "0", "--max-n", "5", "--json")
        b = invoke(capsys, "search", "--k", "0", "--max-n", "5", "--json")
        assert a == b


class TestProcessEntry:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "apexobs", "check", "--class", "subunicyclic", "2K3"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.strip() == "false"

    def test_refutation_exit_code(self, tmp_path):
        # a doctored catalog: K4 planted at k=0 must be refuted -> exit 1
        from apexobs.graphio import write_graph6_file
        from apexobs.graphs import complete_graph
        from apexobs.obstructions import load_catalog

        records = [r.graph for r in load_catalog(0).records] + [complete_graph(4)]
        write_graph6_file(str(tmp_path / "obs_k0.g6"), records)
        manifest = {
            "k": 0,
            "claimed_complete": False,
            "source_note": "doctored",
            "records": [
                {"name": n, "figure": "t", "row": 0, "col": i}
                for i, n in enumerate(["2K3", "K4-", "Z", "K4"])
            ],
        }
        (tmp_path / "obs_k0.json").write_text(json.dumps(manifest))
        proc = subprocess.run(
            [sys.executable, "-m", "apexobs", "verify-catalog", "--k", "0"],
            capture_output=True,
            text=True,
            env={"APEXOBS_DATA": str(tmp_path), "PATH": "/usr/bin:/bin"},
        )
        assert proc.returncode == 1
        assert "K4" in proc.stdout
