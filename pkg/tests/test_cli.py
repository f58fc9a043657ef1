import csv
import json

import pytest

from gencol.cli import main
from gencol.graph import write_edge_list
from gencol.named import named_graph
from gencol.reach import read_order


@pytest.fixture
def files(tmp_path):
    def make(name, graph):
        path = tmp_path / name
        write_edge_list(named_graph(graph) if isinstance(graph, str) else graph, path)
        return str(path)

    return make


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCompute:
    def test_exact_wcol(self, capsys, files, tmp_path):
        witness = tmp_path / "w.order"
        code, out, _ = run(capsys, "compute", "wcol", files("p5", "path(5)"), "-r", 2, "--witness", witness)
        assert code == 0 and "wcol_2 = 3" in out and "certified" in out
        assert len(read_order(witness)) == 5

    def test_heuristic_is_an_upper_bound(self, capsys):
        code, out, _ = run(capsys, "compute", "wcol", "named:petersen", "-r", 1, "--heuristic", "degeneracy")
        assert code == 0 and "wcol_1 <= 4" in out and "upper bound" in out

    def test_edgeless_adm(self, capsys, tmp_path):
        path = tmp_path / "e"
        path.write_text("4 0\n")
        code, out, _ = run(capsys, "compute", "adm", path, "-r", 1, "--exact")
        assert code == 0 and "adm_1 = 1" in out

    def test_json_report(self, capsys, files, tmp_path):
        report = tmp_path / "r.json"
        run(capsys, "compute", "wcol", files("p5", "path(5)"), "-r", 2, "--json", report, "--quiet")
        data = json.loads(report.read_text())
        assert data["values"] == {"value": 3, "exact": True}
        assert set(data) == {"command", "input_hash", "params", "values", "bounds", "witness_files", "elapsed_ms", "seed"}

    def test_order_file(self, capsys, files, tmp_path):
        order = tmp_path / "o"
        order.write_text("5 4 3 2 1\n")
        code, out, _ = run(capsys, "compute", "col", files("p5", "path(5)"), "-r", 4, "--order", order)
        assert code == 0 and "col_4 <= 2" in out

    def test_quiet(self, capsys):
        code, out, _ = run(capsys, "compute", "wcol", "named:clique(3)", "-r", 1, "--quiet")
        assert code == 0 and out == ""


class TestErrors:
    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "compute", "wcol", tmp_path / "nope", "-r", 1)
        assert code == 5 and "gencol" in err

    def test_bad_graph(self, capsys, tmp_path):
        path = tmp_path / "bad"
        path.write_text("2 1\n0 0\n")
        code, _, err = run(capsys, "compute", "wcol", path, "-r", 1)
        assert code == 2 and "self-loop" in err

    def test_size_cap(self, capsys):
        code, _, _ = run(capsys, "compute", "wcol", "named:heawood", "-r", 1)
        assert code == 2

    def test_budget(self, capsys):
        code, _, err = run(capsys, "compute", "wcol", "named:petersen", "-r", 3, "--budget", 5)
        assert code == 3 and "bounds" in err

    def test_usage(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["compute", "wcol"])
        assert info.value.code != 0


class TestGenAndOrders:
    def test_gkr_files(self, capsys, tmp_path):
        prefix = tmp_path / "g12"
        code, out, _ = run(capsys, "gen", "gkr", "-k", 1, "-r", 2, "--out", prefix)
        assert code == 0 and "n=13" in out
        code, out, _ = run(capsys, "td", "validate", f"{prefix}.edges", f"{prefix}.td")
        assert code == 0 and out.startswith("valid")

    def test_gkr_estimate_and_cap(self, capsys):
        code, out, _ = run(capsys, "gen", "gkr", "-k", 2, "-r", 2, "--estimate")
        assert code == 0 and "9331" in out
        code, _, _ = run(capsys, "gen", "gkr", "-k", 2, "-r", 2, "--cap", 100)
        assert code == 3

    def test_named_subdivide_complement(self, capsys, tmp_path):
        out = tmp_path / "c4"
        assert run(capsys, "gen", "named", "cycle(4)", "--out", out)[0] == 0
        code, text, _ = run(capsys, "gen", "subdivide", out, "-s", 1)
        assert code == 0 and text.startswith("8 8")
        code, text, _ = run(capsys, "gen", "complement", out)
        assert code == 0 and text.splitlines() == ["4 2", "0 2", "1 3"]

    def test_order_command(self, capsys, tmp_path):
        out = tmp_path / "o"
        code, text, _ = run(capsys, "order", "named:petersen", "-r", 2, "--heuristic", "greedy-adm", "--out", out)
        assert code == 0 and "adm_2" in text
        assert len(read_order(out)) == 10


class TestDecompositions:
    def test_smooth_and_order(self, capsys, tmp_path, files):
        graph = files("p5", "path(5)")
        td = tmp_path / "p.td"
        td.write_text("s td 2 3 5\nb 1 0 1 2\nb 2 2 3 4\n1 2\n")
        code, out, _ = run(capsys, "td", "order", graph, td)
        assert code == 2
        smooth = tmp_path / "s.td"
        assert run(capsys, "td", "smooth", graph, td, "--out", smooth)[0] == 0
        code, out, _ = run(capsys, "td", "order", graph, smooth, "-r", 3)
        assert code == 0 and "<= C(5,2) = 10" in out

    def test_invalid_exit_code(self, capsys, tmp_path, files):
        td = tmp_path / "bad.td"
        td.write_text("s td 1 2 3\nb 1 0 1\n")
        code, out, _ = run(capsys, "td", "validate", files("p3", "path(3)"), td)
        assert code == 1 and "invalid" in out

    def test_root_option(self, capsys, tmp_path, files):
        graph = files("p3", "path(3)")
        td = tmp_path / "p.td"
        td.write_text("s td 2 2 3\nb 1 0 1\nb 2 1 2\n1 2\n")
        code, out, _ = run(capsys, "td", "order", graph, td, "--root", 1)
        # vertices 1 and 2 sit in the new root bag, 0 comes last
        assert code == 0 and out.split() == ["3", "1", "2"]


class TestCovers:
    def test_build_and_check(self, capsys, tmp_path):
        cover = tmp_path / "c"
        report = tmp_path / "r.json"
        code, out, _ = run(capsys, "cover", "build", "named:petersen", "-r", 1, "--out", cover, "--json", report)
        assert code == 0
        assert json.loads(report.read_text())["values"]["is_cover"] is True
        assert run(capsys, "cover", "check", "named:petersen", cover, "-r", 1)[0] == 0

    def test_check_failure(self, capsys, tmp_path):
        cover = tmp_path / "c"
        cover.write_text("0: 0\n1: 1\n2: 2\n")
        assert run(capsys, "cover", "check", "named:path(3)", cover, "-r", 1)[0] == 1

    def test_project(self, capsys, tmp_path):
        base = tmp_path / "h"
        sub = tmp_path / "g"
        cover = tmp_path / "c"
        run(capsys, "gen", "named", "petersen", "--out", base)
        run(capsys, "gen", "subdivide", base, "-s", 2, "--out", sub)
        run(capsys, "cover", "build", sub, "-r", 6, "--out", cover)
        code, out, _ = run(capsys, "cover", "project", sub, base, cover, "-s", 2, "-r", 2)
        assert code == 0 and out.startswith("valid")


class TestReductionAndExperiments:
    def test_reduce(self, capsys, tmp_path, files):
        prefix = tmp_path / "red"
        code, out, _ = run(capsys, "reduce", "bcbs", files("c4", "cycle(4)"), "-k", 2, "--out", prefix, "--verify")
        assert code == 0 and "consistent" in out
        assert json.loads((tmp_path / "red.json").read_text()) == {"k": 2, "n": 4, "threshold": 2}

    def test_reduce_not_bipartite(self, capsys):
        assert run(capsys, "reduce", "bcbs", "named:cycle(5)", "-k", 1)[0] == 2

    def test_tgrad(self, capsys):
        code, out, _ = run(capsys, "tgrad", "named:clique(4)", "-r", 0)
        assert code == 0 and "3/2" in out

    def test_girth_csv_rows(self, capsys, tmp_path):
        table = tmp_path / "t.csv"
        code, out, _ = run(capsys, "exp", "girth-lb", "named:robertson", "-r", 2, "--samples", 10, "--csv", table)
        assert code == 0 and "holds" in out
        rows = list(csv.DictReader(table.open()))
        assert len(rows) == 13 and rows[0]["bound"] == "5"

    def test_cauchy(self, capsys):
        code, out, _ = run(capsys, "exp", "cauchy", "named:petersen", "-r", 1, "--samples", 20)
        assert code == 0 and "holds" in out

    def test_adm_bound(self, capsys):
        code, out, _ = run(capsys, "exp", "adm-bound", "named:clique(4)", "-r", 1)
        assert code == 0 and "81/4" in out

    def test_precondition(self, capsys):
        assert run(capsys, "exp", "girth-lb", "named:cycle(8)", "-r", 1, "--samples", 1)[0] == 2

    def test_reports_are_reproducible(self, capsys, tmp_path):
        reports = []
        for i in range(2):
            path = tmp_path / f"{i}.json"
            run(capsys, "exp", "cauchy", "named:petersen", "-r", 1, "--samples", 15, "--seed", 3, "--json", path)
            data = json.loads(path.read_text())
            data.pop("elapsed_ms")
            reports.append(data)
        assert reports[0] == reports[1] and reports[0]["seed"] == 3


def test_module_entry_point():
    import subprocess
    import sys

    done = subprocess.run(
        [sys.executable, "-m", "gencol", "compute", "wcol", "named:clique(4)", "-r", "2"],
        capture_output=True,
        text=True,
    )
    assert done.returncode == 0 and "wcol_2 = 4" in done.stdout
