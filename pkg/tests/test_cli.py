import io
import json
import subprocess
import sys

import pytest

from superedge.cli import main, parse_args
from superedge.families import is_exception
from superedge.graph6 import decode_graph6


def run(argv, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cli(monkeypatch, capsys):
    return lambda argv, stdin="": run(argv, stdin, monkeypatch, capsys)


def test_parse_examples():
    a = parse_args(["analyze", "--format", "graph6", "-"])
    assert a.command == "analyze" and a.input == "-"
    v = parse_args(["verify", "--theorem", "2.2ii", "--nmax", "7", "--jobs", "8"])
    assert (v.command, v.theorem, v.nmax, v.jobs) == ("verify", "2.2ii", 7, 8)
    f = parse_args(["filter", "--free", "Z1,T112", "--super", "false"])
    assert f.command == "filter" and f.super is False


@pytest.mark.parametrize(
    "argv",
    [["bogus"], ["verify"], ["verify", "--theorem", "7"], ["filter", "--super", "maybe"], []],
)
def test_usage_errors_exit_2(cli, argv):
    assert cli(argv)[0] == 2


def test_gen_cycle4(cli):
    code, out, _ = cli(["gen", "cycle:4"])
    assert code == 0 and out == "Cl\n"


def test_gen_needs_something(cli):
    assert cli(["gen"])[0] == 2
    assert cli(["gen", "cycle:2"])[0] == 2


def test_gen_classes(cli):
    code, out, _ = cli(["gen", "--classes-upto", "5"])
    assert code == 0 and len(out.split()) == 31


def test_analyze_text_and_json(cli):
    code, out, _ = cli(["analyze"], "C~\nCl\n")
    assert code == 0
    assert "#1 C~" in out and "#2 Cl" in out and "super: False" in out
    code, out, _ = cli(["analyze", "--json"], "Cl\n")
    rec = json.loads(out)
    assert rec["report"]["lambda"] == 2 and rec["report"]["super"] is False
    assert rec["contains"]["P3"] is True and rec["contains"]["P4"] is False


def test_analyze_disconnected(cli):
    code, out, _ = cli(["analyze", "--json"], "CK\n")
    rec = json.loads(out)
    assert rec["connected"] is False and rec["components"] == [[0, 3], [1, 2]]


def test_analyze_edgelist(cli):
    code, out, _ = cli(["analyze", "--format", "edgelist", "--json"], "3 3\n0 1\n1 2\n0 2\n")
    assert code == 0 and json.loads(out)["report"]["super"] is True


def test_decode_error_exit_3(cli):
    code, _, err = cli(["analyze"], "C~\nC~x\n")
    assert code == 3
    assert "record 2" in err and "byte 2" in err


def test_skip_bad(cli):
    code, out, _ = cli(["analyze", "--skip-bad", "--json"], "C~x\nCl\n")
    assert code == 0 and json.loads(out)["index"] == 2


def test_missing_file_exit_3(cli, tmp_path):
    assert cli(["analyze", str(tmp_path / "absent.g6")])[0] == 3


def test_unknown_pattern_exit_2(cli):
    assert cli(["filter", "--free", "Q9"], "C~\n")[0] == 2


def test_filter_n5_h0p4(cli, classes7):
    from superedge.graph6 import encode_graph6
    from superedge.patterns import PairSpec, is_free

    n5 = [g for g in classes7 if g.n == 5]
    stdin = "".join(encode_graph6(g) + "\n" for g in n5)
    expected = [encode_graph6(g) for g in n5 if is_free(g, PairSpec.of("H0", "P4"))]
    code, out, err = cli(["filter", "--free", "H0,P4"], stdin)
    assert code == 0 and out.split() == expected
    code, out2, err2 = cli(["filter", "--free", "H0,P4", "--super", "true"], stdin)
    assert out2 == out
    assert f"passed: {len(expected)} of 21" in err2


def test_filter_contains_and_connected(cli):
    code, out, _ = cli(["filter", "--contains", "P4", "--connected", "true"], "Cl\nCh\nCK\n")
    assert out.split() == ["Ch"]  # the path itself; C4 and 2K2 have no induced P4
    code, out, _ = cli(["filter", "--connected", "false"], "Cl\nCK\n")
    assert out.split() == ["CK"]
    code, out, _ = cli(["filter", "--nmax", "3"], "Bw\nCl\n")
    assert out.split() == ["Bw"]


def test_custom_pattern_flag(cli, tmp_path):
    code, out, _ = cli(["filter", "--pattern", "TRI=Bw", "--free", "TRI"], "Cl\nC~\n")
    assert code == 0 and out.split() == ["Cl"]
    f = tmp_path / "tri.txt"
    f.write_text("3 3\n0 1\n1 2\n0 2\n")
    code, out, _ = cli(["filter", "--pattern", f"TRI=@{f}", "--contains", "TRI"], "Cl\nC~\n")
    assert out.split() == ["C~"]


def test_verify_theorem_21(cli):
    code, out, _ = cli(["verify", "--theorem", "2.1", "--nmax", "6"])
    assert code == 0 and "violations: 0" in out


def test_verify_json_and_sidecar(cli, tmp_path):
    side = tmp_path / "bad.g6"
    code, out, _ = cli(["verify", "--theorem", "2.2i", "--nmax", "5", "--json", "--sidecar", str(side)])
    d = json.loads(out)
    assert code == 0 and d["violation_count"] == 0 and d["exceptions"] == 1
    assert side.read_text() == ""


def test_verify_input_file(cli, tmp_path):
    f = tmp_path / "in.g6"
    f.write_text("Cl\nC~\nD@s\n")
    code, out, _ = cli(["verify", "--theorem", "2.2ii", "--input", str(f), "--json"])
    d = json.loads(out)
    assert code == 0 and d["scanned"] == 3


def test_verify_jobs_invariant(cli, monkeypatch):
    a = cli(["verify", "--theorem", "2.2ii", "--nmax", "6", "--json", "--jobs", "1"])[1]
    b = cli(["verify", "--theorem", "2.2ii", "--nmax", "6", "--json", "--jobs", "3"])[1]
    monkeypatch.setenv("SUPEREDGE_JOBS", "2")
    c = cli(["verify", "--theorem", "2.2ii", "--nmax", "6", "--json"])[1]
    assert a == b == c


def test_verify_nmax_bound(cli):
    assert cli(["verify", "--theorem", "2.1", "--nmax", "9"])[0] == 2


def test_search(cli):
    code, out, _ = cli(["search", "--pair", "K4,K13", "--nmax", "6"])
    assert code == 0 and out.splitlines()[0] == "DK["
    code, out, _ = cli(["search", "--pair", "H0,P4", "--nmax", "5", "--json"])
    d = json.loads(out)
    assert code == 0 and d["status"] == "agree" and d["predicted_sufficient"] is True


def test_search_gate_error(cli):
    assert cli(["search", "--pair", "P3,Z1"])[0] == 2


def test_pipeline_subprocess():
    gen = subprocess.run([sys.executable, "-m", "superedge", "gen", "--classes", "5"],
                         capture_output=True, text=True, check=True)
    filt = subprocess.run([sys.executable, "-m", "superedge", "filter", "--free", "Z1,T112"],
                          input=gen.stdout, capture_output=True, text=True, check=True)
    ana = subprocess.run([sys.executable, "-m", "superedge", "analyze", "--json"],
                         input=filt.stdout, capture_output=True, text=True, check=True)
    records = [json.loads(line) for line in ana.stdout.splitlines()]
    assert records
    for rec in records:
        assert rec["contains"]["Z1"] is False and rec["contains"]["T112"] is False
        # Free graphs are super unless they are exceptions (P5 and C5 at this order).
        if not rec["report"]["super"]:
            assert is_exception(decode_graph6(rec["graph6"]), "ii")
