import json
import subprocess
import sys

import pytest

from dissoc import cycle, graph6_encode
from dissoc.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_phi_family(capsys):
    code, out, _ = run_cli(capsys, "phi", "--family", "U(2,2)")
    assert code == 0 and out.strip() == "5"


def test_phi_graph6(capsys):
    g6 = graph6_encode(cycle(3)).decode("ascii")
    code, out, _ = run_cli(capsys, "phi", "--graph6", g6)
    assert code == 0 and out.strip() == "3"


def test_phi_constraint(capsys):
    # the support vertex of the 3-vertex spider never sits isolated inside a set
    code, out, _ = run_cli(capsys, "phi", "--family", "T(2,0)", "--constraint", "0=in0")
    assert code == 0 and out.strip() == "0"
    code, out, _ = run_cli(capsys, "phi", "--family", "T(1,1)", "--constraint", "1=in0")
    assert code == 0 and out.strip() == "0"


def test_phi_parse_error_exit_2(capsys):
    code, _, err = run_cli(capsys, "phi", "--family", "T(oops)")
    assert code == 2 and "error" in err


def test_phi_requires_some_graph(capsys):
    code, _, err = run_cli(capsys, "phi")
    assert code == 2


def test_mds_p4(capsys):
    code, out, _ = run_cli(capsys, "mds", "--family", "P(4)")
    lines = out.strip().splitlines()
    assert code == 0
    assert lines == ["{1,2}", "{0,1,3}", "{0,2,3}", "count 3"]


def test_mds_k1(capsys):
    code, out, _ = run_cli(capsys, "mds", "--family", "T(0,0)")
    assert code == 0 and out.strip().splitlines() == ["{0}", "count 1"]


def test_mds_c6_count(capsys):
    code, out, _ = run_cli(capsys, "mds", "--family", "C(6)")
    assert out.strip().splitlines()[-1] == "count 5"


def test_gen_file(tmp_path, capsys):
    target = tmp_path / "uni5.g6"
    code, _, err = run_cli(capsys, "gen", "--class", "unicyclic", "--order", "5", "--output", str(target))
    assert code == 0
    lines = target.read_text().splitlines()
    assert lines[0].startswith("# class=unicyclic order=5 count=5")
    assert len(lines) == 6
    assert "count 5" in err


def test_gen_tree7_count(tmp_path, capsys):
    target = tmp_path / "t7.g6"
    code, _, err = run_cli(capsys, "gen", "--class", "tree", "--order", "7", "--output", str(target))
    assert code == 0
    assert len(target.read_text().splitlines()) == 12  # header + 11 graphs


def test_gen_cap_exceeded(capsys):
    code, _, err = run_cli(capsys, "gen", "--class", "unicyclic", "--order", "20")
    assert code == 2


def test_verify_exit_codes_and_text(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "main", "--orders", "3..7")
    assert code == 0
    assert out.count("[PASS]") == 5


def test_verify_json_deterministic_across_jobs(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    code, _, _ = run_cli(
        capsys, "verify", "--suite", "main", "--orders", "3..8", "--jobs", "1",
        "--format", "json", "--output", str(a),
    )
    assert code == 0
    code, _, _ = run_cli(
        capsys, "verify", "--suite", "main", "--orders", "3..8", "--jobs", "2",
        "--format", "json", "--output", str(b),
    )
    assert code == 0
    assert a.read_bytes() == b.read_bytes()
    reports = json.loads(a.read_text())
    for rep in reports:
        n = int(rep["order"])
        assert rep["min_phi"] == n // 2 + 2


def test_verify_csv(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "cycle", "--orders", "4..12", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "suite,n,graphs,min_phi,bound,pass"
    assert lines[1].startswith("cycle,4..12")
    assert lines[1].endswith("True")


def test_verify_corpus_cache(tmp_path, capsys):
    cache = tmp_path / "cache"
    code, _, _ = run_cli(
        capsys, "verify", "--suite", "main", "--orders", "5..6",
        "--cache-dir", str(cache),
    )
    assert code == 0
    entries = sorted(p.name for p in cache.iterdir())
    assert "unicyclic_5_v0.1.0.g6" in entries
    # second run reuses the cache and still passes
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "main", "--orders", "5..6",
        "--cache-dir", str(cache),
    )
    assert code == 0 and out.count("[PASS]") == 2


def test_verify_unknown_suite_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "bogus"])
    assert exc.value.code == 2


def test_orders_single_value(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "trees", "--orders", "6")
    assert code == 0 and "[PASS] trees n=6" in out


def test_console_entrypoint_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "dissoc", "phi", "--family", "C(3)"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "3"
