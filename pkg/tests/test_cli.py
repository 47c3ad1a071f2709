import json
import shutil

import pytest

from bmq import cli as cli_module
from bmq.cli import main
from bmq.config import CORPUS_DIR, DATA_DIR
from bmq.paths import parse_polynomial

from test_moves import same_sign_poke

KNOT = str(CORPUS_DIR / "knots" / "4_1.pdk")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_invariant_flagship(capsys):
    code, out, _ = run(capsys, "invariant", KNOT, "-v", "flagship")
    assert code == 0 and out.strip() == "4xy^4 + 6xy^3"
    code, out, _ = run(capsys, "--format", "json", "invariant", KNOT, "-v", "flagship")
    data = json.loads(out)
    assert data["counting_invariant"] == 3 and data["polynomial"] == "4xy^4 + 6xy^3"
    code, out, _ = run(capsys, "--format", "latex", "invariant", KNOT, "-v", "flagship")
    assert out.strip() == r"4_1 & 4xy^4 + 6xy^3 \\"


def test_invariant_explicit_files(capsys):
    code, out, _ = run(capsys, "invariant", KNOT, "--biquandle", str(DATA_DIR / "biquandles" / "q3.json"),
                       "--module", str(DATA_DIR / "modules" / "q3-z3.json"))
    assert code == 0 and out.strip() == "4xy^4 + 6xy^3"


def test_empty_file_exit_1(capsys, tmp_path):
    empty = tmp_path / "empty.pdk"
    empty.write_text("")
    code, _, err = run(capsys, "invariant", str(empty), "-v", "flagship")
    assert code == 1 and "error" in err


def test_invalid_diagram_exit_1(capsys, tmp_path):
    bad = tmp_path / "bad.pdk"
    bad.write_text("C+[1,2,3,4]\n")
    assert run(capsys, "colorings", str(bad), "-v", "flagship")[0] == 1


def test_budget_exit_2(capsys):
    code, _, err = run(capsys, "--budget", "3", "invariant", KNOT, "-v", "flagship")
    assert code == 2 and "budget" in err


def test_check_commands(capsys):
    code, out, _ = run(capsys, "check-biquandle", str(DATA_DIR / "biquandles" / "q3.json"))
    assert code == 0 and out.strip() == "ok"
    code, out, _ = run(capsys, "endos", str(DATA_DIR / "biquandles" / "q3.json"))
    assert code == 0 and out.split("\n")[:3] == ["1 2 3", "2 1 3", "3 3 3"]
    code, out, _ = run(capsys, "check-module", str(DATA_DIR / "biquandles" / "sf3.json"),
                       str(DATA_DIR / "modules" / "sf3-z3.json"))
    assert code == 0


def test_colorings_beads_quiver(capsys):
    code, out, _ = run(capsys, "--format", "json", "colorings", KNOT, "-v", "flagship")
    assert code == 0 and len(json.loads(out)) == 3
    code, out, _ = run(capsys, "--format", "json", "beads", KNOT, "-v", "flagship", "--dump-matrix")
    assert code == 0 and [r["rank"] for r in json.loads(out)] == [1, 1, 1]
    code, out, _ = run(capsys, "quiver", KNOT, "-v", "flagship", "--dot")
    assert code == 0 and out.startswith("digraph")


def test_composite_modulus_warns(capsys, tmp_path):
    path = tmp_path / "z4.json"
    path.write_text(json.dumps({"m": 4, "t": [[1] * 3] * 3, "s": [[0] * 3] * 3, "r": [[1] * 3] * 3}))
    code, out, err = run(capsys, "invariant", KNOT, "--biquandle", str(DATA_DIR / "biquandles" / "q3.json"),
                         "--module", str(path))
    assert code == 0 and "not prime" in err
    # constant coefficients: beads are constant along the knot, so every rank is 1
    assert all(x == 1 for x, _ in parse_polynomial(out.strip()).terms)


def test_tabulate_cache_and_jobs(capsys, tmp_path):
    folder = str(CORPUS_DIR / "surface")
    cache = str(tmp_path / "cache")
    code, first, err = run(capsys, "--cache-dir", cache, "tabulate", folder, "-v", "surface")
    assert code == 0 and "0 hits, 5 computed" in err
    code, second, err = run(capsys, "--cache-dir", cache, "tabulate", folder, "-v", "surface")
    assert code == 0 and "5 hits, 0 computed" in err and second == first
    code, third, _ = run(capsys, "--jobs", "2", "tabulate", folder, "-v", "surface", "--no-cache")
    assert third == first
    assert first.splitlines()[0] == "2_1\t3\t4xy^2"


def test_tabulate_env_cache_dir(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("BMQ_CACHE_DIR", str(tmp_path / "env"))
    folder = str(CORPUS_DIR / "knots")
    run(capsys, "tabulate", folder, "-v", "flagship")
    assert any((tmp_path / "env").iterdir())


def test_tabulate_reports_per_file_errors(capsys, tmp_path):
    for name in ("3_1", "4_1"):
        shutil.copy(CORPUS_DIR / "knots" / f"{name}.pdk", tmp_path)
    (tmp_path / "broken.pdk").write_text("C+[1,2\n")
    code, out, _ = run(capsys, "tabulate", str(tmp_path), "-v", "flagship", "--no-cache")
    lines = out.splitlines()
    assert code == 1
    assert lines[0].startswith("3_1\t") and lines[1] == "4_1\t3\t4xy^4 + 6xy^3"
    assert lines[2].startswith("broken\terror:")


def test_tabulate_empty_directory(capsys, tmp_path):
    assert run(capsys, "tabulate", str(tmp_path), "-v", "flagship")[0] == 1


def test_fuzz_clean(capsys):
    code, out, _ = run(capsys, "fuzz", KNOT, "-v", "flagship", "--trials", "5", "--seed", "4")
    assert code == 0 and "invariants preserved" in out


def test_fuzz_writes_reproducer(capsys, tmp_path, monkeypatch):
    def broken(D, count, rng, kinds=None):
        return same_sign_poke(D, 1, 2), []

    monkeypatch.setattr(cli_module, "random_edits", broken)
    repro = tmp_path / "fail.pdk"
    code, out, _ = run(capsys, "fuzz", str(CORPUS_DIR / "classical" / "L2a1.pdk"), "-v", "classical-a",
                       "--trials", "2", "--reproducer", str(repro))
    assert code == 1 and "violation" in out
    assert run(capsys, "invariant", str(repro), "-v", "classical-a")[0] == 0
