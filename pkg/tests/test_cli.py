import json
import subprocess
import sys

import pytest

from regmaps import cli
from regmaps.tables import REFERENCE_TABLES, TableSpec, compute_table, worker_count


def run(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["oneface", "rooted", "--d", "3", "--genus", "2"], "105"),
        (["multi", "unrooted", "--d", "6", "--genus", "0", "--vertices", "1"], "2"),
        (["oneface", "rooted", "--d", "6", "--genus", "3"], "0"),
        (["oneface", "unrooted", "--d", "4", "--genus", "2"], "6"),
        (["multi", "rooted", "--d", "3", "--genus", "0", "--vertices", "6"], "336"),
        (["oracle", "--d", "3", "--vertices", "2", "--genus", "0", "--unrooted"], "2"),
        (["oracle", "--d", "4", "--vertices", "1", "--genus", "1", "--one-face"], "1"),
    ],
)
def test_single_cell_commands(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == expected + "\n"


def test_oracle_genus_listing(capsys):
    code, out, _ = run(capsys, "oracle", "--d", "3", "--vertices", "2")
    assert code == 0 and out == "0,4\n1,1\n"


def test_oracle_census(capsys):
    code, out, _ = run(capsys, "oracle", "--d", "3", "--vertices", "2", "--census")
    assert code == 0 and len(out.splitlines()) == 5


def test_oracle_size_limit(capsys):
    code, _, err = run(capsys, "oracle", "--d", "3", "--vertices", "6")
    assert code != 0 and "size limit" in err


def test_orbifold_listing(capsys):
    code, out, _ = run(capsys, "orbifolds", "--genus", "1", "--period", "4")
    assert code == 0 and "(1,0,4,[2,4,4]) epi0=2" in out.splitlines()
    code, out, _ = run(capsys, "orbifolds", "--genus", "2", "--period", "4", "--raw")
    assert code == 0 and "rejected" in out and "admissible" in out


def test_parse_errors(capsys):
    for argv in ([], ["oneface"], ["oneface", "rooted", "--d", "x", "--genus", "1"], ["bogus"]):
        code, _, err = run(capsys, *argv)
        assert code != 0 and "usage" in err
    code, _, err = run(capsys, "table", "--kind", "multi-rooted", "--d", "3", "--genus-max", "1")
    assert code != 0 and "--vertices-max" in err


@pytest.mark.parametrize("table", REFERENCE_TABLES, ids=lambda t: f"table{t.number:02d}")
def test_table_csv_matches_fixture(capsys, table):
    spec = table.spec
    degrees = ",".join(map(str, spec.degrees))
    argv = ["table", "--kind", spec.kind, "--d", degrees, "--genus-max", str(spec.genus_max)]
    if spec.vertices_max:
        argv += ["--vertices-max", str(spec.vertices_max)]
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == table.fixture_csv()


def test_table_formats(capsys):
    base = ["table", "--kind", "multi-unrooted", "--d", "4", "--genus-max", "1", "--vertices-max", "2"]
    code, out, _ = run(capsys, *base, "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "multi-unrooted" and payload["d"] == 4
    assert payload["rows"][0] == {"g": 0, "v": 1, "count": "1"}
    assert all(isinstance(r["count"], str) for r in payload["rows"])
    code, out, _ = run(capsys, *base, "--format", "md")
    lines = out.splitlines()
    assert lines[0] == "| g | v | count |" and len(lines) == 2 + 4
    code, out, _ = run(capsys, "table", "--kind", "oneface-rooted", "--d", "3-4", "--genus-max", "2")
    assert out == "d,g,count\n3,1,1\n3,2,105\n4,1,1\n4,2,45\n"


def test_cache_flag(capsys, tmp_path):
    path = tmp_path / "cache.json"
    argv = ["multi", "rooted", "--d", "4", "--genus", "1", "--vertices", "3", "--cache", str(path)]
    assert run(capsys, *argv)[1] == "198\n"
    assert json.loads(path.read_text())["entries"]
    assert run(capsys, *argv)[1] == "198\n"


def test_verify_suites(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "tables")
    assert code == 0 and out.rstrip().endswith("all checks passed")


def test_output_is_byte_deterministic():
    argv = [sys.executable, "-m", "regmaps", "table", "--kind", "multi-unrooted", "--d", "3", "--genus-max", "2", "--vertices-max", "8"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True, env={"REGMAPS_THREADS": "2", "PATH": ""}).stdout
    assert first == second and first.startswith(b"g,v,count\n")


def test_worker_pool_setting(monkeypatch):
    spec = TableSpec("multi-rooted", (3, 4), 0, 2, vertices_max=4)
    serial = compute_table(spec, workers=1)
    assert compute_table(spec, workers=2) == serial
    monkeypatch.setenv("REGMAPS_THREADS", "0")
    assert worker_count() == 1
    monkeypatch.setenv("REGMAPS_THREADS", "3")
    assert worker_count() == 3
    monkeypatch.delenv("REGMAPS_THREADS")
    assert worker_count() == 1
