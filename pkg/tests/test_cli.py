import json
import subprocess
import sys
from pathlib import Path

import pytest

from affinetl import cli

GOLDEN = Path(__file__).parent / "golden"
CORPUS = json.loads((GOLDEN / "corpus.json").read_text())


def run(capsys, argv):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(autouse=True)
def no_env_cache(monkeypatch):
    monkeypatch.delenv(cli.CACHE_ENV, raising=False)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_golden_output(name, capsys, tmp_path):
    expected = (GOLDEN / f"{name}.json").read_text()
    argv = CORPUS[name]
    assert run(capsys, argv) == (0, expected, "")
    cache = ["--cache", str(tmp_path)]
    assert run(capsys, argv + cache)[1] == expected  # miss
    assert len(list(tmp_path.glob("*.json"))) == 1
    assert run(capsys, argv + cache)[1] == expected  # hit


def test_cache_hit_does_not_recompute(capsys, tmp_path, monkeypatch):
    argv = ["enumerate", "--n", "5", "--t", "1", "--cache", str(tmp_path)]
    first = run(capsys, argv)
    monkeypatch.setitem(cli.COMMANDS, "enumerate", lambda a: pytest.fail("recomputed"))
    assert run(capsys, argv) == first


def test_cache_directory_from_environment(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(cli.CACHE_ENV, str(tmp_path))
    run(capsys, ["simples", "--n", "3", "--flavor", "on"])
    assert len(list(tmp_path.glob("*.json"))) == 1


def test_presentation_flags_share_a_cache_entry(capsys, tmp_path):
    base = ["enumerate", "--n", "4", "--t", "2", "--cache", str(tmp_path)]
    compact = run(capsys, base)[1]
    pretty = run(capsys, base + ["--pretty"])[1]
    assert len(list(tmp_path.glob("*.json"))) == 1
    assert json.loads(pretty) == json.loads(compact) and pretty != compact


def test_corrupt_cache_entry_is_recomputed(capsys, tmp_path, caplog):
    argv = ["normalize", "--n", "4", "--expr", "E1*E2", "--cache", str(tmp_path)]
    good = run(capsys, argv)[1]
    (entry,) = tmp_path.glob("*.json")
    entry.write_text("{not json")
    with caplog.at_level("WARNING"):
        assert run(capsys, argv)[1] == good
    assert "corrupt" in caplog.text
    assert json.loads(entry.read_text())["ok"] is True


def test_out_file_has_the_stdout_bytes(capsys, tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, ["jones-basis", "--n", "3", "--pretty", "--out", str(target)])
    assert code == 0 and target.read_text() == out
    assert json.loads(out)["total"] == 12


def test_relcheck_passes(capsys):
    code, out, _ = run(capsys, ["relcheck", "--n", "5"])
    assert code == 0 and json.loads(out)["ok"]


def test_failed_check_exits_one(capsys):
    code, out, _ = run(capsys, ["cellcheck", "--n", "4", "--base", "window"])
    assert code == 1 and not json.loads(out)["ok"]


@pytest.mark.parametrize("argv", [
    ["simples", "--n", "4", "--flavor", "dn"],
    ["normalize", "--n", "4", "--expr", "E1 +"],
    ["normalize", "--n", "4", "--expr", "E9"],
    ["normalize", "--n", "4", "--expr", "alpha"],
    ["repmat", "--n", "5", "--tau", "2"],
    ["gram", "--n", "4", "--tau", "2", "--alpha", "0"],
    ["enumerate", "--n", "9", "--t", "1"],
    ["enumerate", "--n", "4"],
    ["frobnicate"],
])
def test_usage_errors_exit_two(argv, capsys):
    code, out, err = run(capsys, argv)
    assert code == 2 and out == "" and err


def test_max_n_can_be_raised(capsys):
    code, out, _ = run(capsys, ["enumerate", "--n", "9", "--t", "1", "--max-n", "9"])
    assert code == 0 and json.loads(out)["count"] == 126


def test_repmat_and_gram(capsys):
    code, out, _ = run(capsys, ["repmat", "--n", "3", "--tau", "1", "--flavor", "dn"])
    data = json.loads(out)
    assert code == 0 and data["dim"] == 3 and set(data["matrices"]) >= {"E1", "u"}
    code, out, _ = run(capsys, ["gram", "--n", "4", "--tau", "2", "--check-aux"])
    assert code == 0 and json.loads(out)["rank"] == 4


def test_propcheck_depends_on_seed(capsys, tmp_path):
    base = ["propcheck", "--n", "5", "--samples", "50", "--cache", str(tmp_path)]
    a = run(capsys, base + ["--seed", "1"])
    b = run(capsys, base + ["--seed", "2"])
    assert a[0] == b[0] == 0
    assert len(list(tmp_path.glob("*.json"))) == 2


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "affinetl.cli", "enumerate", "--n", "3",
                          "--t", "3"], capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["count"] == 1
