import json
import math
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from nrlphi4 import cli
from nrlphi4.errors import ConfigError, ContractError


def test_override_precedence():
    cfg = cli.parse_config("kappa = 100\n", ["--kappa", "200"])
    assert cfg["kappa"] == 200.0


def test_empty_file_defaults():
    cfg = cli.parse_config("")
    assert all(cfg[k] == spec[1] for k, spec in cli.KEYS.items())
    assert cfg["seed"] == 0


def test_comments_and_blank_lines():
    cfg = cli.parse_config("# header\n\nU = -3   # attractive\nperiodic = false\n")
    assert cfg["U"] == -3.0 and cfg["periodic"] is False


@pytest.mark.parametrize("text, line", [("kappa = -1\n", 1), ("\n\nbogus = 3\n", 3), ("a line\n", 1), ("k =\n", 1)])
def test_bad_lines(text, line):
    with pytest.raises(ConfigError) as info:
        cli.parse_config(text)
    assert info.value.line == line


def test_conflicting_units():
    with pytest.raises(ConfigError):
        cli.parse_config("kappa = 3\neps = 1\n")
    cfg = cli.parse_config("kappa = 3\n", ["--eps", "0.5"])
    assert cfg["kappa"] == pytest.approx(2 * math.pi)


@given(st.floats(allow_nan=False, allow_infinity=False, min_value=1e-300, max_value=1e300))
def test_numeric_round_trip(x):
    text = cli._format_number(x)
    assert float(text) == x
    assert cli.parse_config(f"kappa = {text}\n")["kappa"] == x


def test_csv_contract(tmp_path):
    rows = [{"k": 1, "reT": 0.8, "imT": -0.4}]
    assert cli.format_table(rows) == "k,reT,imT\n1,0.8,-0.4\n"
    path = tmp_path / "t.csv"
    cli.emit_table(rows, "csv", str(path))
    first = path.read_bytes()
    cli.emit_table(rows, "csv", str(path))
    assert path.read_bytes() == first == b"k,reT,imT\n1,0.8,-0.4\n"
    assert json.loads(cli.format_table(rows, "json")) == [{"k": 1, "reT": 0.8, "imT": -0.4}]


def test_contract_errors():
    with pytest.raises(ContractError):
        cli.format_table([{"a": 1}, {"b": 2}])
    with pytest.raises(ContractError):
        cli.format_table([])


def test_exit_codes(tmp_path, capsys):
    assert cli.main(["bound", "--n_points", "2"]) == 0
    assert cli.main(["bound", "--nonsense", "2"]) == 2
    assert cli.main(["bound", "--config", str(tmp_path / "missing.cfg")]) == 2
    # superluminal boost grid -> solver error
    assert cli.main(["passivity", "--u_max", "1.5", "--n_points", "2"]) == 3
    assert cli.main(["bound", "--n_points", "2", "--out", str(tmp_path / "no" / "such" / "dir.csv")]) == 4
    capsys.readouterr()


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "nrlphi4", "passivity", "--n_points", "2"],
                         capture_output=True, text=True, check=True).stdout
    assert out.splitlines()[0].startswith("u,min_rel")
