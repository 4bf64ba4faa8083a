import orjson
import pytest
from typer.testing import CliRunner

from core.config import settings
from core.logging import setup_logging
from main import app, load_config


@pytest.fixture
def runner():
    yield CliRunner(mix_stderr=False)
    # the CLI points loguru at the runner's captured stderr
    setup_logging()


@pytest.fixture
def write_config(tmp_path):
    def write(**values):
        path = tmp_path / "run.json"
        path.write_bytes(orjson.dumps(values))
        return str(path)
    return write


def test_list_commands(runner):
    result = runner.invoke(app, ["--list-commands"])
    assert result.exit_code == 0
    assert "kaplansky" in result.stdout


def test_json_report(runner, write_config):
    settings.ORACLE_CAP = 3
    path = write_config(command="nichols-hilbert", truncation=5)
    result = runner.invoke(app, ["--config", path])
    assert result.exit_code == 0
    report = orjson.loads(result.stdout)
    assert report["passed"]
    assert report["results"]["dimensions"] == [1, 3, 4, 3, 1, 0]
    assert report["inputs"]["truncation"] == 5
    assert "output" not in report["inputs"]


def test_csv_report(runner, write_config):
    path = write_config(command="nichols-hilbert", truncation=3)
    result = runner.invoke(app, ["--config", path, "--format", "csv"])
    assert result.exit_code == 0
    assert result.stdout.splitlines() == ["degree,dimension", "0,1", "1,3", "2,4", "3,3"]


def test_command_line_overrides_the_file(runner, write_config, tmp_path):
    path = write_config(command="nichols-hilbert", yd={"dim": 2}, truncation=2)
    target = tmp_path / "report.json"
    result = runner.invoke(app, ["--config", path, "--command", "kaplansky", "--output", str(target), "--timing"])
    assert result.exit_code == 0
    assert result.stdout == ""
    report = orjson.loads(target.read_bytes())
    assert report["command"] == "kaplansky"
    assert report["wall_time_seconds"] is not None


def test_default_reports_are_byte_identical(runner, write_config):
    path = write_config(command="nichols-hilbert", truncation=3, seed=2)
    first = runner.invoke(app, ["--config", path])
    second = runner.invoke(app, ["--config", path])
    assert first.exit_code == second.exit_code == 0
    assert first.stdout == second.stdout
    assert orjson.loads(first.stdout)["wall_time_seconds"] is None


def test_cherednik_run_passes(runner, write_config):
    path = write_config(
        command="cherednik-pbw",
        group={"kind": "symmetric", "n": 3},
        cherednik={"t": 1, "c": {"(1 2)": 1}},
        truncation=3,
        samples=10,
    )
    result = runner.invoke(app, ["--config", path, "--seed", "4"])
    assert result.exit_code == 0
    assert orjson.loads(result.stdout)["inputs"]["seed"] == 4


def test_failed_check_exits_with_one(runner, write_config):
    path = write_config(command="minimality", structure={"kind": "zero"}, double="free", truncation=2)
    result = runner.invoke(app, ["--config", path])
    assert result.exit_code == 1
    assert not orjson.loads(result.stdout)["passed"]


@pytest.mark.parametrize(
    "values, code",
    [
        ({"group": {"kind": "permutations"}}, "VALIDATION_ERROR"),
        ({"command": "crawl"}, "UNKNOWN_COMMAND"),
        ({"command": "kaplansky", "yd": {"dim": 2}, "truncation": 2}, None),
    ],
)
def test_input_errors_exit_with_two(runner, write_config, values, code):
    path = write_config(**values)
    args = ["--config", path]
    if code is None:
        # kaplansky has no table
        args += ["--format", "csv"]
        code = "CONFIGURATION_ERROR"
    result = runner.invoke(app, args)
    assert result.exit_code == 2
    assert orjson.loads(result.stdout)["error"]["code"] == code


def test_missing_and_broken_config_files(runner, tmp_path):
    result = runner.invoke(app, ["--config", str(tmp_path / "absent.json")])
    assert result.exit_code == 2
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert runner.invoke(app, ["--config", str(broken)]).exit_code == 2


def test_unknown_format(runner):
    result = runner.invoke(app, ["--format", "xml"])
    assert result.exit_code == 2


def test_group_cap_is_enforced(runner, write_config):
    path = write_config(group={"kind": "symmetric", "n": 5})
    result = runner.invoke(app, ["--config", path, "--max-group-order", "20"])
    assert result.exit_code == 2
    assert orjson.loads(result.stdout)["error"]["code"] == "GROUP_OVERFLOW"


def test_load_config_merges_overrides(tmp_path):
    path = tmp_path / "run.json"
    path.write_bytes(orjson.dumps({"command": "hc-gram", "seed": 1}))
    loaded = load_config(path, {"seed": 9, "trials": None})
    assert loaded.command == "hc-gram"
    assert loaded.seed == 9
    assert loaded.trials == 3
